"""Structured check results and their JSON / table renderings.

Every verification entry point returns a Report: an ordered list of named
clauses, each pass / fail / certified, with a counterexample witness on
failure. Reports serialize to JSON with sorted keys and no volatile content,
so identical configurations produce byte-identical output.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .elements import SymMat, Vec

PASS = "pass"
FAIL = "fail"
CERTIFIED = "certified"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one boolean check, with a counterexample on failure.

    certified marks checks that hold analytically for the structure at hand
    and were only spot checked numerically.
    """

    ok: bool
    witness: Any = None
    checked: int = 0
    note: str = ""
    certified: bool = False

    def as_clause(self, name: str) -> "Clause":
        status = FAIL if not self.ok else (CERTIFIED if self.certified else PASS)
        return Clause(name, status, checked=self.checked, witness=self.witness, note=self.note)


@dataclass
class Clause:
    name: str
    status: str
    checked: int = 0
    witness: Any = None
    note: str = ""
    items: Any = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class Report:
    title: str
    clauses: list[Clause] = field(default_factory=list)

    def add(self, clause: Clause) -> Clause:
        self.clauses.append(clause)
        return clause

    def extend(self, other: "Report") -> None:
        self.clauses.extend(other.clauses)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses)

    def first_failure(self) -> Clause | None:
        return next((c for c in self.clauses if not c.ok), None)


def jsonable(x: Any) -> Any:
    """Map package objects onto plain JSON values, exactly (no floats)."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, Vec):
        return list(x.coords)
    if isinstance(x, SymMat):
        return [[jsonable(v) for v in row] for row in x.rows]
    method = getattr(x, "jsonable", None)
    if callable(method):
        return jsonable(method())
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=repr)
    if dataclasses.is_dataclass(x):
        out = {}
        for f in dataclasses.fields(x):
            v = getattr(x, f.name)
            if f.name == "items" and v is None:
                continue
            out[f.name] = jsonable(v)
        return out
    raise TypeError(f"cannot serialize {type(x).__name__}")


def render_json(data: Any) -> str:
    return json.dumps(jsonable(data), indent=2, sort_keys=True) + "\n"


def _clause_rows(report_dict: dict, prefix: str = "") -> list[tuple[str, str, str, str]]:
    rows = []
    for clause in report_dict.get("clauses", []):
        rows.append(
            (
                prefix + clause["name"],
                clause["status"],
                str(clause.get("checked", 0)),
                clause.get("note", ""),
            )
        )
    for name, section in sorted(report_dict.get("sections", {}).items()):
        if isinstance(section, dict):
            rows.extend(_clause_rows(section, prefix=f"{name}."))
    return rows


def render_table(data: Any) -> str:
    """Aligned plain-text view of a report dict (same content as the JSON)."""
    d = jsonable(data)
    rows = _clause_rows(d)
    header = ("clause", "status", "checked", "note")
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(4)
    ]
    lines = []
    for r in [header] + rows:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(4)).rstrip())
    verdict = "ok" if d.get("ok", True) else "FAILED"
    lines.append(verdict)
    return "\n".join(lines) + "\n"
