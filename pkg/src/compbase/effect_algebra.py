"""The unit interval of a unital group as a partial algebra.

The carrier is E = {e : 0 <= e <= u}.  The partial sum e (+) f is the group
sum when it stays below the unit and is undefined otherwise; undefined is an
ordinary value here (None), not an error.  On top of that partial operation
the module builds Mackey decompositions, sub-effect algebras, the normality
condition used by compression bases, and the center.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Optional

from .models import NotEnumerableError
from .reporting import CheckResult


class MembershipError(ValueError):
    """An argument lies outside the algebra it was claimed to belong to."""


@dataclass(frozen=True)
class EffectAlgebra:
    """Interval [0, u] of a structure, with the partial sum.

    The structure can be a full model or a substructure view; everything
    here goes through its order and membership predicates.
    """

    structure: Any

    @property
    def unit(self):
        return self.structure.unit

    @property
    def zero(self):
        return self.structure.zero

    @property
    def elements(self) -> Optional[tuple]:
        """All effects in deterministic order, or None when not enumerable."""

        if not self.structure.finite:
            return None
        return self.structure.interval()

    def contains(self, e) -> bool:
        return (
            self.structure.is_member(e)
            and self.structure.is_positive(e)
            and self.structure.leq(e, self.unit)
        )

    def _require(self, e, name: str):
        if not self.contains(e):
            raise MembershipError(f"{name} is not an effect of this algebra")

    def orthosupplement(self, e):
        """The unique f with e (+) f = u."""

        self._require(e, "e")
        return self.unit - e

    def oplus(self, e, f):
        """Partial sum: e + f when that is still an effect, else None."""

        self._require(e, "e")
        self._require(f, "f")
        s = e + f
        if not self.structure.leq(s, self.unit):
            return None
        return s

    def defined(self, e, f) -> bool:
        return self.oplus(e, f) is not None


@dataclass(frozen=True)
class MackeyTriple:
    """Witness that e and f decompose as e = e1 + d, f = f1 + d.

    The triple certifies compatibility: e1, f1, d are effects and
    e1 + f1 + d stays below the unit.
    """

    e1: Any
    f1: Any
    d: Any

    def jsonable(self):
        return {"e1": self.e1, "f1": self.f1, "d": self.d}


@dataclass(frozen=True)
class SubEffectAlgebra:
    """A subset of the effects, wrapped with its parent algebra.

    Construction does not validate closure; run is_sub_effect_algebra to
    certify the laws.
    """

    algebra: EffectAlgebra
    members: frozenset

    def __contains__(self, e) -> bool:
        return e in self.members

    def sorted_members(self) -> tuple:
        return tuple(sorted(self.members, key=lambda m: m.sort_key()))


def mackey_decompositions(
    algebra: EffectAlgebra,
    e,
    f,
    within: Optional[SubEffectAlgebra] = None,
) -> tuple[MackeyTriple, ...]:
    """All Mackey triples for the pair (e, f), in deterministic order.

    A triple arises from each d with d <= e, d <= f and e + f - d <= u; the
    summands are then e - d and f - d.  With `within`, the search is
    restricted so that d, e - d and f - d all lie in the given sub-effect
    algebra (e and f must be members themselves).

    Without `within` the full interval is swept, so the structure has to be
    enumerable.
    """

    algebra._require(e, "e")
    algebra._require(f, "f")
    leq = algebra.structure.leq
    unit = algebra.unit

    if within is not None:
        if e not in within or f not in within:
            raise MembershipError("e and f must belong to the sub-effect algebra")
        pool = within.sorted_members()
        member = within.members.__contains__
    else:
        pool = algebra.elements
        if pool is None:
            raise NotEnumerableError(
                "decomposition search over a non-enumerable interval needs "
                "an explicit sub-effect algebra to search within"
            )
        member = None

    triples = []
    for d in pool:
        if not (leq(d, e) and leq(d, f)):
            continue
        if not leq(e + f - d, unit):
            continue
        e1 = e - d
        f1 = f - d
        if member is not None and not (member(e1) and member(f1)):
            continue
        triples.append(MackeyTriple(e1, f1, d))
    return tuple(triples)


def is_mackey_compatible(
    algebra: EffectAlgebra,
    e,
    f,
    within: Optional[SubEffectAlgebra] = None,
) -> bool:
    """Whether at least one Mackey triple exists for (e, f)."""

    return len(mackey_decompositions(algebra, e, f, within=within)) > 0


def is_sub_effect_algebra(algebra: EffectAlgebra, members: Iterable) -> CheckResult:
    """Check that a finite set of effects is closed under the algebra laws.

    Required: every member is an effect, 0 and u belong, orthosupplements
    stay inside, and defined partial sums of members stay inside.
    """

    mset = frozenset(members)
    ordered = sorted(mset, key=lambda m: m.sort_key())
    checked = 0

    for m in ordered:
        checked += 1
        if not algebra.contains(m):
            return CheckResult(
                False, witness={"check": "member_is_effect", "element": m}, checked=checked
            )
    if algebra.zero not in mset:
        return CheckResult(False, witness={"check": "contains_zero"}, checked=checked)
    if algebra.unit not in mset:
        return CheckResult(False, witness={"check": "contains_unit"}, checked=checked)
    for m in ordered:
        checked += 1
        comp = algebra.unit - m
        if comp not in mset:
            return CheckResult(
                False,
                witness={"check": "orthosupplement_closed", "element": m, "missing": comp},
                checked=checked,
            )
    for a in ordered:
        for b in ordered:
            checked += 1
            s = algebra.oplus(a, b)
            if s is not None and s not in mset:
                return CheckResult(
                    False,
                    witness={"check": "partial_sum_closed", "e": a, "f": b, "missing": s},
                    checked=checked,
                )
    return CheckResult(True, checked=checked)


def is_normal_subalgebra(algebra: EffectAlgebra, sub: SubEffectAlgebra) -> CheckResult:
    """Exhaustive normality check over an enumerable interval.

    Normality: whenever e + f + d <= u with e + d and f + d both in the
    subalgebra, d itself must be in the subalgebra.  The scan only visits
    candidate d outside the subalgebra and reconstructs e and f from member
    sums, which keeps the search at |E| * |P|^2 instead of |E|^3.
    """

    elements = algebra.elements
    if elements is None:
        raise NotEnumerableError("normality scan requires an enumerable interval")
    leq = algebra.structure.leq
    unit = algebra.unit
    members = sub.sorted_members()
    contains = algebra.contains
    checked = 0

    for d in elements:
        if d in sub.members:
            continue
        # e + d in P means e = p - d for some member p with d <= p.
        firsts = []
        for p in members:
            if leq(d, p):
                firsts.append(p - d)
        for e in firsts:
            if not contains(e):
                continue
            for q in members:
                if not leq(d, q):
                    continue
                f = q - d
                if not contains(f):
                    continue
                checked += 1
                if leq(e + f + d, unit):
                    return CheckResult(
                        False,
                        witness={"e": e, "f": f, "d": d},
                        checked=checked,
                    )
    return CheckResult(True, checked=checked)


def center(algebra: EffectAlgebra) -> SubEffectAlgebra:
    """Central effects of an enumerable algebra.

    c is central when every effect f splits uniquely as f = f1 + f2 with
    f1 <= c and f2 <= u - c.  The result is validated as a normal
    sub-effect algebra before it is returned; a failure there would mean
    the characterization itself is broken, so it raises.
    """

    elements = algebra.elements
    if elements is None:
        raise NotEnumerableError("center computation requires an enumerable interval")
    leq = algebra.structure.leq
    unit = algebra.unit

    central = []
    for c in elements:
        comp = unit - c
        central_so_far = True
        for f in elements:
            splits = 0
            for f1 in elements:
                if not leq(f1, f):
                    continue
                f2 = f - f1
                if leq(f1, c) and leq(f2, comp):
                    splits += 1
                    if splits > 1:
                        break
            if splits != 1:
                central_so_far = False
                break
        if central_so_far:
            central.append(c)

    sub = SubEffectAlgebra(algebra, frozenset(central))
    closure = is_sub_effect_algebra(algebra, sub.members)
    if not closure.ok:
        raise RuntimeError(f"central effects failed closure: {closure.witness!r}")
    normal = is_normal_subalgebra(algebra, sub)
    if not normal.ok:
        raise RuntimeError(f"central effects failed normality: {normal.witness!r}")
    return sub
