"""Concrete unital ordered abelian groups and their endomorphisms.

Two carriers are supported. A lattice-cone model is Z^dim ordered by an
integer constraint cone (g >= 0 iff every cone row pairs nonnegatively with
g); its unit interval is enumerated exactly by interval propagation over the
defining inequalities. A matrix model is the space of symmetric rational
d x d matrices ordered by positive semidefiniteness, with the identity as
order unit; its interval is infinite and sweeps fall back to seeded samplers.

Endomorphisms are stored uniformly as exact rational matrices acting on a
vectorization of the carrier, so composition is matrix product and map
equality on the matrix model is literal matrix equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import ClassVar

from . import linalg, matrix_model
from .config import CheckConfig
from .elements import SymMat, Vec, conjugate
from .reporting import CERTIFIED, FAIL, PASS, Clause, Report


class NotEnumerableError(ValueError):
    """Raised when an exact enumeration is requested of an infinite set."""


class UnboundedIntervalError(NotEnumerableError):
    pass


_POINT_CAP = 2_000_000
_PROPAGATION_ROUNDS = 64


def _dot(row, coords) -> int:
    return sum(a * x for a, x in zip(row, coords))


def integer_points(rows, rhs, dim: int) -> list[tuple[int, ...]]:
    """All integer points x with row_i . x >= rhs_i, in lexicographic order.

    Box bounds per coordinate are derived by exact interval propagation over
    the inequalities. If some coordinate never acquires both bounds the
    solution set is (or cannot be shown to be) finite and
    UnboundedIntervalError is raised.
    """
    for r, b in zip(rows, rhs):
        if not any(r) and b > 0:
            return []
    cons = [(tuple(r), b) for r, b in zip(rows, rhs) if any(r)]
    lo: list[int | None] = [None] * dim
    hi: list[int | None] = [None] * dim
    for _ in range(_PROPAGATION_ROUNDS):
        changed = False
        for a, b in cons:
            for j in range(dim):
                if a[j] == 0:
                    continue
                s = 0
                bounded = True
                for k in range(dim):
                    if k == j or a[k] == 0:
                        continue
                    cap = hi[k] if a[k] > 0 else lo[k]
                    if cap is None:
                        bounded = False
                        break
                    s += a[k] * cap
                if not bounded:
                    continue
                q = Fraction(b - s, a[j])
                if a[j] > 0:
                    nl = math.ceil(q)
                    if lo[j] is None or nl > lo[j]:
                        lo[j] = nl
                        changed = True
                else:
                    nh = math.floor(q)
                    if hi[j] is None or nh < hi[j]:
                        hi[j] = nh
                        changed = True
                if lo[j] is not None and hi[j] is not None and lo[j] > hi[j]:
                    return []
        if not changed:
            break
    if any(l is None or h is None for l, h in zip(lo, hi)):
        raise UnboundedIntervalError("unit interval infinite: no finite box bounds")
    total = 1
    for l, h in zip(lo, hi):
        total *= h - l + 1
        if total > _POINT_CAP:
            raise UnboundedIntervalError("interval too large to enumerate")
    out = []
    for pt in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if all(_dot(a, pt) >= b for a, b in cons):
            out.append(pt)
    return out


@dataclass(frozen=True)
class LatticeConeModel:
    dim: int
    cone_rows: tuple[tuple[int, ...], ...]
    unit: Vec

    kind: ClassVar[str] = "lattice_cone"
    finite: ClassVar[bool] = True
    is_trivial: ClassVar[bool] = False

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        for row in self.cone_rows:
            if len(row) != self.dim or not all(isinstance(x, int) for x in row):
                raise ValueError(
                    f"cone row {row!r} does not match dim {self.dim}"
                )
        if self.unit.dim != self.dim:
            raise ValueError(
                f"unit has dim {self.unit.dim}, model has dim {self.dim}"
            )

    @property
    def carrier(self) -> "LatticeConeModel":
        return self

    @property
    def zero(self) -> Vec:
        return Vec.zero(self.dim)

    def project(self, g: Vec) -> Vec:
        return g

    def is_member(self, g) -> bool:
        return isinstance(g, Vec) and g.dim == self.dim

    contains = is_member

    def is_positive(self, g: Vec) -> bool:
        return all(_dot(row, g.coords) >= 0 for row in self.cone_rows)

    def leq(self, a: Vec, b: Vec) -> bool:
        return self.is_positive(b - a)

    def interval(self) -> tuple[Vec, ...]:
        return _lattice_interval(self)

    def positive_universe(self, n: int) -> tuple[Vec, ...]:
        return _lattice_positive_universe(self, n)

    def signed_universe(self, n: int) -> tuple[Vec, ...]:
        return _lattice_signed_universe(self, n)

    # endomorphisms act on the coordinates themselves
    @property
    def vec_dim(self) -> int:
        return self.dim

    def vectorize(self, g: Vec) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in g.coords)

    def devectorize(self, v) -> Vec:
        coords = []
        for x in v:
            if x.denominator != 1:
                raise ValueError("endomorphism does not preserve the integer lattice")
            coords.append(int(x))
        return Vec(tuple(coords))


@lru_cache(maxsize=None)
def _lattice_interval(model: LatticeConeModel) -> tuple[Vec, ...]:
    rows, rhs = [], []
    for row in model.cone_rows:
        rows.append(row)
        rhs.append(0)
        rows.append(tuple(-a for a in row))
        rhs.append(-_dot(row, model.unit.coords))
    return tuple(Vec(p) for p in integer_points(rows, rhs, model.dim))


@lru_cache(maxsize=None)
def _lattice_positive_universe(model: LatticeConeModel, n: int) -> tuple[Vec, ...]:
    top = model.unit.scale(n)
    rows, rhs = [], []
    for row in model.cone_rows:
        rows.append(row)
        rhs.append(0)
        rows.append(tuple(-a for a in row))
        rhs.append(-_dot(row, top.coords))
    return tuple(Vec(p) for p in integer_points(rows, rhs, model.dim))


@lru_cache(maxsize=None)
def _lattice_signed_universe(model: LatticeConeModel, n: int) -> tuple[Vec, ...]:
    top = model.unit.scale(n)
    rows, rhs = [], []
    for row in model.cone_rows:
        bound = _dot(row, top.coords)
        rows.append(row)
        rhs.append(-bound)
        rows.append(tuple(-a for a in row))
        rhs.append(-bound)
    return tuple(Vec(p) for p in integer_points(rows, rhs, model.dim))


@dataclass(frozen=True)
class MatrixModel:
    dim: int

    kind: ClassVar[str] = "matrix"
    finite: ClassVar[bool] = False
    is_trivial: ClassVar[bool] = False

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dim must be at least 1")

    @property
    def carrier(self) -> "MatrixModel":
        return self

    @property
    def unit(self) -> SymMat:
        return SymMat.identity(self.dim)

    @property
    def zero(self) -> SymMat:
        return SymMat.zero(self.dim)

    def project(self, g: SymMat) -> SymMat:
        return g

    def is_member(self, g) -> bool:
        return isinstance(g, SymMat) and g.dim == self.dim

    contains = is_member

    def is_positive(self, g: SymMat) -> bool:
        return linalg.is_psd(g.rows)

    def leq(self, a: SymMat, b: SymMat) -> bool:
        return self.is_positive(b - a)

    def interval(self):
        raise NotEnumerableError(
            "unit interval of the matrix model is not enumerable; use the samplers"
        )

    def positive_universe(self, n: int):
        raise NotEnumerableError("matrix model universes are sampled, not enumerated")

    def signed_universe(self, n: int):
        raise NotEnumerableError("matrix model universes are sampled, not enumerated")

    @property
    def sym_pairs(self) -> tuple[tuple[int, int], ...]:
        return _sym_pairs(self.dim)

    @property
    def vec_dim(self) -> int:
        return self.dim * (self.dim + 1) // 2

    def vectorize(self, g: SymMat) -> tuple[Fraction, ...]:
        return tuple(g.rows[i][j] for i, j in self.sym_pairs)

    def devectorize(self, v) -> SymMat:
        entries = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for (i, j), x in zip(self.sym_pairs, v):
            entries[i][j] = x
            entries[j][i] = x
        return SymMat(tuple(tuple(row) for row in entries))

    def basis(self) -> tuple[SymMat, ...]:
        return _sym_basis(self.dim)


@lru_cache(maxsize=None)
def _sym_pairs(dim: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(dim) for j in range(i, dim))


@lru_cache(maxsize=None)
def _sym_basis(dim: int) -> tuple[SymMat, ...]:
    out = []
    for i, j in _sym_pairs(dim):
        entries = [[Fraction(0)] * dim for _ in range(dim)]
        entries[i][j] = Fraction(1)
        entries[j][i] = Fraction(1)
        out.append(SymMat(tuple(tuple(row) for row in entries)))
    return tuple(out)


@dataclass(frozen=True)
class Endomorphism:
    """Group endomorphism of a carrier, as a matrix on its vectorization.

    For matrix carriers, an endomorphism arising as g -> p g p remembers its
    conjugator; the analytic facts about such maps (order preservation,
    the compression property) hinge on that form.
    """

    carrier: "LatticeConeModel | MatrixModel"
    matrix: tuple[tuple[Fraction, ...], ...]
    conjugator: SymMat | None = None

    def __post_init__(self) -> None:
        n = self.carrier.vec_dim
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError(
                f"endomorphism matrix must be {n}x{n} for this carrier"
            )

    def apply(self, g):
        return self.carrier.devectorize(
            linalg.mat_vec(self.matrix, self.carrier.vectorize(g))
        )

    def jsonable(self):
        out = {"matrix": [[_frac_json(x) for x in row] for row in self.matrix]}
        if self.conjugator is not None:
            out["conjugator"] = [
                [_frac_json(x) for x in row] for row in self.conjugator.rows
            ]
        return out


def _frac_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def endo_from_int_matrix(model: LatticeConeModel, rows) -> Endomorphism:
    mat_rows = []
    for row in rows:
        if len(row) != model.dim or not all(isinstance(x, int) for x in row):
            raise ValueError(f"endomorphism row {row!r} does not match dim {model.dim}")
        mat_rows.append(tuple(Fraction(x) for x in row))
    return Endomorphism(model, tuple(mat_rows))


def identity_endo(carrier) -> Endomorphism:
    conj = carrier.unit if isinstance(carrier, MatrixModel) else None
    return Endomorphism(carrier, linalg.identity(carrier.vec_dim), conj)


def zero_endo(carrier) -> Endomorphism:
    conj = carrier.zero if isinstance(carrier, MatrixModel) else None
    return Endomorphism(carrier, linalg.zeros(carrier.vec_dim, carrier.vec_dim), conj)


@lru_cache(maxsize=4096)
def conjugation_endo(carrier: MatrixModel, p: SymMat) -> Endomorphism:
    """The map g -> p g p as a matrix on the vectorized symmetric space."""
    cols = [carrier.vectorize(conjugate(p, b)) for b in carrier.basis()]
    matrix = tuple(
        tuple(cols[c][r] for c in range(len(cols))) for r in range(len(cols))
    )
    return Endomorphism(carrier, matrix, p)


def compose(a: Endomorphism, b: Endomorphism) -> Endomorphism:
    """a after b (apply b first)."""
    if a.carrier != b.carrier:
        raise ValueError("cannot compose endomorphisms of different carriers")
    return Endomorphism(a.carrier, linalg.mat_mul(a.matrix, b.matrix))


def endo_equal(structure, a: Endomorphism, b: Endomorphism) -> bool:
    """Map equality as seen from `structure`.

    Finite structures compare extensionally on the unit interval, which
    generates the carrier. On the matrix model the vectorized matrices are
    compared directly; on a matrix substructure both maps are composed with
    the canonical idempotent projector onto the substructure, which is onto,
    so the comparison is still exact and complete.
    """
    if structure.finite:
        return all(a.apply(e) == b.apply(e) for e in structure.interval())
    projector = getattr(structure, "projector", None)
    if projector is None:
        return a.matrix == b.matrix
    return linalg.mat_mul(a.matrix, projector.matrix) == linalg.mat_mul(
        b.matrix, projector.matrix
    )


# ---------------------------------------------------------------------------
# unital group validation


def validate_unital_group(structure, cfg: CheckConfig | None = None) -> Report:
    """Check the unital-group axioms for a model or substructure.

    Finite structures are checked exhaustively on bounded universes (the
    report records the height bound). On matrix structures the axioms hold
    analytically for the operator order; the clauses are recorded as
    certified, with seeded spot checks run alongside.
    """
    cfg = cfg or CheckConfig()
    if structure.finite:
        return _validate_finite(structure, cfg)
    return _validate_matrix(structure, cfg)


def _validate_finite(structure, cfg: CheckConfig) -> Report:
    rep = Report(title="unital group axioms")
    top_level = isinstance(structure, LatticeConeModel)
    n = cfg.height_bound

    if top_level:
        rep.add(
            Clause(
                "order_translation_invariant",
                CERTIFIED,
                note="cone orders are translation invariant by construction",
            )
        )
        r = linalg.rank(linalg.mat(structure.cone_rows)) if structure.cone_rows else 0
        rep.add(
            Clause(
                "order_antisymmetric",
                PASS if r == structure.dim else FAIL,
                checked=1,
                witness=None if r == structure.dim else {"cone_rank": r, "dim": structure.dim},
                note="cone is pointed iff the constraint rows have full rank",
            )
        )
    else:
        rep.add(
            Clause(
                "order_translation_invariant",
                CERTIFIED,
                note="inherited from the ambient group order",
            )
        )
        rep.add(
            Clause(
                "order_antisymmetric",
                CERTIFIED,
                note="inherited from the ambient group order",
            )
        )

    unit_ok = structure.is_positive(structure.unit) and (
        not structure.unit.is_zero() or structure.is_trivial
    )
    rep.add(
        Clause(
            "unit_positive_nonzero",
            PASS if unit_ok else FAIL,
            checked=1,
            witness=None if unit_ok else {"unit": structure.unit},
        )
    )

    try:
        interval = structure.interval()
    except NotEnumerableError as exc:
        rep.add(Clause("interval_finite", FAIL, witness={"error": str(exc)}))
        return rep
    rep.add(
        Clause(
            "interval_finite",
            PASS,
            checked=len(interval),
            note=f"|E| = {len(interval)}",
        )
    )

    if top_level:
        _directedness_exact(structure, interval, rep)
    else:
        _directedness_bounded(structure, n, rep)

    gen_bound = n if top_level else 2 * n
    ok, missing, count = _sumset_covers(structure, gen_bound)
    rep.add(
        Clause(
            "interval_generates_positives",
            PASS if ok else FAIL,
            checked=count,
            witness=None if ok else {"positive": missing},
            note=f"every positive below {gen_bound}*unit is a sum of interval elements",
        )
    )
    return rep


def _directedness_exact(model: LatticeConeModel, interval, rep: Report) -> None:
    """Directedness for a top-level lattice model, decided exactly.

    The group is directed with order unit u iff the unit interval generates
    Z^dim as a group (checked through the gcd of dim x dim minors of the
    matrix of interval elements) and every nonzero cone row pairs strictly
    positively with u (so a multiple of u eventually dominates any element).
    """
    nonzero = [e.coords for e in interval if not e.is_zero()]
    index = 0
    if len(nonzero) >= model.dim:
        for combo in itertools.combinations(nonzero, model.dim):
            index = gcd(index, abs(linalg.int_det(combo)))
            if index == 1:
                break
    rep.add(
        Clause(
            "interval_generates_group",
            PASS if index == 1 else FAIL,
            checked=len(nonzero),
            witness=None if index == 1 else {"lattice_index": index},
            note="interval elements must span the full integer lattice",
        )
    )
    bad_row = next(
        (
            row
            for row in model.cone_rows
            if any(row) and _dot(row, model.unit.coords) <= 0
        ),
        None,
    )
    rep.add(
        Clause(
            "unit_order_unit",
            PASS if bad_row is None else FAIL,
            checked=len(model.cone_rows),
            witness=None if bad_row is None else {"cone_row": list(bad_row)},
            note="each nonzero cone row must pair strictly positively with the unit",
        )
    )


def _directedness_bounded(structure, n: int, rep: Report) -> None:
    top = structure.unit.scale(n)
    witness = None
    box = structure.signed_universe(n)
    for g in box:
        bound = top - g
        if not (structure.is_positive(bound) and structure.is_member(bound)):
            witness = {"element": g}
            break
    rep.add(
        Clause(
            "unit_order_unit",
            PASS if witness is None else FAIL,
            checked=len(box),
            witness=witness,
            note=f"checked on the signed height-{n} box",
        )
    )


def _sumset_covers(structure, bound: int):
    """Is every positive below bound*unit a sum of interval elements?"""
    positives = structure.positive_universe(bound)
    interval = [e for e in structure.interval() if not e.is_zero()]
    top = structure.unit.scale(bound)
    reach = {structure.zero}
    frontier = [structure.zero]
    while frontier:
        nxt = []
        for s in frontier:
            for e in interval:
                t = s + e
                if t in reach or not structure.leq(t, top):
                    continue
                reach.add(t)
                nxt.append(t)
        frontier = nxt
    missing = next((g for g in positives if g not in reach), None)
    return missing is None, missing, len(positives)


def _validate_matrix(structure, cfg: CheckConfig) -> Report:
    rep = Report(title="unital group axioms")
    rng = cfg.rng()
    dim = structure.carrier.dim
    spot = cfg.spot
    n = cfg.height_bound

    ti_witness = None
    for _ in range(spot):
        a = structure.project(matrix_model.draw_signed(dim, rng, n))
        b = a + structure.project(matrix_model.draw_positive(dim, rng, n))
        k = structure.project(matrix_model.draw_signed(dim, rng, n))
        if not structure.leq(a + k, b + k):
            ti_witness = {"a": a, "b": b, "k": k}
            break
    rep.add(
        Clause(
            "order_translation_invariant",
            CERTIFIED if ti_witness is None else FAIL,
            checked=spot,
            witness=ti_witness,
            note="operator order is translation invariant; spot checked on samples",
        )
    )

    anti_witness = None
    for _ in range(spot):
        g = structure.project(matrix_model.draw_positive(dim, rng, n))
        if not g.is_zero() and structure.is_positive(-g):
            anti_witness = {"g": g}
            break
    rep.add(
        Clause(
            "order_antisymmetric",
            CERTIFIED if anti_witness is None else FAIL,
            checked=spot,
            witness=anti_witness,
            note="psd and negative-psd forces zero; spot checked on samples",
        )
    )

    unit_ok = structure.is_positive(structure.unit) and (
        not structure.unit.is_zero() or structure.is_trivial
    )
    rep.add(
        Clause(
            "unit_positive_nonzero",
            PASS if unit_ok else FAIL,
            checked=1,
            witness=None if unit_ok else {"unit": structure.unit},
        )
    )

    int_witness = None
    for _ in range(spot):
        e = structure.project(matrix_model.draw_effect(dim, rng))
        if not (structure.is_positive(e) and structure.leq(e, structure.unit)):
            int_witness = {"effect": e}
            break
    rep.add(
        Clause(
            "interval_sampled",
            CERTIFIED if int_witness is None else FAIL,
            checked=spot,
            witness=int_witness,
            note="interval is not enumerable; sampled effects sit inside [0, unit]",
        )
    )

    ou_witness = None
    for _ in range(spot):
        g = structure.project(matrix_model.draw_signed(dim, rng, n))
        if not any(
            structure.is_positive(structure.unit.scale(k) - g) for k in range(4 * n + 1)
        ):
            ou_witness = {"element": g}
            break
    rep.add(
        Clause(
            "unit_order_unit",
            CERTIFIED if ou_witness is None else FAIL,
            checked=spot,
            witness=ou_witness,
            note="a multiple of the unit dominates every sample",
        )
    )

    rep.add(
        Clause(
            "interval_generates_positives",
            CERTIFIED,
            checked=spot,
            note="positive samples are built as sums of interval elements",
        )
    )
    return rep
