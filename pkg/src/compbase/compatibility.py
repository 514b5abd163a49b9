"""Compatibility of foci, commutants, substructures, and products.

An element g is compatible with a focus p when g splits as
J_p(g) + J_{u-p}(g).  For two foci the battery below evaluates eight
conditions that are provably equivalent for any compression base; the
equivalence itself is what the sweeps check.  On top of compatibility sit
the meet of compatible foci, the image and commutant substructures with
their restricted bases, morphisms between based groups, and the direct
product decomposition induced by a single focus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import ceil, isqrt
from typing import Any, Optional

from . import linalg, matrix_model
from .compression import (
    CompressionBase,
    kernel_complement_check,
)
from .config import CheckConfig
from .effect_algebra import (
    EffectAlgebra,
    MembershipError,
    SubEffectAlgebra,
    is_mackey_compatible,
)
from .elements import conjugate
from .models import (
    Endomorphism,
    NotEnumerableError,
    compose,
    conjugation_endo,
    endo_equal,
    identity_endo,
    zero_endo,
)
from .reporting import CERTIFIED, FAIL, PASS, CheckResult, Clause, Report


class MeetUndefinedError(ValueError):
    """Raised when a meet is requested for incompatible foci."""


def _is_effect(structure, x) -> bool:
    return structure.is_positive(x) and structure.leq(x, structure.unit)


# ---------------------------------------------------------------------------
# commutants


def in_commutant(base: CompressionBase, p, g) -> bool:
    """Does g split as J_p(g) + J_{u-p}(g)?"""

    if not base.contains_focus(p):
        raise MembershipError("p is not a focus of this base")
    comp = base.complement(p)
    if not base.contains_focus(comp):
        raise MembershipError("the complement of p escapes the base")
    return base.j(p).apply(g) + base.j(comp).apply(g) == g


def commutant_absorption_check(base: CompressionBase, p, g) -> CheckResult:
    """One-element check of the two absorption implications.

    J_p(g) <= g forces g compatible with p; and a positive g compatible
    with p forces J_p(g) <= g.
    """

    structure = base.structure
    below = structure.leq(base.j(p).apply(g), g)
    member = in_commutant(base, p, g)
    if below and not member:
        return CheckResult(
            False, witness={"p": p, "g": g, "direction": "dominated_but_incompatible"}
        )
    if structure.is_positive(g) and member and not below:
        return CheckResult(
            False,
            witness={"p": p, "g": g, "direction": "compatible_positive_not_dominated"},
        )
    return CheckResult(True, checked=1)


# ---------------------------------------------------------------------------
# the compatibility battery


BATTERY_CONDITIONS = (
    "commute",
    "jp_q_eq_jq_p",
    "jp_q_le_q",
    "mackey_in_interval",
    "mackey_in_base",
    "exists_common_focus",
    "jp_q_in_base",
    "q_in_commutant",
)


@dataclass(frozen=True)
class CompatReport:
    """Eight compatibility conditions for one ordered pair of foci."""

    p: Any
    q: Any
    conditions: tuple[tuple[str, bool], ...]

    @property
    def values(self) -> dict:
        return dict(self.conditions)

    @property
    def compatible(self) -> bool:
        return all(v for _, v in self.conditions)

    @property
    def agree(self) -> bool:
        return len({v for _, v in self.conditions}) == 1

    def jsonable(self):
        return {
            "p": self.p,
            "q": self.q,
            "conditions": dict(self.conditions),
            "compatible": self.compatible,
            "agree": self.agree,
        }


def compat_battery(
    base: CompressionBase, p, q, cfg: Optional[CheckConfig] = None
) -> CompatReport:
    """Evaluate all eight compatibility conditions for the pair (p, q).

    On finite structures every condition is decided exhaustively.  On the
    matrix model the two Mackey conditions are decided through the
    constructive witness r = J_p(q), e = p - r, f = q - r, and the
    common-focus condition through the same candidate; the battery's use
    is precisely that these routes must agree with the exact conditions.
    """

    cfg = cfg or CheckConfig()
    structure = base.structure
    for name, x in (("p", p), ("q", q)):
        if not base.contains_focus(x):
            raise MembershipError(f"{name} is not a focus of this base")

    jp = base.j(p)
    jq = base.j(q)
    pq = compose(jp, jq)
    qp = compose(jq, jp)
    r = jp.apply(q)

    conds = [
        ("commute", endo_equal(structure, pq, qp)),
        ("jp_q_eq_jq_p", r == jq.apply(p)),
        ("jp_q_le_q", structure.leq(r, q)),
    ]

    if structure.finite:
        algebra = EffectAlgebra(structure)
        sub = SubEffectAlgebra(algebra, frozenset(base.foci))
        conds.append(("mackey_in_interval", is_mackey_compatible(algebra, p, q)))
        conds.append(
            ("mackey_in_base", is_mackey_compatible(algebra, p, q, within=sub))
        )
        conds.append(
            (
                "exists_common_focus",
                any(endo_equal(structure, pq, base.j(s)) for s in base.foci),
            )
        )
    else:
        e = p - r
        f = q - r
        witnessed = (
            _is_effect(structure, r)
            and _is_effect(structure, e)
            and _is_effect(structure, f)
            and structure.leq(e + f + r, structure.unit)
        )
        conds.append(("mackey_in_interval", witnessed))
        if base.intensional:
            conds.append(
                (
                    "mackey_in_base",
                    witnessed
                    and all(base.contains_focus(x) for x in (r, e, f)),
                )
            )
            conds.append(
                (
                    "exists_common_focus",
                    base.contains_focus(r)
                    and endo_equal(
                        structure, pq, conjugation_endo(structure.carrier, r)
                    ),
                )
            )
        else:
            conds.append(("mackey_in_base", _mackey_in_declared(base, p, q)))
            conds.append(
                (
                    "exists_common_focus",
                    any(endo_equal(structure, pq, base.j(s)) for s in base.foci),
                )
            )

    conds.append(("jp_q_in_base", base.contains_focus(r)))
    conds.append(("q_in_commutant", in_commutant(base, p, q)))
    return CompatReport(p, q, tuple(conds))


def _mackey_in_declared(base: CompressionBase, p, q) -> bool:
    structure = base.structure
    unit = structure.unit
    for d in base.foci:
        if (
            structure.leq(d, p)
            and structure.leq(d, q)
            and base.contains_focus(p - d)
            and base.contains_focus(q - d)
            and structure.leq(p + q - d, unit)
        ):
            return True
    return False


def meet(base: CompressionBase, p, q, cfg: Optional[CheckConfig] = None):
    """The meet of two compatible foci, fully checked.

    Returns r = J_p(q) after confirming it equals J_q(p), lies below both
    arguments, is the greatest lower bound among effects, and carries the
    composed compression.  Incompatible foci raise MeetUndefinedError.
    """

    cfg = cfg or CheckConfig()
    structure = base.structure
    battery = compat_battery(base, p, q, cfg)
    if not battery.compatible:
        if battery.agree:
            raise MeetUndefinedError("foci are not compatible")
        raise MeetUndefinedError(
            "battery conditions disagree; the base does not satisfy its laws"
        )

    r = base.j(p).apply(q)
    if r != base.j(q).apply(p):
        raise RuntimeError("meet law violated: the two one-sided values differ")
    if not (structure.leq(r, p) and structure.leq(r, q)):
        raise RuntimeError("meet law violated: value is not a lower bound")

    if structure.finite:
        for e in structure.interval():
            if structure.leq(e, p) and structure.leq(e, q) and not structure.leq(e, r):
                raise RuntimeError("meet law violated: not the greatest lower bound")
    else:
        rng = cfg.rng("meet")
        dim = structure.carrier.dim
        for _ in range(cfg.spot):
            e = conjugate(p, matrix_model.draw_effect(dim, rng))
            if structure.leq(e, q) and not structure.leq(e, r):
                raise RuntimeError("meet law violated: not the greatest lower bound")
    if not base.contains_focus(r):
        raise RuntimeError("meet law violated: value escapes the base")
    left = compose(base.j(p), base.j(q))
    if not endo_equal(structure, left, base.j(r)):
        raise RuntimeError("meet law violated: composed map is not the meet's map")
    return r


# ---------------------------------------------------------------------------
# substructures


@dataclass(frozen=True, eq=False)
class Substructure:
    """A unital subgroup of a model, cut out by an idempotent projector.

    kind "image" is the range of one compression, with its focus as unit;
    kind "commutant" is the set of elements compatible with a focus, with
    the ambient unit.  Both support the same sweep protocol as a model, so
    every validation can be re-run inside them.
    """

    parent: Any
    kind: str
    v: Any
    unit: Any
    projector: Endomorphism

    @property
    def finite(self) -> bool:
        return self.parent.finite

    @property
    def carrier(self):
        return self.parent.carrier

    @property
    def zero(self):
        return self.parent.zero

    @property
    def is_trivial(self) -> bool:
        return self.unit == self.parent.zero

    def project(self, g):
        return self.projector.apply(self.parent.project(g))

    def is_member(self, g) -> bool:
        return self.parent.is_member(g) and self.projector.apply(g) == g

    def is_positive(self, g) -> bool:
        return self.parent.is_positive(g)

    def leq(self, a, b) -> bool:
        return self.parent.leq(a, b)

    def interval(self):
        return tuple(
            e
            for e in self.parent.interval()
            if self.is_member(e) and self.parent.leq(e, self.unit)
        )

    def positive_universe(self, n: int):
        top = self.unit.scale(n)
        return tuple(
            g
            for g in self.parent.positive_universe(n)
            if self.is_member(g) and self.parent.leq(g, top)
        )

    def signed_universe(self, n: int):
        top = self.unit.scale(n)
        bot = self.unit.scale(-n)
        return tuple(
            g
            for g in self.parent.signed_universe(n)
            if self.is_member(g)
            and self.parent.leq(g, top)
            and self.parent.leq(bot, g)
        )


def image_substructure(base: CompressionBase, v) -> Substructure:
    """The range of J_v, as a unital group with unit v."""

    if not base.contains_focus(v):
        raise MembershipError("v is not a focus of this base")
    return Substructure(base.structure, "image", v, v, base.j(v))


def commutant_substructure(base: CompressionBase, v) -> Substructure:
    """All elements compatible with v, as a unital group with the same unit."""

    if not base.contains_focus(v):
        raise MembershipError("v is not a focus of this base")
    jv = base.j(v)
    jc = base.j(base.complement(v))
    projector = Endomorphism(
        base.structure.carrier, linalg.mat_add(jv.matrix, jc.matrix)
    )
    return Substructure(base.structure, "commutant", v, base.structure.unit, projector)


def restricted_base(base: CompressionBase, sub: Substructure) -> CompressionBase:
    """The compression base a substructure inherits from its parent.

    Image substructures keep the foci below v; commutant substructures keep
    the foci compatible with v.  The maps themselves are unchanged, only
    re-read as maps of the substructure.
    """

    if base.foci is None:
        raise NotEnumerableError(
            "restricting a base needs a declared focus list"
        )
    if sub.kind == "image":
        keep = [q for q in base.foci if base.structure.leq(q, sub.v)]
    else:
        keep = [q for q in base.foci if in_commutant(base, sub.v, q)]
    return CompressionBase(sub, tuple(keep), {q: base.j(q) for q in keep})


def substructure_report(
    base: CompressionBase, v, kind: str, cfg: Optional[CheckConfig] = None
):
    """Build a substructure and re-run the whole validation stack inside it.

    Returns (substructure, restricted base, report).  The report covers the
    projector, the characterization of the substructure's interval, the
    unital-group axioms seen from inside, and the restricted base laws.
    """

    cfg = cfg or CheckConfig()
    if kind == "image":
        sub = image_substructure(base, v)
    elif kind == "commutant":
        sub = commutant_substructure(base, v)
    else:
        raise ValueError(f"unknown substructure kind {kind!r}")

    from .models import validate_unital_group
    from .compression import validate_compression_base

    parent = base.structure
    rep = Report(title=f"{kind} substructure")
    idem = endo_equal(parent, compose(sub.projector, sub.projector), sub.projector)
    rep.add(Clause("projector_idempotent", PASS if idem else FAIL, checked=1))
    rep.add(_interval_characterization_clause(base, sub, cfg))

    rbase = restricted_base(base, sub)
    witness = next((q for q in rbase.foci if not sub.is_member(q)), None)
    rep.add(
        Clause(
            "restricted_foci_members",
            PASS if witness is None else FAIL,
            checked=len(rbase.foci),
            witness=None if witness is None else {"focus": witness},
        )
    )
    rep.extend(validate_unital_group(sub, cfg))
    rep.extend(validate_compression_base(rbase, cfg))
    return sub, rbase, rep


def _interval_characterization_clause(
    base: CompressionBase, sub: Substructure, cfg: CheckConfig
) -> Clause:
    parent = base.structure
    unit = parent.unit
    v = sub.v

    if sub.kind == "image":
        if parent.finite:
            witness = next(
                (
                    e
                    for e in parent.interval()
                    if sub.is_member(e) != parent.leq(e, v)
                ),
                None,
            )
            return Clause(
                "interval_characterization",
                PASS if witness is None else FAIL,
                checked=len(parent.interval()),
                witness=None if witness is None else {"effect": witness},
                note="membership in the image coincides with lying below v",
            )
        rng = cfg.rng("substructure:image")
        dim = parent.carrier.dim
        witness = None
        for i in range(cfg.spot):
            e = matrix_model.draw_effect(dim, rng)
            if i % 2:
                e = conjugate(v, e)
            if sub.is_member(e) != parent.leq(e, v):
                witness = {"effect": e}
                break
        return Clause(
            "interval_characterization",
            CERTIFIED if witness is None else FAIL,
            checked=cfg.spot,
            witness=witness,
            note="membership in the image coincides with lying below v; sampled",
        )

    comp = unit - v
    if parent.finite:
        interval = parent.interval()
        los = [e for e in interval if parent.leq(e, v)]
        his = [e for e in interval if parent.leq(e, comp)]
        checked = 0
        for e1, e2 in itertools.product(los, his):
            checked += 1
            if not sub.is_member(e1 + e2):
                return Clause(
                    "interval_characterization",
                    FAIL,
                    checked=checked,
                    witness={"e1": e1, "e2": e2},
                )
        jv = base.j(v)
        jc = base.j(comp)
        for e in interval:
            checked += 1
            if not sub.is_member(e):
                continue
            x = jv.apply(e)
            y = jc.apply(e)
            good = (
                _is_effect(parent, x)
                and _is_effect(parent, y)
                and parent.leq(x, v)
                and parent.leq(y, comp)
                and x + y == e
            )
            if not good:
                return Clause(
                    "interval_characterization",
                    FAIL,
                    checked=checked,
                    witness={"effect": e},
                )
        return Clause(
            "interval_characterization",
            PASS,
            checked=checked,
            note="commutant effects are exactly sums from below v and below u - v",
        )

    rng = cfg.rng("substructure:commutant")
    dim = parent.carrier.dim
    jv = base.j(v)
    jc = base.j(comp)
    witness = None
    for i in range(cfg.spot):
        a = matrix_model.draw_effect(dim, rng)
        b = matrix_model.draw_effect(dim, rng)
        g = conjugate(v, a) + conjugate(comp, b)
        if not (sub.is_member(g) and _is_effect(parent, g)):
            witness = {"effect": g, "direction": "sum_not_member"}
            break
        e = conjugate(v, b) + conjugate(comp, a) if i % 2 else g
        if sub.is_member(e) and _is_effect(parent, e):
            x = jv.apply(e)
            y = jc.apply(e)
            good = (
                parent.leq(x, v)
                and parent.leq(y, comp)
                and _is_effect(parent, x)
                and _is_effect(parent, y)
                and x + y == e
            )
            if not good:
                witness = {"effect": e, "direction": "member_does_not_split"}
                break
    return Clause(
        "interval_characterization",
        CERTIFIED if witness is None else FAIL,
        checked=cfg.spot,
        witness=witness,
        note="commutant effects are exactly sums from below v and below u - v; sampled",
    )


# ---------------------------------------------------------------------------
# morphisms and the direct product


def morphism_report(
    src_structure,
    src_base: CompressionBase,
    tgt_structure,
    tgt_base: CompressionBase,
    phi: Endomorphism,
    cfg: Optional[CheckConfig] = None,
    prefix: str = "",
) -> Report:
    """Check one map as a morphism of unital groups with compression bases.

    Laws: order preservation, unit to unit, declared foci into declared
    foci, and the intertwining J_{phi(q)} after phi = phi after J_q for
    every source focus q.
    """

    cfg = cfg or CheckConfig()
    rep = Report(title="morphism laws")
    n = cfg.height_bound

    if src_structure.finite:
        box = src_structure.positive_universe(n)
        witness = next(
            (g for g in box if not tgt_structure.is_positive(phi.apply(g))), None
        )
        rep.add(
            Clause(
                prefix + "order_preserving",
                PASS if witness is None else FAIL,
                checked=len(box),
                witness=None if witness is None else {"positive": witness},
                note=f"checked on the height-{n} positive box",
            )
        )
    else:
        rng = cfg.rng("morphism:" + prefix)
        dim = src_structure.carrier.dim
        witness = None
        for _ in range(cfg.spot):
            g = src_structure.project(matrix_model.draw_positive(dim, rng, n))
            if not tgt_structure.is_positive(phi.apply(g)):
                witness = {"positive": g}
                break
        rep.add(
            Clause(
                prefix + "order_preserving",
                CERTIFIED if witness is None else FAIL,
                checked=cfg.spot,
                witness=witness,
                note="sampled positives of the source",
            )
        )

    unit_ok = phi.apply(src_structure.unit) == tgt_structure.unit
    rep.add(
        Clause(
            prefix + "preserves_unit",
            PASS if unit_ok else FAIL,
            checked=1,
            witness=None if unit_ok else {"image": phi.apply(src_structure.unit)},
        )
    )

    if src_base.foci is None:
        raise NotEnumerableError("morphism focus checks need a declared focus list")
    witness = next(
        (q for q in src_base.foci if not tgt_base.contains_focus(phi.apply(q))),
        None,
    )
    rep.add(
        Clause(
            prefix + "foci_to_foci",
            PASS if witness is None else FAIL,
            checked=len(src_base.foci),
            witness=None if witness is None else {"focus": witness},
        )
    )

    witness = None
    for q in src_base.foci:
        img = phi.apply(q)
        if not tgt_base.contains_focus(img):
            continue
        left = compose(tgt_base.j(img), phi)
        right = compose(phi, src_base.j(q))
        if not endo_equal(src_structure, left, right):
            witness = {"focus": q}
            break
    rep.add(
        Clause(
            prefix + "intertwines_compressions",
            PASS if witness is None else FAIL,
            checked=len(src_base.foci),
            witness=witness,
        )
    )
    return rep


def direct_product_report(
    base: CompressionBase, v, cfg: Optional[CheckConfig] = None
) -> Report:
    """The decomposition of the commutant of v as a direct product.

    The compressions J_v and J_{u-v}, read on the commutant C(v), are
    surjective morphisms onto the image substructures of v and u - v; the
    pairing g -> (J_v(g), J_{u-v}(g)) is a bijection onto the product,
    with componentwise order, inverted by addition.
    """

    cfg = cfg or CheckConfig()
    structure = base.structure
    comp = base.complement(v)
    sub_c = commutant_substructure(base, v)
    sub_h = image_substructure(base, v)
    sub_k = image_substructure(base, comp)
    base_c = restricted_base(base, sub_c)
    base_h = restricted_base(base, sub_h)
    base_k = restricted_base(base, sub_k)
    eta = base.j(v)
    kappa = base.j(comp)

    rep = Report(title="direct product decomposition")
    rep.extend(morphism_report(sub_c, base_c, sub_h, base_h, eta, cfg, prefix="eta_"))
    rep.extend(
        morphism_report(sub_c, base_c, sub_k, base_k, kappa, cfg, prefix="kappa_")
    )

    n = cfg.height_bound
    if structure.finite:
        box_c = sub_c.signed_universe(n)
        box_h = sub_h.signed_universe(n)
        box_k = sub_k.signed_universe(n)

        witness = next(
            (h for h in box_h if not (sub_c.is_member(h) and eta.apply(h) == h)), None
        )
        rep.add(
            Clause(
                "eta_fixes_image",
                PASS if witness is None else FAIL,
                checked=len(box_h),
                witness=None if witness is None else {"element": witness},
                note="image elements lie in the commutant and are fixed, so the map is onto",
            )
        )
        witness = next(
            (k for k in box_k if not (sub_c.is_member(k) and kappa.apply(k) == k)),
            None,
        )
        rep.add(
            Clause(
                "kappa_fixes_image",
                PASS if witness is None else FAIL,
                checked=len(box_k),
                witness=None if witness is None else {"element": witness},
            )
        )

        witness = next(
            (g for g in box_c if eta.apply(g) + kappa.apply(g) != g), None
        )
        rep.add(
            Clause(
                "pairing_recovers_element",
                PASS if witness is None else FAIL,
                checked=len(box_c),
                witness=None if witness is None else {"element": witness},
                note="adding the two components inverts the pairing",
            )
        )

        witness = None
        checked = 0
        for h, k in itertools.product(box_h, box_k):
            checked += 1
            s = h + k
            if not (
                sub_c.is_member(s) and eta.apply(s) == h and kappa.apply(s) == k
            ):
                witness = {"h": h, "k": k}
                break
        rep.add(
            Clause(
                "pairing_surjective",
                PASS if witness is None else FAIL,
                checked=checked,
                witness=witness,
                note="every component pair is realized by its sum",
            )
        )

        witness = next(
            (
                g
                for g in box_c
                if structure.is_positive(g)
                != (
                    structure.is_positive(eta.apply(g))
                    and structure.is_positive(kappa.apply(g))
                )
            ),
            None,
        )
        rep.add(
            Clause(
                "order_componentwise",
                PASS if witness is None else FAIL,
                checked=len(box_c),
                witness=None if witness is None else {"element": witness},
            )
        )
        return rep

    rng = cfg.rng("product")
    dim = structure.carrier.dim
    spot = cfg.spot

    witness = None
    for _ in range(spot):
        h = conjugate(v, matrix_model.draw_signed(dim, rng, n))
        if not (sub_c.is_member(h) and eta.apply(h) == h):
            witness = {"element": h}
            break
    rep.add(
        Clause(
            "eta_fixes_image",
            CERTIFIED if witness is None else FAIL,
            checked=spot,
            witness=witness,
            note="sampled image elements lie in the commutant and are fixed",
        )
    )
    witness = None
    for _ in range(spot):
        k = conjugate(comp, matrix_model.draw_signed(dim, rng, n))
        if not (sub_c.is_member(k) and kappa.apply(k) == k):
            witness = {"element": k}
            break
    rep.add(
        Clause(
            "kappa_fixes_image",
            CERTIFIED if witness is None else FAIL,
            checked=spot,
            witness=witness,
        )
    )

    witness = None
    for _ in range(spot):
        g = sub_c.project(matrix_model.draw_signed(dim, rng, n))
        if eta.apply(g) + kappa.apply(g) != g:
            witness = {"element": g}
            break
    rep.add(
        Clause(
            "pairing_recovers_element",
            CERTIFIED if witness is None else FAIL,
            checked=spot,
            witness=witness,
        )
    )

    witness = None
    for _ in range(spot):
        h = conjugate(v, matrix_model.draw_signed(dim, rng, n))
        k = conjugate(comp, matrix_model.draw_signed(dim, rng, n))
        s = h + k
        if not (sub_c.is_member(s) and eta.apply(s) == h and kappa.apply(s) == k):
            witness = {"h": h, "k": k}
            break
    rep.add(
        Clause(
            "pairing_surjective",
            CERTIFIED if witness is None else FAIL,
            checked=spot,
            witness=witness,
            note="sampled component pairs are realized by their sums",
        )
    )

    witness = None
    for _ in range(spot):
        g = sub_c.project(matrix_model.draw_signed(dim, rng, n))
        if structure.is_positive(g) != (
            structure.is_positive(eta.apply(g))
            and structure.is_positive(kappa.apply(g))
        ):
            witness = {"element": g}
            break
    rep.add(
        Clause(
            "order_componentwise",
            CERTIFIED if witness is None else FAIL,
            checked=spot,
            witness=witness,
        )
    )
    return rep

# ---------------------------------------------------------------------------
# the orthomodular poset of foci


def omp_report(base: CompressionBase, cfg: Optional[CheckConfig] = None) -> Report:
    """Orthomodular poset laws for the foci of a base.

    Declared bases get exhaustive focus loops, with the interval-quantified
    clauses (sharpness and principality) swept exhaustively on finite
    structures and sampled on the matrix model.  An intensional base is
    checked entirely on sampled projections.
    """

    cfg = cfg or CheckConfig()
    if base.foci is not None:
        return _omp_declared(base, cfg)
    return _omp_sampled(base, cfg)


def _omp_declared(base: CompressionBase, cfg: CheckConfig) -> Report:
    structure = base.structure
    leq = structure.leq
    unit = structure.unit
    zero = structure.zero
    foci = base.foci
    rep = Report(title="orthomodular poset laws")

    bounds_ok = base.contains_focus(zero) and base.contains_focus(unit)
    witness = next((p for p in foci if not _is_effect(structure, p)), None)
    if not bounds_ok and witness is None:
        witness = {"missing": "zero or unit"}
    rep.add(
        Clause(
            "omp_bounded",
            PASS if bounds_ok and witness is None else FAIL,
            checked=len(foci),
            witness=witness,
        )
    )

    witness = None
    for p in foci:
        c = unit - p
        if not base.contains_focus(c) or unit - c != p:
            witness = {"p": p}
            break
    if witness is None:
        for p, q in itertools.product(foci, repeat=2):
            if leq(p, q) and not leq(unit - q, unit - p):
                witness = {"p": p, "q": q}
                break
    rep.add(
        Clause(
            "omp_orthocomplement",
            PASS if witness is None else FAIL,
            checked=len(foci) + len(foci) ** 2,
            witness=witness,
            note="involutive and order reversing",
        )
    )

    witness = None
    checked = 0
    for p, q in itertools.product(foci, repeat=2):
        if not leq(p + q, unit):
            continue
        checked += 1
        s = p + q
        if not (base.contains_focus(s) and leq(p, s) and leq(q, s)):
            witness = {"p": p, "q": q}
            break
        bad = next(
            (r for r in foci if leq(p, r) and leq(q, r) and not leq(s, r)), None
        )
        if bad is not None:
            witness = {"p": p, "q": q, "upper_bound": bad}
            break
    rep.add(
        Clause(
            "omp_orthogonal_join",
            PASS if witness is None else FAIL,
            checked=checked,
            witness=witness,
            note="orthogonal sums are least upper bounds in the base",
        )
    )

    witness = None
    checked = 0
    for p, q in itertools.product(foci, repeat=2):
        if not leq(p, q):
            continue
        checked += 1
        d = q - p
        if not base.contains_focus(d):
            witness = {"p": p, "q": q}
            break
        bad = next(
            (r for r in foci if leq(p, r) and leq(d, r) and not leq(q, r)), None
        )
        if bad is not None:
            witness = {"p": p, "q": q, "upper_bound": bad}
            break
    rep.add(
        Clause(
            "omp_orthomodular",
            PASS if witness is None else FAIL,
            checked=checked,
            witness=witness,
            note="below q, the difference q - p rejoins p to give q",
        )
    )

    if structure.finite:
        interval = structure.interval()
        witness = None
        checked = 0
        for p in foci:
            comp = unit - p
            for e in interval:
                checked += 1
                if leq(e, p) and leq(e, comp) and e != zero:
                    witness = {"p": p, "effect": e}
                    break
            if witness is not None:
                break
        rep.add(
            Clause(
                "omp_sharp",
                PASS if witness is None else FAIL,
                checked=checked,
                witness=witness,
                note="no nonzero effect sits below both p and its complement",
            )
        )

        witness = None
        checked = 0
        for p in foci:
            for e, f in itertools.product(interval, repeat=2):
                if not (leq(e, p) and leq(f, p) and leq(e + f, unit)):
                    continue
                checked += 1
                if not leq(e + f, p):
                    witness = {"p": p, "e": e, "f": f}
                    break
            if witness is not None:
                break
        rep.add(
            Clause(
                "omp_principal",
                PASS if witness is None else FAIL,
                checked=checked,
                witness=witness,
                note="defined sums of effects below p stay below p",
            )
        )
        return rep

    rng = cfg.rng("omp:interval")
    dim = structure.carrier.dim
    witness = None
    checked = 0
    for p in foci:
        comp = unit - p
        for _ in range(cfg.spot):
            e = conjugate(p, matrix_model.draw_effect(dim, rng))
            checked += 1
            if leq(e, comp) and e != zero:
                witness = {"p": p, "effect": e}
                break
        if witness is not None:
            break
    rep.add(
        Clause(
            "omp_sharp",
            CERTIFIED if witness is None else FAIL,
            checked=checked,
            witness=witness,
            note="no nonzero effect sits below both p and its complement; sampled",
        )
    )

    witness = None
    checked = 0
    for p in foci:
        for _ in range(cfg.spot):
            e = conjugate(p, matrix_model.draw_effect(dim, rng))
            f = conjugate(p, matrix_model.draw_effect(dim, rng))
            if not leq(e + f, unit):
                continue
            checked += 1
            if not leq(e + f, p):
                witness = {"p": p, "e": e, "f": f}
                break
        if witness is not None:
            break
    rep.add(
        Clause(
            "omp_principal",
            CERTIFIED if witness is None else FAIL,
            checked=checked,
            witness=witness,
            note="defined sums of effects below p stay below p; sampled",
        )
    )
    return rep


def _omp_sampled(base: CompressionBase, cfg: CheckConfig) -> Report:
    structure = base.structure
    leq = structure.leq
    unit = structure.unit
    zero = structure.zero
    dim = structure.carrier.dim
    rng = cfg.rng("omp")
    budget = max(cfg.spot, cfg.samples // 4)
    rep = Report(title="orthomodular poset laws")

    ok = base.contains_focus(zero) and base.contains_focus(unit)
    witness = None
    for _ in range(budget):
        p = matrix_model.draw_projection(dim, rng)
        if not _is_effect(structure, p):
            witness = {"p": p}
            break
    rep.add(
        Clause(
            "omp_bounded",
            CERTIFIED if ok and witness is None else FAIL,
            checked=budget,
            witness=witness if witness is not None else (None if ok else {"missing": "zero or unit"}),
            note="sampled projections are effects; zero and unit are foci",
        )
    )

    witness = None
    for _ in range(budget):
        p, q = matrix_model.draw_nested_projections(dim, rng)
        c = unit - p
        if not base.contains_focus(c) or unit - c != p:
            witness = {"p": p}
            break
        if not leq(unit - p, unit - q):
            witness = {"p": p, "q": q}
            break
    rep.add(
        Clause(
            "omp_orthocomplement",
            CERTIFIED if witness is None else FAIL,
            checked=budget,
            witness=witness,
            note="involutive and order reversing; sampled",
        )
    )

    witness = None
    for _ in range(budget):
        frame = matrix_model.cayley_orthogonal(dim, rng)
        slots = [rng.randint(0, 2) for _ in range(dim)]
        p = matrix_model.projection_from_mask(frame, [s == 0 for s in slots])
        q = matrix_model.projection_from_mask(frame, [s == 1 for s in slots])
        s_sum = p + q
        if not (base.contains_focus(s_sum) and leq(p, s_sum) and leq(q, s_sum)):
            witness = {"p": p, "q": q}
            break
        cover = matrix_model.projection_from_mask(
            frame, [s in (0, 1) or rng.randint(0, 1) for s in slots]
        )
        if leq(p, cover) and leq(q, cover) and not leq(s_sum, cover):
            witness = {"p": p, "q": q, "upper_bound": cover}
            break
    rep.add(
        Clause(
            "omp_orthogonal_join",
            CERTIFIED if witness is None else FAIL,
            checked=budget,
            witness=witness,
            note="orthogonal sums are least upper bounds; sampled frames",
        )
    )

    witness = None
    for _ in range(budget):
        p_big, p_small = matrix_model.draw_nested_projections(dim, rng)
        d = p_big - p_small
        if not base.contains_focus(d):
            witness = {"p": p_small, "q": p_big}
            break
    rep.add(
        Clause(
            "omp_orthomodular",
            CERTIFIED if witness is None else FAIL,
            checked=budget,
            witness=witness,
            note="differences of nested projections are projections; sampled",
        )
    )

    witness = None
    for _ in range(budget):
        p = matrix_model.draw_projection(dim, rng)
        e = conjugate(p, matrix_model.draw_effect(dim, rng))
        if leq(e, unit - p) and e != zero:
            witness = {"p": p, "effect": e}
            break
    rep.add(
        Clause(
            "omp_sharp",
            CERTIFIED if witness is None else FAIL,
            checked=budget,
            witness=witness,
            note="no nonzero effect sits below both p and its complement; sampled",
        )
    )

    witness = None
    checked = 0
    for _ in range(budget):
        p = matrix_model.draw_projection(dim, rng)
        e = conjugate(p, matrix_model.draw_effect(dim, rng))
        f = conjugate(p, matrix_model.draw_effect(dim, rng))
        if not leq(e + f, unit):
            continue
        checked += 1
        if not leq(e + f, p):
            witness = {"p": p, "e": e, "f": f}
            break
    rep.add(
        Clause(
            "omp_principal",
            CERTIFIED if witness is None else FAIL,
            checked=checked,
            witness=witness,
            note="defined sums of effects below p stay below p; sampled",
        )
    )
    return rep


# ---------------------------------------------------------------------------
# theorem sweeps


def _focus_stream(base: CompressionBase, cfg: CheckConfig, tag: str) -> tuple:
    if base.foci is not None:
        return base.foci
    rng = cfg.rng(tag)
    dim = base.structure.carrier.dim
    count = max(4, isqrt(max(cfg.samples, 1)))
    return tuple(matrix_model.draw_projection(dim, rng) for _ in range(count))


def _pair_stream(base: CompressionBase, cfg: CheckConfig, tag: str) -> tuple:
    if base.foci is not None:
        return tuple(itertools.product(base.foci, repeat=2))
    rng = cfg.rng(tag)
    dim = base.structure.carrier.dim
    pairs = []
    for i in range(max(cfg.samples, 1)):
        kind = i % 3
        if kind == 0:
            pairs.append(matrix_model.draw_projection_pair(dim, rng, commuting=True))
        elif kind == 1:
            pairs.append(matrix_model.draw_nested_projections(dim, rng))
        else:
            pairs.append(matrix_model.draw_projection_pair(dim, rng, commuting=False))
    return tuple(pairs)


def theorem_report(base: CompressionBase, cfg: Optional[CheckConfig] = None) -> Report:
    """Sweep the base-level consequences of the compression-base laws.

    Covers: the zero and unit maps, idempotence and focus fixing of each
    family member, the kernel/fixed-point exchange with the complementary
    map on positives, the five-way absorption equivalence, the two
    commutant absorption implications, agreement of the eight-way
    compatibility battery, meets of compatible pairs, and the orthomodular
    poset laws of the foci.
    """

    cfg = cfg or CheckConfig()
    structure = base.structure
    rep = Report(title="compression base theorems")
    rep.add(_zero_unit_clause(base))
    rep.add(_family_shape_clause(base, cfg))
    rep.add(_kernel_complement_clause(base, cfg))
    rep.add(_absorption_clause(base, cfg))
    rep.add(_commutant_absorption_clause(base, cfg))
    rep.add(_battery_clause(base, cfg))
    rep.add(_meet_clause(base, cfg))
    rep.extend(omp_report(base, cfg))
    return rep


def _zero_unit_clause(base: CompressionBase) -> Clause:
    structure = base.structure
    carrier = structure.carrier
    ok = base.contains_focus(structure.zero) and base.contains_focus(structure.unit)
    if ok:
        ok = endo_equal(structure, base.j(structure.zero), zero_endo(carrier))
        witness = None if ok else {"focus": structure.zero}
        if ok and not endo_equal(structure, base.j(structure.unit), identity_endo(carrier)):
            ok = False
            witness = {"focus": structure.unit}
    else:
        witness = {"missing": "zero or unit focus"}
    return Clause(
        "zero_and_unit_maps",
        PASS if ok else FAIL,
        checked=2,
        witness=None if ok else witness,
        note="the zero focus carries the zero map, the unit focus the identity",
    )


def _family_shape_clause(base: CompressionBase, cfg: CheckConfig) -> Clause:
    """Idempotence, focus fixing, and complement killing for each member."""

    structure = base.structure
    foci = _focus_stream(base, cfg, "theorem:family")
    checked = 0
    witness = None
    for p in foci:
        j = base.j(p)
        checked += 1
        if not endo_equal(structure, compose(j, j), j):
            witness = {"focus": p, "law": "idempotent"}
            break
        if j.apply(p) != p:
            witness = {"focus": p, "law": "fixes_focus"}
            break
        comp = structure.unit - p
        if structure.finite:
            bad = next(
                (
                    e
                    for e in structure.interval()
                    if structure.leq(e, comp) and j.apply(e) != structure.zero
                ),
                None,
            )
        else:
            rng = cfg.rng("theorem:family:kill")
            dim = structure.carrier.dim
            bad = None
            for _ in range(cfg.spot):
                e = conjugate(comp, matrix_model.draw_effect(dim, rng))
                if j.apply(e) != structure.zero:
                    bad = e
                    break
        if bad is not None:
            witness = {"focus": p, "law": "kills_complement", "effect": bad}
            break
    exact = structure.finite and base.foci is not None
    return Clause(
        "family_shape",
        (PASS if exact else CERTIFIED) if witness is None else FAIL,
        checked=checked,
        witness=witness,
        note="each member is idempotent, fixes its focus, kills below the complement",
    )


def _kernel_complement_clause(base: CompressionBase, cfg: CheckConfig) -> Clause:
    structure = base.structure
    foci = _focus_stream(base, cfg, "theorem:kernel")
    budget = max(1, ceil(max(cfg.samples, 1) / max(len(foci), 1)))
    checked = 0
    witness = None
    for p in foci:
        comp = base.complement(p)
        if not base.contains_focus(comp):
            witness = {"focus": p, "reason": "complement escapes the base"}
            break
        res = kernel_complement_check(
            structure, base.j(p), base.j(comp), cfg, budget=budget
        )
        checked += res.checked
        if not res.ok:
            witness = {"focus": p, "witness": res.witness}
            break
    return Clause(
        "kernel_complement_fixpoint",
        (PASS if structure.finite else CERTIFIED) if witness is None else FAIL,
        checked=checked,
        witness=witness,
        note="J_p kills a positive exactly when J_{u-p} fixes it",
    )


def _absorption_clause(base: CompressionBase, cfg: CheckConfig) -> Clause:
    structure = base.structure
    pairs = _pair_stream(base, cfg, "theorem:absorption")
    checked = 0
    witness = None
    for p, q in pairs:
        jp = base.j(p)
        jq = base.j(q)
        conds = (
            structure.leq(q, p),
            endo_equal(structure, compose(jp, jq), jq),
            jp.apply(q) == q,
            endo_equal(structure, compose(jq, jp), jq),
            jq.apply(p) == q,
        )
        checked += 1
        if len(set(conds)) != 1:
            witness = {"p": p, "q": q, "conditions": list(conds)}
            break
    exact = structure.finite and base.foci is not None
    return Clause(
        "absorption_equivalences",
        (PASS if exact else CERTIFIED) if witness is None else FAIL,
        checked=checked,
        witness=witness,
        note="five conditions equivalent to q below p agree on every pair",
    )


def _commutant_absorption_clause(base: CompressionBase, cfg: CheckConfig) -> Clause:
    structure = base.structure
    foci = _focus_stream(base, cfg, "theorem:commutant")
    checked = 0
    witness = None
    if structure.finite:
        box = structure.signed_universe(cfg.height_bound)
        for p in foci:
            for g in box:
                res = commutant_absorption_check(base, p, g)
                checked += 1
                if not res.ok:
                    witness = res.witness
                    break
            if witness is not None:
                break
        status = PASS if witness is None else FAIL
    else:
        rng = cfg.rng("theorem:commutant:g")
        dim = structure.carrier.dim
        n = cfg.height_bound
        budget = max(1, ceil(max(cfg.samples, 1) / max(len(foci), 1)))
        for p in foci:
            comp = structure.unit - p
            for i in range(budget):
                kind = i % 3
                if kind == 0:
                    g = matrix_model.draw_signed(dim, rng, n)
                elif kind == 1:
                    g = conjugate(p, matrix_model.draw_signed(dim, rng, n)) + conjugate(
                        comp, matrix_model.draw_signed(dim, rng, n)
                    )
                else:
                    g = conjugate(p, matrix_model.draw_positive(dim, rng, n)) + conjugate(
                        comp, matrix_model.draw_positive(dim, rng, n)
                    )
                res = commutant_absorption_check(base, p, g)
                checked += 1
                if not res.ok:
                    witness = res.witness
                    break
            if witness is not None:
                break
        status = CERTIFIED if witness is None else FAIL
    return Clause(
        "commutant_absorption",
        status,
        checked=checked,
        witness=witness,
        note="domination implies compatibility; compatible positives are dominated",
    )


def _battery_clause(base: CompressionBase, cfg: CheckConfig) -> Clause:
    structure = base.structure
    pairs = _pair_stream(base, cfg, "theorem:battery")
    checked = 0
    witness = None
    seen: dict = {}
    for p, q in pairs:
        battery = compat_battery(base, p, q, cfg)
        checked += 1
        if not battery.agree:
            witness = {"p": p, "q": q, "conditions": battery.values}
            break
        if base.foci is not None:
            seen[(p, q)] = battery.compatible
        else:
            back = compat_battery(base, q, p, cfg)
            if back.compatible != battery.compatible:
                witness = {"p": p, "q": q, "reason": "asymmetric"}
                break
    if witness is None and base.foci is not None:
        for (p, q), value in seen.items():
            if seen.get((q, p)) != value:
                witness = {"p": p, "q": q, "reason": "asymmetric"}
                break
    exact = structure.finite and base.foci is not None
    return Clause(
        "battery_agreement",
        (PASS if exact else CERTIFIED) if witness is None else FAIL,
        checked=checked,
        witness=witness,
        note="all eight compatibility conditions agree, symmetrically",
    )


def _meet_clause(base: CompressionBase, cfg: CheckConfig) -> Clause:
    structure = base.structure
    pairs = _pair_stream(base, cfg, "theorem:meet")
    if base.foci is None:
        pairs = pairs[: max(cfg.spot, cfg.samples // 4)]
    checked = 0
    witness = None
    for p, q in pairs:
        battery = compat_battery(base, p, q, cfg)
        if not battery.compatible:
            continue
        checked += 1
        try:
            r = meet(base, p, q, cfg)
        except (MeetUndefinedError, RuntimeError) as exc:
            witness = {"p": p, "q": q, "error": str(exc)}
            break
        if base.foci is not None:
            bad = next(
                (
                    s
                    for s in base.foci
                    if structure.leq(s, p)
                    and structure.leq(s, q)
                    and not structure.leq(s, r)
                ),
                None,
            )
            if bad is not None:
                witness = {"p": p, "q": q, "lower_bound": bad}
                break
    exact = structure.finite and base.foci is not None
    return Clause(
        "compatible_meet",
        (PASS if exact else CERTIFIED) if witness is None else FAIL,
        checked=checked,
        witness=witness,
        note="compatible pairs have J_p(q) as greatest lower bound",
    )
