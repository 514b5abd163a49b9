"""The compatibility battery, meets, substructures, morphisms, theorems."""

import pytest

from compbase import (
    BATTERY_CONDITIONS,
    MeetUndefinedError,
    MembershipError,
    SymMat,
    Vec,
    commutant_absorption_check,
    commutant_substructure,
    compat_battery,
    direct_product_report,
    image_substructure,
    in_commutant,
    meet,
    morphism_report,
    omp_report,
    projection_base,
    restricted_base,
    substructure_report,
    theorem_report,
    trivial_base,
    zero_endo,
)

DIAG0 = SymMat.from_rows([[1, 0], [0, 0]])
DIAG1 = SymMat.from_rows([[0, 0], [0, 1]])
HPLUS = SymMat.from_rows([["1/2", "1/2"], ["1/2", "1/2"]])


def test_battery_has_eight_conditions(bundled, fast_cfg):
    _, base = bundled["m1"]
    rep = compat_battery(base, Vec((1, 0)), Vec((0, 1)), fast_cfg)
    assert tuple(name for name, _ in rep.conditions) == BATTERY_CONDITIONS
    assert len(BATTERY_CONDITIONS) == 8


def test_battery_all_true_for_orthogonal_coordinates(bundled, fast_cfg):
    _, base = bundled["m1"]
    rep = compat_battery(base, Vec((1, 0)), Vec((0, 1)), fast_cfg)
    assert rep.compatible and rep.agree


def test_battery_all_false_for_skew_projections(bundled, fast_cfg):
    _, base = bundled["m3"]
    rep = compat_battery(base, DIAG0, HPLUS, fast_cfg)
    assert not rep.compatible
    assert rep.agree, rep.values
    assert all(v is False for v in rep.values.values())


def test_battery_trivial_pairs_are_compatible(bundled, fast_cfg):
    model, base = bundled["m3"]
    for q in base.foci:
        for p in (model.zero, model.unit, q):
            rep = compat_battery(base, p, q, fast_cfg)
            assert rep.compatible and rep.agree, (p, q)


def test_battery_agreement_and_symmetry_on_declared_pairs(bundled, fast_cfg):
    for name in ("m1", "m5", "m3"):
        _, base = bundled[name]
        for p in base.foci:
            for q in base.foci:
                fwd = compat_battery(base, p, q, fast_cfg)
                assert fwd.agree, (name, p, q, fwd.values)
                rev = compat_battery(base, q, p, fast_cfg)
                assert fwd.compatible == rev.compatible


def test_battery_rejects_non_focus(bundled, fast_cfg):
    _, base = bundled["m1"]
    with pytest.raises(MembershipError):
        compat_battery(base, Vec((1, 0)), Vec((2, 0)), fast_cfg)


def test_commutant_membership(bundled):
    _, base = bundled["m3"]
    assert in_commutant(base, DIAG0, SymMat.from_rows([[5, 0], [0, 7]]))
    assert not in_commutant(base, DIAG0, HPLUS)
    assert commutant_absorption_check(base, DIAG0, DIAG1).ok
    assert commutant_absorption_check(base, DIAG0, HPLUS).ok


def test_meet_of_nested_foci(bundled, fast_cfg):
    _, base = bundled["m1"]
    assert meet(base, Vec((1, 0)), Vec((1, 1)), fast_cfg) == Vec((1, 0))
    assert meet(base, Vec((1, 0)), Vec((1, 0)), fast_cfg) == Vec((1, 0))


def test_meet_of_orthogonal_projections(bundled, fast_cfg):
    model, base = bundled["m3"]
    assert meet(base, DIAG0, DIAG1, fast_cfg) == model.zero
    assert meet(base, HPLUS, model.unit, fast_cfg) == HPLUS


def test_meet_undefined_for_incompatible_pair(bundled, fast_cfg):
    _, base = bundled["m3"]
    with pytest.raises(MeetUndefinedError):
        meet(base, DIAG0, HPLUS, fast_cfg)


def test_image_substructure_shape(bundled, fast_cfg):
    model, base = bundled["m1"]
    v = Vec((1, 0))
    sub, rbase, rep = substructure_report(base, v, "image", fast_cfg)
    assert rep.ok, rep.first_failure()
    assert sub.unit == v
    assert set(sub.interval()) == {Vec((0, 0)), Vec((1, 0))}
    assert set(rbase.foci) == {Vec((0, 0)), Vec((1, 0))}


def test_commutant_substructure_shape(bundled, fast_cfg):
    model, base = bundled["m1"]
    v = Vec((1, 0))
    sub, rbase, rep = substructure_report(base, v, "commutant", fast_cfg)
    assert rep.ok, rep.first_failure()
    assert sub.unit == model.unit
    # every focus of this product model is compatible with v
    assert set(rbase.foci) == set(base.foci)


def test_matrix_commutant_keeps_commuting_foci(bundled, fast_cfg):
    model, base = bundled["m3"]
    sub = commutant_substructure(base, DIAG0)
    rbase = restricted_base(base, sub)
    assert set(rbase.foci) == {model.zero, DIAG0, DIAG1, model.unit}
    assert sub.is_member(SymMat.from_rows([[3, 0], [0, -2]]))
    assert not sub.is_member(HPLUS)


def test_matrix_image_substructure_reports_clean(bundled, fast_cfg):
    _, base = bundled["m3"]
    for v in (DIAG0, HPLUS):
        sub, rbase, rep = substructure_report(base, v, "image", fast_cfg)
        assert rep.ok, (v, rep.first_failure())
        assert sub.unit == v


def test_substructure_rejects_unknown_kind(bundled, fast_cfg):
    _, base = bundled["m1"]
    with pytest.raises(ValueError):
        substructure_report(base, Vec((1, 0)), "kernel", fast_cfg)
    with pytest.raises(MembershipError):
        image_substructure(base, Vec((2, 0)))


def test_identity_is_a_based_morphism(bundled, fast_cfg):
    from compbase import identity_endo

    model, base = bundled["m1"]
    rep = morphism_report(model, base, model, base, identity_endo(model), fast_cfg)
    assert rep.ok, rep.first_failure()


def test_zero_map_is_not_unit_preserving(bundled, fast_cfg):
    model, base = bundled["m1"]
    rep = morphism_report(model, base, model, base, zero_endo(model), fast_cfg)
    assert not rep.ok
    assert rep.first_failure().name == "preserves_unit"


def test_compression_is_a_morphism_onto_its_image(bundled, fast_cfg):
    model, base = bundled["m1"]
    v = Vec((1, 0))
    sub_c = commutant_substructure(base, v)
    sub_h = image_substructure(base, v)
    rep = morphism_report(
        sub_c,
        restricted_base(base, sub_c),
        sub_h,
        restricted_base(base, sub_h),
        base.j(v),
        fast_cfg,
    )
    assert rep.ok, rep.first_failure()


@pytest.mark.parametrize("name,v", [("m1", Vec((1, 0))), ("m5", Vec((0, 2)))])
def test_direct_product_decomposition_lattice(name, v, bundled, fast_cfg):
    _, base = bundled[name]
    rep = direct_product_report(base, v, fast_cfg)
    assert rep.ok, rep.first_failure()


def test_direct_product_decomposition_matrix(bundled, fast_cfg):
    _, base = bundled["m3"]
    rep = direct_product_report(base, DIAG0, fast_cfg)
    assert rep.ok, rep.first_failure()


@pytest.mark.parametrize("name", ("m1", "m2", "m5", "m3", "m4"))
def test_theorem_report_clean_on_declared_bases(name, bundled, fast_cfg):
    _, base = bundled[name]
    rep = theorem_report(base, fast_cfg)
    assert rep.ok, (name, rep.first_failure())


def test_theorem_report_clean_on_intensional_base(bundled, fast_cfg):
    model, _ = bundled["m3"]
    rep = theorem_report(projection_base(model), fast_cfg)
    assert rep.ok, rep.first_failure()
    # the zero/unit maps are exact matrix identities; everything else is sampled
    for c in rep.clauses:
        expected = "pass" if c.name == "zero_and_unit_maps" else "certified"
        assert c.status == expected, c.name


def test_theorem_report_clause_names(bundled, fast_cfg):
    _, base = bundled["m2"]
    rep = theorem_report(base, fast_cfg)
    names = [c.name for c in rep.clauses]
    for expected in (
        "zero_and_unit_maps",
        "family_shape",
        "kernel_complement_fixpoint",
        "absorption_equivalences",
        "commutant_absorption",
        "battery_agreement",
        "compatible_meet",
        "omp_bounded",
        "omp_orthocomplement",
        "omp_orthogonal_join",
        "omp_orthomodular",
        "omp_sharp",
        "omp_principal",
    ):
        assert expected in names


def test_omp_report_alone(bundled, fast_cfg):
    _, base = bundled["m5"]
    rep = omp_report(base, fast_cfg)
    assert rep.ok, rep.first_failure()


def test_trivial_base_theorems(bundled, fast_cfg):
    model, _ = bundled["m2"]
    rep = theorem_report(trivial_base(model), fast_cfg)
    assert rep.ok, rep.first_failure()
