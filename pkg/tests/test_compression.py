"""Retractions, compressions, and the compression-base laws."""

import pytest

from compbase import (
    CheckConfig,
    Endomorphism,
    MatrixModel,
    SymMat,
    Vec,
    base_from_family,
    compressible_group_report,
    conjugation_endo,
    direct_compression_base,
    endo_from_int_matrix,
    enumerate_retractions,
    is_compression,
    is_direct,
    kernel_complement_check,
    load_model,
    projection_base,
    retraction_certificate,
    trivial_base,
    validate_compression_base,
)
from conftest import FIXTURES_DIR, LATTICE


def test_declared_compressions_are_retractions(bundled, fast_cfg):
    model, base = bundled["m1"]
    for p in base.foci:
        cert = retraction_certificate(model, base.j(p), fast_cfg, declared_focus=p)
        assert cert.valid
        assert cert.focus == p


def test_swap_map_is_not_a_retraction(bundled, fast_cfg):
    model, _ = bundled["m1"]
    swap = endo_from_int_matrix(model, [[0, 1], [1, 0]])
    cert = retraction_certificate(model, swap, fast_cfg)
    assert not cert.valid
    failed = {name for name, res in cert.checks if not res.ok}
    assert "fixes_below_focus" in failed


def test_declared_focus_mismatch_is_flagged(bundled, fast_cfg):
    model, base = bundled["m1"]
    p, q = Vec((1, 0)), Vec((0, 1))
    cert = retraction_certificate(model, base.j(p), fast_cfg, declared_focus=q)
    assert not cert.valid
    assert dict(cert.checks)["declared_focus_matches"].witness == {
        "declared": q,
        "actual": p,
    }


def test_matrix_retraction_checks_need_conjugator(fast_cfg):
    model = MatrixModel(2)
    bare = Endomorphism(model, conjugation_endo(model, model.unit).matrix)
    with pytest.raises(ValueError):
        retraction_certificate(model, bare, fast_cfg)


def test_projection_conjugations_are_retractions(bundled, fast_cfg):
    model, base = bundled["m3"]
    for p in base.foci:
        cert = retraction_certificate(model, base.j(p), fast_cfg, declared_focus=p)
        assert cert.valid, (p, [n for n, r in cert.checks if not r.ok])


def test_is_compression_on_declared_bases(bundled, fast_cfg):
    for name in ("m1", "m5", "m3"):
        model, base = bundled[name]
        for p in base.foci:
            assert is_compression(model, base.j(p), fast_cfg).ok


def test_non_compression_endomorphism_detected(bundled, fast_cfg):
    model, _ = bundled["m1"]
    # (x, y) -> (y, y) kills (1, 0) yet (1, 0) is not below u - focus = 0
    collapse = endo_from_int_matrix(model, [[0, 1], [0, 1]])
    res = is_compression(model, collapse, fast_cfg)
    assert not res.ok
    e = res.witness["effect"]
    assert collapse.apply(e) == model.zero
    assert not model.leq(e, model.unit - collapse.apply(model.unit))


def test_conjugation_by_non_projection_is_not_a_compression(fast_cfg):
    model = MatrixModel(2)
    soft = SymMat.from_rows([["1/2", 0], [0, 0]])
    res = is_compression(model, conjugation_endo(model, soft), fast_cfg)
    assert not res.ok


def test_kernel_complement_exchange(bundled, fast_cfg):
    model, base = bundled["m1"]
    p = Vec((1, 0))
    comp = model.unit - p
    assert kernel_complement_check(model, base.j(p), base.j(comp), fast_cfg).ok
    # a map is not its own complement once it has a proper kernel
    assert not kernel_complement_check(model, base.j(p), base.j(p), fast_cfg).ok


def test_kernel_complement_exchange_matrix(bundled, fast_cfg):
    model, base = bundled["m3"]
    p = next(f for f in base.foci if f not in (model.zero, model.unit))
    jp = base.j(p)
    jc = base.j(model.unit - p)
    assert kernel_complement_check(model, jp, jc, fast_cfg).ok
    assert not kernel_complement_check(model, jp, jp, fast_cfg).ok


def test_retraction_counts(bundled, fast_cfg):
    counts = {"m1": 4, "m2": 2, "m5": 4}
    for name, expected in counts.items():
        model, base = bundled[name]
        certs = enumerate_retractions(model, fast_cfg)
        assert len(certs) == expected
        assert {c.focus for c in certs} == set(base.foci)


@pytest.mark.parametrize("name", LATTICE)
def test_compressible_group_laws(name, bundled, fast_cfg):
    report = compressible_group_report(bundled[name][0], fast_cfg)
    assert report.ok, report.first_failure()


@pytest.mark.parametrize("name", ("m1", "m2", "m3", "m4", "m5"))
def test_declared_bases_validate(name, bundled, fast_cfg):
    report = validate_compression_base(bundled[name][1], fast_cfg)
    assert report.ok, report.first_failure()


@pytest.mark.parametrize("name", ("m1", "m3"))
def test_trivial_base_validates(name, bundled, fast_cfg):
    model, _ = bundled[name]
    base = trivial_base(model)
    assert len(base.foci) == 2
    assert validate_compression_base(base, fast_cfg).ok


def test_projection_base_validates(fast_cfg):
    base = projection_base(MatrixModel(2))
    report = validate_compression_base(base, fast_cfg)
    assert report.ok, report.first_failure()
    # every clause on the intensional base is sampled, never exhaustive
    assert all(c.status == "certified" for c in report.clauses)


def test_fixture_bases_fail_their_intended_clause(fast_cfg):
    expected = {
        "corrupt_swapped_foci": "family_member_compression",
        "corrupt_missing_closure": "foci_sub_effect_algebra",
        "corrupt_nonnormal_foci": "foci_normal_subalgebra",
        "corrupt_focus_outside_interval": "family_member_compression",
    }
    for stem, clause in expected.items():
        _, base = load_model(FIXTURES_DIR / f"{stem}.json")
        report = validate_compression_base(base, fast_cfg)
        assert not report.ok, stem
        assert report.first_failure().name == clause, stem


def test_duplicate_focus_rejected_by_family_constructor(bundled):
    model, base = bundled["m1"]
    pairs = [(p, base.j(p)) for p in base.foci]
    with pytest.raises(ValueError, match="duplicate"):
        base_from_family(model, pairs + [pairs[0]])


def test_direct_base_of_product_model(bundled, fast_cfg):
    model, base = bundled["m1"]
    direct_base, report = direct_compression_base(model, fast_cfg)
    assert report.ok, report.first_failure()
    assert set(direct_base.foci) == set(base.foci)


def test_hadamard_conjugation_is_not_direct(fast_cfg):
    model = MatrixModel(2)
    hplus = SymMat.from_rows([["1/2", "1/2"], ["1/2", "1/2"]])
    res = is_direct(model, conjugation_endo(model, hplus), fast_cfg)
    assert not res.ok
    e = res.witness["effect"]
    j = conjugation_endo(model, hplus)
    assert not model.leq(j.apply(e), e)


def test_only_trivial_matrix_conjugations_are_direct(bundled, fast_cfg):
    # directness forces the focus central, and the matrix model has a
    # trivial center, so exactly the conjugations by 0 and the unit survive
    model, base = bundled["m3"]
    for p in base.foci:
        expected = p in (model.zero, model.unit)
        assert is_direct(model, base.j(p), fast_cfg).ok == expected
