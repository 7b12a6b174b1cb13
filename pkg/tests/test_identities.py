"""Identity sweeps, witnesses, and classification labels."""

import pytest

from akivis.catalog import CATALOG, random_super_table
from akivis.core import Vector, derive_akivis, super_jacobian
from akivis.identities import (
    LABEL_LIE,
    LABEL_PROPER,
    ReportBuilder,
    akivis_identity_sides,
    check_akivis_identity,
    check_lie,
    check_malcev_instance,
    check_malcev_ternary,
    check_superanticommutative,
    classify,
    run_check,
)


def unit(spec, name):
    return Vector.unit(spec.basis, name)


# ------------------------------------------------------------ derived algebras

def test_every_catalog_spec_satisfies_akivis(catalog_specs):
    for name, spec in catalog_specs.items():
        report = check_akivis_identity(spec)
        assert report.passed, f"{name}: {report.summary_line()}"
        assert check_superanticommutative(spec).passed


def test_random_derived_specs_satisfy_akivis(rng):
    for _ in range(15):
        spec = derive_akivis(random_super_table(rng, 2, 2))
        assert check_akivis_identity(spec).passed
        assert check_superanticommutative(spec).passed


def test_identity_sides_match_on_octonions(oct_spec):
    lhs, rhs = akivis_identity_sides(oct_spec, "e3", "e7", "e2")
    assert lhs == rhs
    assert not lhs.is_zero()


# ----------------------------------------------------------- witness inequalities

def test_octonion_super_jacobian_witness(oct_spec):
    sj = super_jacobian(oct_spec, unit(oct_spec, "e3"), unit(oct_spec, "e7"),
                        unit(oct_spec, "e2"))
    assert sj == Vector.unit(oct_spec.basis, "e6", 12)


def test_octonion_lie_check_fails_with_witnesses(oct_spec):
    report = check_lie(oct_spec, max_witnesses=4)
    assert not report.passed
    assert report.failures > 0
    assert len(report.witnesses) == 4
    assert report.checked == 8 ** 3 * 2  # ternary and super-Jacobian sweeps


def test_octonion_malcev_instance_fails(oct_spec):
    elems = [unit(oct_spec, n) for n in ("e4", "e2", "e3", "e5")]
    report = check_malcev_instance(oct_spec, elems, weights=(1, -1, 0, 0))
    assert not report.passed
    w = report.witnesses[0]
    assert str(w.lhs) == "-16 e0" and str(w.rhs) == "8 e0"


def test_matq_super_jacobian_witness(matq_spec):
    x = unit(matq_spec, "E1_2")
    y = unit(matq_spec, "E2_1")
    sj = super_jacobian(matq_spec, x, y, x)
    assert sj == x.scaled(4)


def test_matq_malcev_instance_fails(matq_spec):
    x = unit(matq_spec, "E1_2")
    y = unit(matq_spec, "E2_1")
    b = Vector(matq_spec.basis, [("E1_1", 1), ("E2_2", -1)])
    report = check_malcev_instance(matq_spec, [x, y, x, y], weights=(2, -1, 0, 0))
    assert not report.passed
    w = report.witnesses[0]
    assert w.lhs == b.scaled(6)
    assert w.rhs == Vector(matq_spec.basis, [])


def test_malcev_instance_classical_weights_hold_in_lie(rng):
    # with unit weights the pattern is a consequence of the ungraded Jacobi
    # identity, so it holds on the entirely even quaternion example
    spec = CATALOG["quaternions"].akivis()
    names = spec.basis.names
    for _ in range(20):
        elems = [Vector.unit(spec.basis, rng.choice(names)) for _ in range(4)]
        report = check_malcev_instance(spec, elems)
        assert report.passed, report.summary_line()


# ----------------------------------------------------------------- classification

def test_classification_labels(catalog_specs):
    expected = {name: entry.classification for name, entry in CATALOG.items()}
    for name, spec in catalog_specs.items():
        assert classify(spec) == expected[name], name


def test_quaternions_are_lie(quaternions):
    spec = derive_akivis(quaternions)
    assert check_lie(spec).passed
    assert check_malcev_ternary(spec).passed
    assert classify(spec) == LABEL_LIE


def test_octonions_fail_malcev_ternary(oct_spec):
    report = check_malcev_ternary(oct_spec)
    assert not report.passed
    assert classify(oct_spec) == LABEL_PROPER


# ------------------------------------------------------------------- reporting

def test_report_builder_caps_witnesses():
    rb = ReportBuilder("demo", cap=2)
    for i in range(5):
        rb.record((f"g{i}",), i, i + 1)
    report = rb.report()
    assert report.failures == 5
    assert len(report.witnesses) == 2
    assert report.checked == 5
    assert not report.passed
    assert "demo: fail (5 tuples checked, 5 failed)" == report.summary_line()


def test_report_to_dict_roundtrips_strings(oct_spec):
    report = check_lie(oct_spec, max_witnesses=1)
    d = report.to_dict()
    assert d["status"] == "fail"
    assert d["identity"] == "lie"
    assert isinstance(d["witnesses"][0]["lhs"], str)


def test_run_check_dispatch_and_unknown(oct_spec):
    assert run_check(oct_spec, "akivis").passed
    with pytest.raises(ValueError):
        run_check(oct_spec, "nope")


def test_weighted_instance_rejects_bad_weights(oct_spec):
    elems = [unit(oct_spec, "e1")] * 4
    with pytest.raises(ValueError):
        check_malcev_instance(oct_spec, elems, weights=(1, 2))
