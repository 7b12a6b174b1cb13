"""Vectors, graded bases, product tables, and the derived Akivis structure."""

from fractions import Fraction

import pytest

from akivis.catalog import random_super_table, random_vector
from akivis.core import (
    AkivisSpec,
    BasisMismatchError,
    GradedBasis,
    GradingError,
    SuperTable,
    Vector,
    associator,
    bracket_eval,
    derive_akivis,
    koszul,
    linear_combine,
    multiply,
    super_commutator,
    super_jacobian,
    ternary_eval,
)

H = Fraction(1, 2)


def basis2() -> GradedBasis:
    return GradedBasis.from_parts(["a", "b"], ["x"])


# ---------------------------------------------------------------- GradedBasis

def test_basis_parts_and_parities():
    b = basis2()
    assert b.names == ("a", "b", "x")
    assert b.parity("a") == 0 and b.parity("x") == 1
    assert b.even_names == ("a", "b")
    assert b.odd_names == ("x",)
    assert b.dims() == (2, 1)
    assert b.index("b") == 1


def test_basis_rejects_duplicates_and_bad_names():
    with pytest.raises(Exception):
        GradedBasis.from_parts(["a", "a"], [])
    with pytest.raises(Exception):
        GradedBasis.from_parts(["a b"], [])
    with pytest.raises(Exception):
        GradedBasis.from_parts([], [])  # empty basis


def test_basis_requires_evens_before_odds():
    with pytest.raises(Exception):
        GradedBasis(names=("x", "a"), parities=(1, 0))


def test_koszul_sign():
    assert koszul(0, 0) == 1
    assert koszul(1, 0) == 1
    assert koszul(0, 1) == 1
    assert koszul(1, 1) == -1


# --------------------------------------------------------------------- Vector

def test_vector_arithmetic_and_zero_dropping():
    b = basis2()
    u = Vector(b, [("a", 1), ("x", H)])
    v = Vector(b, [("a", -1), ("b", 2)])
    s = u + v
    assert s.coeff("a") == 0
    assert s.support == ("b", "x")
    assert (s - s).is_zero()
    assert (2 * u).coeff("x") == 1
    assert u.scaled(Fraction(2, 3)).coeff("a") == Fraction(2, 3)
    assert -u + u == Vector(b, [])


def test_vector_accumulates_duplicate_entries():
    b = basis2()
    v = Vector(b, [("a", 1), ("a", 2)])
    assert v.coeff("a") == 3


def test_vector_str_and_order():
    b = basis2()
    v = Vector(b, [("x", -1), ("a", Fraction(3, 2)), ("b", 1)])
    assert str(v) == "3/2 a + b + -x"
    assert str(Vector(b, [])) == "0"


def test_vector_parity_components():
    b = basis2()
    v = Vector(b, [("a", 1), ("x", 2)])
    parts = v.parity_components()
    assert [(p, part.support) for p, part in parts] == [(0, ("a",)), (1, ("x",))]
    with pytest.raises(GradingError):
        v.homogeneous_parity()
    assert Vector(b, []).homogeneous_parity() is None
    assert Vector.unit(b, "x").homogeneous_parity() == 1


def test_vector_basis_mismatch():
    b1 = basis2()
    b2 = GradedBasis.from_parts(["a", "b"], ["y"])
    with pytest.raises(BasisMismatchError):
        Vector.unit(b1, "a") + Vector.unit(b2, "a")


def test_linear_combine():
    b = basis2()
    v = linear_combine([(2, Vector.unit(b, "a")), (H, Vector.unit(b, "x"))])
    assert v.coeff("a") == 2 and v.coeff("x") == H


# ----------------------------------------------------------------- SuperTable

def _tiny_table() -> SuperTable:
    """Two-dimensional algebra: unit e plus an odd square root of zero."""
    b = GradedBasis.from_parts(["e"], ["x"])
    z = Vector(b, [])
    prod = {
        ("e", "e"): Vector.unit(b, "e"),
        ("e", "x"): Vector.unit(b, "x"),
        ("x", "e"): Vector.unit(b, "x"),
        ("x", "x"): z,
    }
    return SuperTable(b, prod, unit="e", name="tiny")


def test_table_products_and_multiply():
    t = _tiny_table()
    b = t.basis
    u = Vector(b, [("e", 1), ("x", 1)])
    assert multiply(t, u, u) == Vector(b, [("e", 1), ("x", 2)])
    assert t.product_of("x", "x").is_zero()


def test_table_requires_complete_entries():
    b = GradedBasis.from_parts(["e"], [])
    with pytest.raises(Exception):
        SuperTable(b, {}, unit="e")


def test_table_rejects_grading_violation():
    b = GradedBasis.from_parts(["e"], ["x"])
    bad = {
        ("e", "e"): Vector.unit(b, "e"),
        ("e", "x"): Vector.unit(b, "x"),
        ("x", "e"): Vector.unit(b, "x"),
        ("x", "x"): Vector.unit(b, "x"),  # odd*odd must be even
    }
    with pytest.raises(GradingError):
        SuperTable(b, bad, unit="e")


def test_table_rejects_fake_unit():
    b = GradedBasis.from_parts(["e"], ["x"])
    z = Vector(b, [])
    bad = {
        ("e", "e"): Vector.unit(b, "e"),
        ("e", "x"): z,  # e is not a left unit then
        ("x", "e"): Vector.unit(b, "x"),
        ("x", "x"): z,
    }
    with pytest.raises(Exception):
        SuperTable(b, bad, unit="e")


def test_super_commutator_koszul_sign():
    t = _tiny_table()
    b = t.basis
    x = Vector.unit(b, "x")
    # odd/odd: [x,x] = xx + xx = 2 x^2 = 0 here
    assert super_commutator(t, x, x).is_zero()
    e = Vector.unit(b, "e")
    assert super_commutator(t, e, x).is_zero()  # unit commutes


def test_associator_vanishes_for_associative():
    t = _tiny_table()
    b = t.basis
    u = Vector(b, [("e", 2), ("x", -1)])
    assert associator(t, u, u, u).is_zero()


# ----------------------------------------------------------------- AkivisSpec

def test_derive_akivis_and_eval(matq):
    spec = derive_akivis(matq)
    assert spec.name == matq.name
    x = Vector.unit(spec.basis, "E1_2")
    y = Vector.unit(spec.basis, "E2_1")
    br = bracket_eval(spec, x, y)
    assert br == Vector(spec.basis, [("E1_1", 1), ("E2_2", -1)])
    t = ternary_eval(spec, x, y, x)
    assert t == x.scaled(2)


def test_spec_rejects_symmetric_bracket():
    b = GradedBasis.from_parts(["a", "b"], [])
    unit = Vector.unit
    z = Vector(b, [])
    bracket = {(p, q): z for p in b.names for q in b.names}
    bracket[("a", "b")] = unit(b, "a")
    bracket[("b", "a")] = unit(b, "a")  # should be -[a,b]
    ternary = {(p, q, r): z for p in b.names for q in b.names for r in b.names}
    with pytest.raises(Exception):
        AkivisSpec(b, bracket, ternary)


def test_spec_odd_self_bracket_allowed():
    # for odd x, superanticommutativity reads [x,x] = +[x,x]: no constraint
    b = GradedBasis.from_parts(["a"], ["x"])
    z = Vector(b, [])
    bracket = {(p, q): z for p in b.names for q in b.names}
    bracket[("x", "x")] = Vector.unit(b, "a")
    ternary = {(p, q, r): z for p in b.names for q in b.names for r in b.names}
    spec = AkivisSpec(b, bracket, ternary)
    assert spec.bracket_of("x", "x") == Vector.unit(b, "a")


def test_super_jacobian_matches_definition(oct_spec):
    b = oct_spec.basis
    x = Vector.unit(b, "e3")
    y = Vector.unit(b, "e7")
    z = Vector.unit(b, "e2")
    sj = super_jacobian(oct_spec, x, y, z)
    # cyclic double brackets with Koszul signs, spelled out
    def bb(p, q, r):
        return bracket_eval(oct_spec, bracket_eval(oct_spec, p, q), r)
    expected = bb(x, y, z) + bb(y, z, x).scaled(koszul(0, 1)) + bb(z, x, y)
    assert sj == expected


def test_random_tables_close_and_derive(rng):
    for _ in range(10):
        t = random_super_table(rng, 2, 2)
        spec = derive_akivis(t)
        x = random_vector(rng, t.basis, parity=0)
        y = random_vector(rng, t.basis, parity=1)
        got = bracket_eval(spec, x, y)
        want = super_commutator(t, x, y)
        assert got == want
