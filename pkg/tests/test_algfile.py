"""The algebra file format: parsing, emission, and error reporting."""

import pytest

from akivis.algfile import (
    AlgebraFileError,
    emit_algebra,
    load_algebra,
    parse_algebra,
)
from akivis.catalog import CATALOG
from akivis.core import AkivisSpec, SuperTable, derive_akivis

from conftest import golden_path


# ------------------------------------------------------------------ round trips

def test_parse_emit_round_trip_catalog():
    for entry in CATALOG.values():
        alg = entry.algebra()
        text = emit_algebra(alg)
        again = parse_algebra(text)
        assert again == alg
        assert again.name == alg.name
        assert emit_algebra(again) == text


def test_spec_round_trip():
    spec = derive_akivis(CATALOG["matq-1-1"].algebra())
    text = emit_algebra(spec)
    again = parse_algebra(text)
    assert isinstance(again, AkivisSpec)
    assert again == spec


def test_load_golden_files_match_builders():
    for name, entry in CATALOG.items():
        assert load_algebra(golden_path(name)) == entry.algebra()


def test_golden_files_are_canonical():
    for name, entry in CATALOG.items():
        with open(golden_path(name), encoding="utf-8") as fh:
            on_disk = fh.read()
        assert on_disk == emit_algebra(entry.algebra())


# ------------------------------------------------------------------- parsing

def test_minimal_abelian_spec():
    alg = parse_algebra("kind akivis-spec\neven a\n")
    assert isinstance(alg, AkivisSpec)
    assert alg.bracket_of("a", "a").is_zero()
    assert alg.ternary_of("a", "a", "a").is_zero()


def test_unspecified_table_entries_default_to_zero():
    alg = parse_algebra("kind product-table\neven a b\na a = b\n")
    assert isinstance(alg, SuperTable)
    assert alg.product_of("a", "b").is_zero()
    assert alg.product_of("a", "a").support == ("b",)


def test_comments_and_blank_lines_ignored():
    text = "# header comment\n\nkind akivis-spec\neven a  # trailing\n\n"
    alg = parse_algebra(text)
    assert alg.basis.names == ("a",)


def test_rational_coefficients():
    alg = parse_algebra(
        "kind product-table\neven a\na a = -3/2 a\n")
    assert str(alg.product_of("a", "a")) == "-3/2 a"
    alg = parse_algebra(
        "kind product-table\neven a\na a = 2 * a\n")
    assert str(alg.product_of("a", "a")) == "2 a"


def test_unit_header():
    alg = parse_algebra(
        "kind product-table\neven e\nunit e\ne e = e\n")
    assert alg.unit == "e"


# ---------------------------------------------------------------- error cases

@pytest.mark.parametrize("text,fragment", [
    ("even a\n", "kind"),                                     # kind required
    ("kind magic\neven a\n", "kind"),                         # unknown kind
    ("kind akivis-spec\n", "generator"),                      # empty basis
    ("kind akivis-spec\neven a\na b = 0\n", "undeclared"),    # unknown symbol
    ("kind akivis-spec\neven a\na a = b\n", "undeclared"),    # unknown in rhs
    ("kind akivis-spec\neven a\na a = \n", "right-hand"),     # empty rhs
    ("kind product-table\neven a\na a = 1/0 a\n", "zero denominator"),
    ("kind product-table\neven a\na a = x2 a\n", "bad rational"),
    ("kind product-table\neven a\na a a = a\n", "ternary"),   # ternary in table
    ("kind product-table\neven a\na = a\n", "generators"),    # 1-symbol lhs
    ("kind akivis-spec\neven a\na a = 0\na a = 0\n", "duplicate"),
    ("kind akivis-spec\neven a\nkind akivis-spec\n", "duplicate"),
    ("kind product-table\neven a\nunit b\n", "not in basis"),
    ("kind akivis-spec\neven a\nunit a\n", "unit"),           # unit in spec
    ("kind akivis-spec\neven a a\n", "duplicate"),
])
def test_parse_errors_carry_context(text, fragment):
    with pytest.raises(AlgebraFileError) as exc:
        parse_algebra(text)
    assert fragment in str(exc.value)


def test_error_lines_are_reported():
    with pytest.raises(AlgebraFileError) as exc:
        parse_algebra("kind akivis-spec\neven a\na a = q\n")
    assert str(exc.value).startswith("line 3:")


def test_construction_invariants_surface_as_file_errors():
    # a symmetric bracket between even generators violates
    # superanticommutativity and must be rejected with a file error
    text = ("kind akivis-spec\neven g1 g2\n"
            "g1 g2 = g1\ng2 g1 = g1\n")
    with pytest.raises(AlgebraFileError) as exc:
        parse_algebra(text)
    assert "superanticommutative" in str(exc.value)


def test_grading_violation_surfaces_as_file_error():
    text = ("kind product-table\neven g1\nodd h1\n"
            "g1 g1 = h1\n")
    with pytest.raises(AlgebraFileError) as exc:
        parse_algebra(text)
    assert "grading" in str(exc.value)


def test_missing_file_reports_os_error(tmp_path):
    with pytest.raises(OSError):
        load_algebra(str(tmp_path / "absent.alg"))


# ------------------------------------------------------------------- emission

def test_emit_omits_unit_coefficients():
    text = emit_algebra(CATALOG["octonions"].algebra())
    assert "e0 e0 = e0" in text
    assert " = 1 e0" not in text


def test_emit_orders_rows_by_basis():
    text = emit_algebra(derive_akivis(CATALOG["matq-1-1"].algebra()))
    lines = [l for l in text.splitlines() if "=" in l]
    binary = [l for l in lines if len(l.split("=")[0].split()) == 2]
    firsts = [l.split()[0] for l in binary]
    order = {n: i for i, n in enumerate(("E1_1", "E2_2", "E1_2", "E2_1"))}
    assert firsts == sorted(firsts, key=order.__getitem__)
