"""A line-based text format for graded algebras and Akivis specs.

Grammar (one construct per line; `#` starts a comment, blank lines ignored):

    file    := header* entry*
    header  := "name" NAME
             | "kind" ("product-table" | "akivis-spec")
             | "even" IDENT*
             | "odd" IDENT*
             | "unit" IDENT                      (product-table only)
    entry   := IDENT IDENT "=" rhs               (product or bracket entry)
             | IDENT IDENT IDENT "=" rhs         (ternary entry, akivis-spec only)
    rhs     := "0" | term ("+" term)*
    term    := [RATIONAL ["*"]] IDENT
    RATIONAL:= "-"? DIGITS ("/" DIGITS)?

`kind` is required, generators must be declared (via `even`/`odd`) before any
entry, and unspecified table entries default to zero.  Binary entries of an
akivis-spec file are bracket values, ternary entries are associator-style
ternary values.  Parsing ends with the construction invariants of SuperTable
or AkivisSpec (grading closure, unit axiom, superanticommutativity), so a
file that decodes but violates them is rejected with the offending entry.

emit_algebra writes the canonical form: name, kind, even, odd, unit, then
nonzero entries row-major in basis order with lowest-terms coefficients
(coefficient 1 omitted).  parse_algebra(emit_algebra(x)) reproduces x, and
emitting a parsed canonical file reproduces its bytes.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .core import (
    AkivisSpec,
    AlgebraError,
    GradedBasis,
    SuperTable,
    Vector,
)

Algebra = Union[SuperTable, AkivisSpec]

KIND_TABLE = "product-table"
KIND_SPEC = "akivis-spec"

_RAT_RE = re.compile(r"-?\d+(/\d+)?\Z")
_NAME_RE = re.compile(r"[A-Za-z0-9_-]+\Z")
_HEADERS = ("name", "kind", "even", "odd", "unit")


class AlgebraFileError(AlgebraError):
    """A syntax or semantic error in an algebra file, with its line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def _parse_rhs(chunk: str, line_no: int) -> list[tuple[Fraction, str]]:
    """The right-hand side as (coefficient, generator name) pairs."""
    chunk = chunk.strip()
    if not chunk:
        raise AlgebraFileError("empty right-hand side", line_no)
    if chunk == "0":
        return []
    pairs = []
    for raw in chunk.split("+"):
        tokens = raw.replace("*", " ").split()
        if len(tokens) == 1:
            coeff, name = "1", tokens[0]
            if _RAT_RE.match(name):
                raise AlgebraFileError(f"term {raw.strip()!r} has no generator", line_no)
        elif len(tokens) == 2:
            coeff, name = tokens
        else:
            raise AlgebraFileError(f"cannot read term {raw.strip()!r}", line_no)
        if not _RAT_RE.match(coeff):
            raise AlgebraFileError(f"bad rational {coeff!r}", line_no)
        try:
            value = Fraction(coeff)
        except ZeroDivisionError:
            raise AlgebraFileError(f"zero denominator in {coeff!r}", line_no) from None
        pairs.append((value, name))
    return pairs


def parse_algebra(text: str) -> Algebra:
    """Decode one algebra file; returns a SuperTable or AkivisSpec."""
    name: str | None = None
    kind: str | None = None
    even: tuple[str, ...] | None = None
    odd: tuple[str, ...] | None = None
    unit: str | None = None
    basis: GradedBasis | None = None
    binary: dict[tuple[str, str], list[tuple[str, str]]] = {}
    ternary: dict[tuple[str, str, str], list[tuple[str, str]]] = {}

    def ensure_basis(line_no: int) -> GradedBasis:
        nonlocal basis
        if basis is None:
            try:
                basis = GradedBasis.from_parts(even or (), odd or ())
            except AlgebraError as exc:
                raise AlgebraFileError(str(exc), line_no) from None
        return basis

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            if kind is None:
                raise AlgebraFileError("kind must be declared before entries", line_no)
            if even is None and odd is None:
                raise AlgebraFileError("generators must be declared before entries", line_no)
            b = ensure_basis(line_no)
            lhs_text, rhs_text = line.split("=", 1)
            lhs = tuple(lhs_text.split())
            for g in lhs:
                if g not in b:
                    raise AlgebraFileError(f"undeclared generator {g!r}", line_no)
            rhs = _parse_rhs(rhs_text, line_no)
            for _, g in rhs:
                if g not in b:
                    raise AlgebraFileError(f"undeclared generator {g!r}", line_no)
            if len(lhs) == 2:
                if lhs in binary:
                    raise AlgebraFileError(f"duplicate entry for {' '.join(lhs)}", line_no)
                binary[lhs] = rhs
            elif len(lhs) == 3:
                if kind != KIND_SPEC:
                    raise AlgebraFileError("ternary entries only appear in akivis-spec files", line_no)
                if lhs in ternary:
                    raise AlgebraFileError(f"duplicate entry for {' '.join(lhs)}", line_no)
                ternary[lhs] = rhs
            else:
                raise AlgebraFileError("entries take two or three generators", line_no)
            continue
        tokens = line.split()
        keyword, args = tokens[0], tokens[1:]
        if keyword not in _HEADERS:
            raise AlgebraFileError(f"unknown directive {keyword!r}", line_no)
        if binary or ternary:
            raise AlgebraFileError("headers must precede entries", line_no)
        if keyword == "name":
            if len(args) != 1 or not _NAME_RE.match(args[0]):
                raise AlgebraFileError("name takes one token of [A-Za-z0-9_-]+", line_no)
            if name is not None:
                raise AlgebraFileError("duplicate name line", line_no)
            name = args[0]
        elif keyword == "kind":
            if len(args) != 1 or args[0] not in (KIND_TABLE, KIND_SPEC):
                raise AlgebraFileError(
                    f"kind is {KIND_TABLE!r} or {KIND_SPEC!r}", line_no)
            if kind is not None:
                raise AlgebraFileError("duplicate kind line", line_no)
            kind = args[0]
        elif keyword == "even":
            if even is not None:
                raise AlgebraFileError("duplicate even line", line_no)
            even = tuple(args)
        elif keyword == "odd":
            if odd is not None:
                raise AlgebraFileError("duplicate odd line", line_no)
            odd = tuple(args)
        elif keyword == "unit":
            if len(args) != 1:
                raise AlgebraFileError("unit takes one generator", line_no)
            if unit is not None:
                raise AlgebraFileError("duplicate unit line", line_no)
            unit = args[0]

    if kind is None:
        raise AlgebraFileError("missing kind line")
    if even is None and odd is None:
        raise AlgebraFileError("missing generator declarations")
    if unit is not None and kind != KIND_TABLE:
        raise AlgebraFileError("unit only applies to product-table files")
    b = ensure_basis(0)

    def vec(pairs: list[tuple[Fraction, str]]) -> Vector:
        return Vector(b, [(g, c) for c, g in pairs])

    try:
        if kind == KIND_TABLE:
            table = {key: vec(pairs) for key, pairs in binary.items()}
            return SuperTable(b, table, unit=unit, name=name)
        bracket = {key: vec(pairs) for key, pairs in binary.items()}
        tern = {key: vec(pairs) for key, pairs in ternary.items()}
        return AkivisSpec(b, bracket, tern, name=name)
    except AlgebraError as exc:
        if isinstance(exc, AlgebraFileError):
            raise
        raise AlgebraFileError(str(exc)) from None


def load_algebra(path: str) -> Algebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def _emit_rhs(v: Vector) -> str:
    if v.is_zero():
        return "0"
    chunks = []
    for name, c in v.items():
        chunks.append(name if c == 1 else f"{c} {name}")
    return " + ".join(chunks)


def emit_algebra(alg: Algebra) -> str:
    """Canonical text form; see the module docstring."""
    basis = alg.basis
    lines = []
    if alg.name is not None:
        lines.append(f"name {alg.name}")
    if isinstance(alg, SuperTable):
        lines.append(f"kind {KIND_TABLE}")
    elif isinstance(alg, AkivisSpec):
        lines.append(f"kind {KIND_SPEC}")
    else:
        raise AlgebraError(f"cannot emit {type(alg).__name__}")
    if basis.even_names:
        lines.append("even " + " ".join(basis.even_names))
    if basis.odd_names:
        lines.append("odd " + " ".join(basis.odd_names))
    if isinstance(alg, SuperTable):
        if alg.unit is not None:
            lines.append(f"unit {alg.unit}")
        for (a, b), v in alg.entries():
            if not v.is_zero():
                lines.append(f"{a} {b} = {_emit_rhs(v)}")
    else:
        for (a, b), v in alg.bracket_entries():
            if not v.is_zero():
                lines.append(f"{a} {b} = {_emit_rhs(v)}")
        for (a, b, c), v in alg.ternary_entries():
            if not v.is_zero():
                lines.append(f"{a} {b} {c} = {_emit_rhs(v)}")
    return "\n".join(lines) + "\n"
