"""Exact sparse linear algebra over Z2-graded bases, and superalgebras given
by structure-constant tables.

Scalars are arbitrary-precision rationals (``fractions.Fraction``), so every
equality test in this package is exact and decidable.  A superalgebra is a
:class:`SuperTable`: a graded basis together with the product of every ordered
pair of basis symbols.  An Akivis superalgebra is an :class:`AkivisSpec`: a
graded basis with a bracket table on ordered pairs and a ternary table on
ordered triples.  :func:`derive_akivis` turns any SuperTable into the
AkivisSpec whose bracket is the super-commutator and whose ternary map is the
associator.

Conventions.  Parities live in {0, 1} and add mod 2.  For homogeneous x, y, z
of parities a, b, c:

    [x, y]     = xy - (-1)^{ab} yx                    (super-commutator)
    A(x, y, z) = (xy)z - x(yz)                        (associator)
    SJ(x, y, z) = [[x, y], z] + (-1)^{a(b+c)} [[y, z], x]
                              + (-1)^{c(a+b)} [[z, x], y]

Operations accept non-homogeneous vectors and extend multilinearly by
splitting into parity components.  All structures are immutable after
construction and every operation is a pure function, so concurrent sweeps
over disjoint tuples are safe.

Construction invariants.  GradedBasis requires distinct identifier-shaped
names with all even symbols before all odd ones.  SuperTable and AkivisSpec
validate grading closure of every entry; AkivisSpec additionally validates
superanticommutativity of the bracket.  Validation can be switched off with
``validate=False`` to build deliberately broken specs for diagnostics; the
identity checkers treat such specs as ordinary inputs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

EVEN = 0
ODD = 1

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class AlgebraError(Exception):
    """Base class for structural errors raised by this package."""


class BasisMismatchError(AlgebraError):
    """A vector or symbol does not belong to the expected graded basis."""


class GradingError(AlgebraError):
    """A table entry violates grading closure or a construction invariant."""


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, string like ``-3/4``, or Fraction to an exact rational."""
    return value if isinstance(value, Fraction) else Fraction(value)


def sign_pow(exponent: int) -> int:
    """(-1)**exponent, read mod 2."""
    return -1 if exponent % 2 else 1


def koszul(p: int, q: int) -> int:
    """The Koszul sign (-1)^{pq} for parities p, q."""
    return -1 if (p % 2) and (q % 2) else 1


@dataclass(frozen=True)
class GradedBasis:
    """An ordered basis of a Z2-graded space, every even symbol first."""

    names: tuple[str, ...]
    parities: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        parities = tuple(int(p) for p in self.parities)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "parities", parities)
        if len(names) != len(parities):
            raise GradingError("names and parities differ in length")
        if not names:
            raise GradingError("a graded basis needs at least one symbol")
        if len(set(names)) != len(names):
            raise GradingError("duplicate generator names")
        for n in names:
            if not _NAME_RE.match(n):
                raise GradingError(f"invalid generator name {n!r}")
        seen_odd = False
        for p in parities:
            if p not in (EVEN, ODD):
                raise GradingError(f"parity must be 0 or 1, got {p!r}")
            if p == ODD:
                seen_odd = True
            elif seen_odd:
                raise GradingError("even generators must precede odd ones")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def from_parts(cls, even: Iterable[str], odd: Iterable[str]) -> "GradedBasis":
        even = tuple(even)
        odd = tuple(odd)
        return cls(even + odd, (EVEN,) * len(even) + (ODD,) * len(odd))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise BasisMismatchError(f"unknown generator {name!r}") from None

    def parity(self, name: str) -> int:
        return self.parities[self.index(name)]

    @property
    def even_names(self) -> tuple[str, ...]:
        return tuple(n for n, p in zip(self.names, self.parities) if p == EVEN)

    @property
    def odd_names(self) -> tuple[str, ...]:
        return tuple(n for n, p in zip(self.names, self.parities) if p == ODD)

    def dims(self) -> tuple[int, int]:
        """(number of even symbols, number of odd symbols)."""
        odd = sum(self.parities)
        return len(self.parities) - odd, odd


class Vector(object):
    """A sparse vector over a GradedBasis.  Zero coefficients are never stored,
    so equality is plain dict equality."""

    __slots__ = ("basis", "_coeffs")

    def __init__(self, basis: GradedBasis, coeffs=None) -> None:
        data: dict[str, Fraction] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for name, c in items:
                if name not in basis:
                    raise BasisMismatchError(f"unknown generator {name!r}")
                c = as_scalar(c)
                if name in data:
                    c = data[name] + c
                if c:
                    data[name] = c
                elif name in data:
                    del data[name]
        self.basis = basis
        self._coeffs = data

    @classmethod
    def zero(cls, basis: GradedBasis) -> "Vector":
        return cls(basis)

    @classmethod
    def unit(cls, basis: GradedBasis, name: str, coeff: ScalarLike = 1) -> "Vector":
        return cls(basis, [(name, coeff)])

    def coeff(self, name: str) -> Fraction:
        if name not in self.basis:
            raise BasisMismatchError(f"unknown generator {name!r}")
        return self._coeffs.get(name, Fraction(0))

    def items(self) -> list[tuple[str, Fraction]]:
        """(name, coefficient) pairs in basis order."""
        return sorted(self._coeffs.items(), key=lambda kv: self.basis.index(kv[0]))

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def _require_same_basis(self, other: "Vector") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError("vectors over different graded bases")

    def __add__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        self._require_same_basis(other)
        data = dict(self._coeffs)
        for name, c in other._coeffs.items():
            s = data.get(name, Fraction(0)) + c
            if s:
                data[name] = s
            elif name in data:
                del data[name]
        out = Vector.__new__(Vector)
        out.basis = self.basis
        out._coeffs = data
        return out

    def __sub__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Vector":
        return self.scaled(-1)

    def scaled(self, c: ScalarLike) -> "Vector":
        c = as_scalar(c)
        out = Vector.__new__(Vector)
        out.basis = self.basis
        out._coeffs = {} if not c else {n: c * x for n, x in self._coeffs.items()}
        return out

    def __rmul__(self, c: ScalarLike) -> "Vector":
        if isinstance(c, (int, Fraction)):
            return self.scaled(c)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.basis == other.basis and self._coeffs == other._coeffs

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def homogeneous_parity(self) -> int | None:
        """The shared parity of the support, None for the zero vector.
        Raises GradingError on a parity-mixed vector."""
        parities = {self.basis.parity(n) for n in self._coeffs}
        if not parities:
            return None
        if len(parities) > 1:
            raise GradingError("vector mixes parities")
        return parities.pop()

    def parity_components(self) -> list[tuple[int, "Vector"]]:
        """Nonzero parity components as (parity, Vector) pairs, even first."""
        parts: dict[int, dict[str, Fraction]] = {}
        for name, c in self._coeffs.items():
            parts.setdefault(self.basis.parity(name), {})[name] = c
        out = []
        for p in (EVEN, ODD):
            if p in parts:
                out.append((p, Vector(self.basis, parts[p])))
        return out

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        chunks = []
        for name, c in self.items():
            if c == 1:
                chunks.append(name)
            elif c == -1:
                chunks.append("-" + name)
            else:
                chunks.append(f"{c} {name}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"Vector({self})"


def _homogeneous_or_zero(v: Vector, parity: int, what: str) -> None:
    p = v.homogeneous_parity()
    if p is not None and p != parity % 2:
        raise GradingError(f"{what} violates grading closure: {v} has parity {p}, expected {parity % 2}")


def _normalize_entry(basis: GradedBasis, value) -> Vector:
    if value is None:
        return Vector.zero(basis)
    if isinstance(value, Vector):
        if value.basis != basis:
            raise BasisMismatchError("table entry over a different basis")
        return value
    return Vector(basis, value)


class SuperTable(object):
    """A superalgebra presented by structure constants.

    ``product`` maps ordered name pairs to Vectors (anything Vector() accepts
    is allowed; missing pairs read as zero).  Every ordered pair is stored
    explicitly.  ``unit``, if given, names a basis symbol that must act as a
    two-sided multiplicative identity.
    """

    __slots__ = ("basis", "unit", "name", "_prod")

    def __init__(self, basis: GradedBasis, product: Mapping, unit: str | None = None,
                 name: str | None = None, validate: bool = True) -> None:
        self.basis = basis
        self.unit = unit
        self.name = name
        prod: dict[tuple[str, str], Vector] = {}
        for key in product:
            if not (isinstance(key, tuple) and len(key) == 2):
                raise AlgebraError(f"product keys must be name pairs, got {key!r}")
        for a in basis.names:
            for b in basis.names:
                prod[(a, b)] = _normalize_entry(basis, product.get((a, b)))
        self._prod = prod
        if validate:
            self.validate()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def product_of(self, a: str, b: str) -> Vector:
        try:
            return self._prod[(a, b)]
        except KeyError:
            raise BasisMismatchError(f"unknown generator pair ({a!r}, {b!r})") from None

    def entries(self) -> Iterator[tuple[tuple[str, str], Vector]]:
        """All ordered pairs in row-major basis order."""
        for a in self.basis.names:
            for b in self.basis.names:
                yield (a, b), self._prod[(a, b)]

    def validate(self) -> None:
        for (a, b), v in self.entries():
            pa, pb = self.basis.parity(a), self.basis.parity(b)
            _homogeneous_or_zero(v, pa + pb, f"product {a}*{b} = {v}")
        if self.unit is not None:
            if self.unit not in self.basis:
                raise BasisMismatchError(f"unit {self.unit!r} not in basis")
            for a in self.basis.names:
                e = Vector.unit(self.basis, a)
                if self.product_of(self.unit, a) != e or self.product_of(a, self.unit) != e:
                    raise GradingError(f"{self.unit!r} is not a two-sided unit at {a!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperTable):
            return NotImplemented
        return (self.basis == other.basis and self.unit == other.unit
                and self._prod == other._prod)

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __repr__(self) -> str:
        label = self.name or "?"
        return f"SuperTable({label}, dim={self.dim})"


class AkivisSpec(object):
    """An Akivis superalgebra candidate: bracket and ternary structure tables.

    Grading closure of both tables and superanticommutativity of the bracket
    are construction invariants.  Whether the Akivis identity itself holds is
    deliberately NOT an invariant: it is a property checked by the identity
    suite, and specs violating it are legitimate inputs there.
    """

    __slots__ = ("basis", "name", "_bracket", "_ternary")

    def __init__(self, basis: GradedBasis, bracket: Mapping, ternary: Mapping,
                 name: str | None = None, validate: bool = True) -> None:
        self.basis = basis
        self.name = name
        brk: dict[tuple[str, str], Vector] = {}
        for a in basis.names:
            for b in basis.names:
                brk[(a, b)] = _normalize_entry(basis, bracket.get((a, b)))
        ter: dict[tuple[str, str, str], Vector] = {}
        for a in basis.names:
            for b in basis.names:
                for c in basis.names:
                    ter[(a, b, c)] = _normalize_entry(basis, ternary.get((a, b, c)))
        self._bracket = brk
        self._ternary = ter
        if validate:
            self.validate()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket_of(self, a: str, b: str) -> Vector:
        try:
            return self._bracket[(a, b)]
        except KeyError:
            raise BasisMismatchError(f"unknown generator pair ({a!r}, {b!r})") from None

    def ternary_of(self, a: str, b: str, c: str) -> Vector:
        try:
            return self._ternary[(a, b, c)]
        except KeyError:
            raise BasisMismatchError(f"unknown generator triple ({a!r}, {b!r}, {c!r})") from None

    def bracket_entries(self) -> Iterator[tuple[tuple[str, str], Vector]]:
        for a in self.basis.names:
            for b in self.basis.names:
                yield (a, b), self._bracket[(a, b)]

    def ternary_entries(self) -> Iterator[tuple[tuple[str, str, str], Vector]]:
        for a in self.basis.names:
            for b in self.basis.names:
                for c in self.basis.names:
                    yield (a, b, c), self._ternary[(a, b, c)]

    def validate(self) -> None:
        parity = self.basis.parity
        for (a, b), v in self.bracket_entries():
            _homogeneous_or_zero(v, parity(a) + parity(b), f"bracket [{a},{b}] = {v}")
        for (a, b), v in self.bracket_entries():
            flip = self.bracket_of(b, a).scaled(koszul(parity(a), parity(b)))
            if not (v + flip).is_zero():
                raise GradingError(
                    f"bracket is not superanticommutative at ({a},{b}): "
                    f"[{a},{b}] = {v}, [{b},{a}] = {self.bracket_of(b, a)}")
        for (a, b, c), v in self.ternary_entries():
            _homogeneous_or_zero(v, parity(a) + parity(b) + parity(c),
                                 f"ternary A({a},{b},{c}) = {v}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AkivisSpec):
            return NotImplemented
        return (self.basis == other.basis and self._bracket == other._bracket
                and self._ternary == other._ternary)

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __repr__(self) -> str:
        label = self.name or "?"
        return f"AkivisSpec({label}, dim={self.dim})"


def linear_combine(terms: Iterable[tuple[ScalarLike, Vector]]) -> Vector:
    """Exact sparse sum of scalar multiples; all vectors over one basis."""
    terms = list(terms)
    if not terms:
        raise AlgebraError("linear_combine needs at least one term")
    basis = terms[0][1].basis
    acc: dict[str, Fraction] = {}
    for c, v in terms:
        if v.basis != basis:
            raise BasisMismatchError("vectors over different graded bases")
        c = as_scalar(c)
        if not c:
            continue
        for name, x in v._coeffs.items():
            s = acc.get(name, Fraction(0)) + c * x
            if s:
                acc[name] = s
            elif name in acc:
                del acc[name]
    return Vector(basis, acc)


def multiply(table: SuperTable, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the structure-constant product."""
    if x.basis != table.basis or y.basis != table.basis:
        raise BasisMismatchError("vector basis differs from table basis")
    acc = Vector.zero(table.basis)
    for a, ca in x.items():
        for b, cb in y.items():
            acc = acc + table.product_of(a, b).scaled(ca * cb)
    return acc


def super_commutator(table: SuperTable, x: Vector, y: Vector) -> Vector:
    """[x, y] = xy - (-1)^{ab} yx, extended from parity components."""
    acc = Vector.zero(table.basis)
    for a, xa in x.parity_components():
        for b, yb in y.parity_components():
            acc = acc + multiply(table, xa, yb) - multiply(table, yb, xa).scaled(koszul(a, b))
    return acc


def associator(table: SuperTable, x: Vector, y: Vector, z: Vector) -> Vector:
    """A(x, y, z) = (xy)z - x(yz); no signs involved, plain trilinearity."""
    return multiply(table, multiply(table, x, y), z) - multiply(table, x, multiply(table, y, z))


def derive_akivis(table: SuperTable, name: str | None = None) -> AkivisSpec:
    """The Akivis superalgebra of a superalgebra: bracket = super-commutator,
    ternary = associator, both tabulated on basis tuples."""
    basis = table.basis
    gens = {n: Vector.unit(basis, n) for n in basis.names}
    bracket = {}
    for a in basis.names:
        for b in basis.names:
            bracket[(a, b)] = super_commutator(table, gens[a], gens[b])
    ternary = {}
    for a in basis.names:
        for b in basis.names:
            for c in basis.names:
                ternary[(a, b, c)] = associator(table, gens[a], gens[b], gens[c])
    if name is None and table.name is not None:
        name = table.name
    return AkivisSpec(basis, bracket, ternary, name=name)


def bracket_eval(spec: AkivisSpec, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the bracket table."""
    if x.basis != spec.basis or y.basis != spec.basis:
        raise BasisMismatchError("vector basis differs from spec basis")
    acc = Vector.zero(spec.basis)
    for a, ca in x.items():
        for b, cb in y.items():
            acc = acc + spec.bracket_of(a, b).scaled(ca * cb)
    return acc


def ternary_eval(spec: AkivisSpec, x: Vector, y: Vector, z: Vector) -> Vector:
    """Trilinear extension of the ternary table."""
    if x.basis != spec.basis or y.basis != spec.basis or z.basis != spec.basis:
        raise BasisMismatchError("vector basis differs from spec basis")
    acc = Vector.zero(spec.basis)
    for a, ca in x.items():
        for b, cb in y.items():
            for c, cc in z.items():
                acc = acc + spec.ternary_of(a, b, c).scaled(ca * cb * cc)
    return acc


def super_jacobian(spec: AkivisSpec, x: Vector, y: Vector, z: Vector) -> Vector:
    """SJ(x,y,z) as defined in the module docstring, extended from
    parity-homogeneous components with Koszul signs."""
    acc = Vector.zero(spec.basis)
    for a, xa in x.parity_components():
        for b, yb in y.parity_components():
            for c, zc in z.parity_components():
                t1 = bracket_eval(spec, bracket_eval(spec, xa, yb), zc)
                t2 = bracket_eval(spec, bracket_eval(spec, yb, zc), xa)
                t3 = bracket_eval(spec, bracket_eval(spec, zc, xa), yb)
                acc = acc + t1 + t2.scaled(sign_pow(a * (b + c))) + t3.scaled(sign_pow(c * (a + b)))
    return acc
