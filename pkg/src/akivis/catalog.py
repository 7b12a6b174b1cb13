"""Concrete graded algebras used as fixtures: octonions, matrix quasialgebras,
their associative cousins, and trivial Akivis specs.

Octonions.  Built by Cayley-Dickson doubling, rationals -> complex ->
quaternions -> octonions, with the doubling product

    (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c)),   conj(a, b) = (conj(a), -b)

which yields quaternions satisfying ij = k.  The exported basis is

    e0 = 1,  e1 = -i,  e2 = -j,  e3 = -k,  e4 = l,  e5 = il,  e6 = jl,  e7 = kl

(l is the doubling generator), so e1 e2 = -e3 and e5 = e4 e1, e6 = e4 e2,
e7 = e4 e3.  The Z2-grading declares the quaternion half e0..e3 even and the
complement e4..e7 odd; the product respects it, which makes the octonions a
quasialgebra rather than a superalgebra in the associative sense.

Matrix quasialgebras.  Mat~(n, m) is the space of (n+m) x (n+m) matrices with
the chess-board grading: E(i,j) is even when i, j lie on the same side of the
n-boundary and odd otherwise.  Writing M = [[a, v], [w, d]] in blocks, the
twisted product flips one sign relative to the ordinary matrix product:

    M1 * M2 = [[a1 a2 + v1 w2,  a1 v2 + v1 d2],
               [w1 a2 + d1 w2,  d1 d2 - w1 v2]]

i.e. E(i,j) E(k,l) = delta(j,k) * s * E(i,l) with s = -1 exactly when i > n,
j = k <= n and l > n.  build_associative_matrix_superalgebra keeps the same
grading with the untwisted product (s = +1 throughout).

Both families are grading-closed by construction and serve as the positive
and negative examples for the identity suite: associative tables derive Lie
superalgebras, the twisted ones derive proper Akivis superalgebras.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .core import (
    EVEN,
    ODD,
    AkivisSpec,
    GradedBasis,
    SuperTable,
    Vector,
)

Algebra = Union[SuperTable, AkivisSpec]

_Lin = dict[int, Fraction]
_Prod = dict[tuple[int, int], _Lin]

_ONE = Fraction(1)


def _lin_scale(v: _Lin, c: Fraction) -> _Lin:
    return {i: c * x for i, x in v.items()} if c else {}


def _lin_add_into(acc: _Lin, v: _Lin, c: Fraction = _ONE) -> None:
    for i, x in v.items():
        s = acc.get(i, Fraction(0)) + c * x
        if s:
            acc[i] = s
        elif i in acc:
            del acc[i]


def _prod_apply(prod: _Prod, u: _Lin, v: _Lin) -> _Lin:
    acc: _Lin = {}
    for i, cu in u.items():
        for j, cv in v.items():
            _lin_add_into(acc, prod[(i, j)], cu * cv)
    return acc


def _conj_apply(conj: dict[int, _Lin], u: _Lin) -> _Lin:
    acc: _Lin = {}
    for i, c in u.items():
        _lin_add_into(acc, conj[i], c)
    return acc


def _double(dim: int, prod: _Prod, conj: dict[int, _Lin]) -> tuple[int, _Prod, dict[int, _Lin]]:
    """One Cayley-Dickson doubling step in the convention above.

    Basis index i < dim encodes (e_i, 0); index i >= dim encodes (0, e_{i-dim}).
    """
    def first(v: _Lin) -> _Lin:
        return dict(v)

    def second(v: _Lin) -> _Lin:
        return {i + dim: c for i, c in v.items()}

    def elem(i: int) -> _Lin:
        return {i: _ONE}

    new_prod: _Prod = {}
    for i in range(2 * dim):
        for j in range(2 * dim):
            if i < dim and j < dim:
                # (a,0)(c,0) = (ac, 0)
                new_prod[(i, j)] = first(prod[(i, j)])
            elif i < dim:
                # (a,0)(0,d) = (0, da)
                new_prod[(i, j)] = second(prod[(j - dim, i)])
            elif j < dim:
                # (0,b)(c,0) = (0, b conj(c))
                new_prod[(i, j)] = second(_prod_apply(prod, elem(i - dim), conj[j]))
            else:
                # (0,b)(0,d) = (-conj(d) b, 0)
                v = _prod_apply(prod, _conj_apply(conj, elem(j - dim)), elem(i - dim))
                new_prod[(i, j)] = first(_lin_scale(v, Fraction(-1)))
    new_conj: dict[int, _Lin] = {}
    for i in range(2 * dim):
        new_conj[i] = _conj_apply(conj, elem(i)) if i < dim else {i: -_ONE}
    return 2 * dim, new_prod, new_conj


def _cayley_dickson(steps: int) -> _Prod:
    """Product table after `steps` doublings of the rationals."""
    dim: int = 1
    prod: _Prod = {(0, 0): {0: _ONE}}
    conj: dict[int, _Lin] = {0: {0: _ONE}}
    for _ in range(steps):
        dim, prod, conj = _double(dim, prod, conj)
    return prod

# Basis change from raw doubled coordinates (1, i, j, k, ...) to the exported
# basis: negate the imaginary quaternion units, keep the doubled half.
_QUAT_FLIPS = (1, -1, -1, -1)
_OCT_FLIPS = (1, -1, -1, -1, 1, 1, 1, 1)


def _flipped_table(prod: _Prod, names: tuple[str, ...], flips: tuple[int, ...]) -> dict:
    table = {}
    n = len(names)
    for i in range(n):
        for j in range(n):
            entry = {}
            for k, c in prod[(i, j)].items():
                entry[names[k]] = c * flips[i] * flips[j] * flips[k]
            table[(names[i], names[j])] = entry
    return table


def build_octonions() -> SuperTable:
    """The octonions with the chess-board Z2-grading (quaternions even)."""
    prod = _cayley_dickson(3)
    names = tuple(f"e{i}" for i in range(8))
    basis = GradedBasis(names, (EVEN,) * 4 + (ODD,) * 4)
    table = _flipped_table(prod, names, _OCT_FLIPS)
    return SuperTable(basis, table, unit="e0", name="octonions")


def build_quaternions() -> SuperTable:
    """The quaternions, all even: the associative core of build_octonions."""
    prod = _cayley_dickson(2)
    names = tuple(f"e{i}" for i in range(4))
    basis = GradedBasis(names, (EVEN,) * 4)
    table = _flipped_table(prod, names, _QUAT_FLIPS)
    return SuperTable(basis, table, unit="e0", name="quaternions")


def _matrix_units(n: int, m: int) -> GradedBasis:
    size = n + m
    even, odd = [], []
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            (even if (i <= n) == (j <= n) else odd).append(f"E{i}_{j}")
    return GradedBasis.from_parts(even, odd)


def _matrix_table(n: int, m: int, twist: bool) -> dict:
    size = n + m
    table = {}
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            for k in range(1, size + 1):
                for l in range(1, size + 1):
                    if j != k:
                        continue
                    s = -1 if twist and i > n and j <= n and l > n else 1
                    table[(f"E{i}_{j}", f"E{k}_{l}")] = {f"E{i}_{l}": s}
    return table


def build_matrix_quasialgebra(n: int, m: int) -> SuperTable:
    """Mat~(n, m): chess-board graded matrix units with the sign-twisted product."""
    if n < 1 or m < 1:
        raise ValueError("block sizes must be positive")
    table = _matrix_table(n, m, twist=True)
    return SuperTable(_matrix_units(n, m), table, name=f"matq-{n}-{m}")


def build_associative_matrix_superalgebra(n: int, m: int) -> SuperTable:
    """Full matrix algebra on n+m rows with the chess-board grading, untwisted."""
    if n < 1 or m < 1:
        raise ValueError("block sizes must be positive")
    table = _matrix_table(n, m, twist=False)
    return SuperTable(_matrix_units(n, m), table, name=f"assoc-mat-{n}-{m}")


def build_trivial_akivis(p: int, q: int) -> AkivisSpec:
    """The abelian Akivis superalgebra on p even and q odd generators:
    both structure tables vanish identically."""
    if p < 0 or q < 0 or p + q == 0:
        raise ValueError("need at least one generator")
    basis = GradedBasis.from_parts(
        tuple(f"u{i}" for i in range(1, p + 1)),
        tuple(f"v{i}" for i in range(1, q + 1)))
    return AkivisSpec(basis, {}, {}, name=f"trivial-{p}-{q}")


@dataclass(frozen=True)
class CatalogEntry:
    """A named example algebra with its expected classification label."""

    name: str
    kind: str                 # "product-table" or "akivis-spec"
    classification: str       # expected classify() label of the derived spec
    description: str
    build: Callable[[], Algebra]

    def algebra(self) -> Algebra:
        return self.build()

    def akivis(self) -> AkivisSpec:
        """The entry as an AkivisSpec (derived when the entry is a table)."""
        from .core import derive_akivis

        alg = self.build()
        return alg if isinstance(alg, AkivisSpec) else derive_akivis(alg)


CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    CATALOG[entry.name] = entry


_register(CatalogEntry(
    name="octonions",
    kind="product-table",
    classification="proper-akivis",
    description="octonions, quaternion half even, doubling half odd",
    build=build_octonions))
_register(CatalogEntry(
    name="quaternions",
    kind="product-table",
    classification="lie",
    description="quaternions, entirely even and associative",
    build=build_quaternions))
_register(CatalogEntry(
    name="matq-1-1",
    kind="product-table",
    classification="proper-akivis",
    description="2x2 matrix units with the sign-twisted chess-board product",
    build=lambda: build_matrix_quasialgebra(1, 1)))
_register(CatalogEntry(
    name="assoc-mat-1-1",
    kind="product-table",
    classification="lie",
    description="2x2 matrix units with the chess-board grading, associative",
    build=lambda: build_associative_matrix_superalgebra(1, 1)))
_register(CatalogEntry(
    name="trivial-2-2",
    kind="akivis-spec",
    classification="lie",
    description="abelian Akivis spec on two even and two odd generators",
    build=lambda: build_trivial_akivis(2, 2)))


def catalog_names() -> tuple[str, ...]:
    return tuple(CATALOG)


_COEFF_POOL = tuple(
    Fraction(num, den)
    for num in range(-3, 4)
    for den in (1, 2, 3)
    if num
)


def random_vector(rng: random.Random, basis: GradedBasis, parity: int | None = None,
                  density: float = 0.6) -> Vector:
    """A random sparse vector with small rational coefficients; when `parity`
    is given the support stays inside that parity component."""
    names = basis.names if parity is None else (
        basis.even_names if parity == EVEN else basis.odd_names)
    coeffs = {}
    for name in names:
        if rng.random() < density:
            coeffs[name] = rng.choice(_COEFF_POOL)
    return Vector(basis, coeffs)


def random_super_table(rng: random.Random, n_even: int, n_odd: int,
                       density: float = 0.5) -> SuperTable:
    """A random grading-closed structure-constant table.  Each entry is a
    random vector in the parity component forced by closure, so the result
    always validates; nothing else about it is special."""
    basis = GradedBasis.from_parts(
        tuple(f"a{i}" for i in range(1, n_even + 1)),
        tuple(f"b{i}" for i in range(1, n_odd + 1)))
    table = {}
    for x in basis.names:
        for y in basis.names:
            target = (basis.parity(x) + basis.parity(y)) % 2
            pool = basis.even_names if target == EVEN else basis.odd_names
            entry = {}
            for name in pool:
                if rng.random() < density:
                    entry[name] = rng.choice(_COEFF_POOL)
            table[(x, y)] = entry
    return SuperTable(basis, table, name=f"random-{n_even}-{n_odd}")


def random_akivis_spec(rng: random.Random, n_even: int, n_odd: int,
                       density: float = 0.5) -> AkivisSpec:
    """derive_akivis of a random grading-closed table (hence a valid Akivis
    superalgebra, by construction)."""
    from .core import derive_akivis

    return derive_akivis(random_super_table(rng, n_even, n_odd, density))
