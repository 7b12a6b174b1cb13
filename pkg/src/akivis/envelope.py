"""The degree-filtered universal-envelope model of an Akivis superalgebra.

For an Akivis superalgebra M over the rationals, the model carries the graded
components

    V0 = Q,   Vn = S^n(M) for n = 1, 2, 3,   Vn = sum_{i+j=n, i,j>=1} Vi (x) Vj  for n > 3,

where S^n(M) is the super-symmetric power: its basis consists of
nondecreasing generator words i1 <= i2 <= ... with strict increase between
consecutive odd generators.  Above degree 3 no relations are imposed; a basis
monomial is a pair of lower-degree basis monomials and all bracketings are
kept distinct.

The product `*` is defined on basis monomials by an explicit case analysis.
Writing r, s, k for generator indices, p for the parity of index p's
generator, [,] for the bracket and A for the ternary table of M:

  e_r * e_s =
    (1) e_r e_s                                  r <= s, word valid
    (2) 1/2 [e_r, e_r]                           r = s odd
    (3) (-1)^{rs} e_s e_r + [e_r, e_s]           r > s

  (e_r e_s) * e_k =
    (1) e_r e_s e_k                                            s <= k, word valid
    (2) A(r,s,s) + 1/2 e_r * [e_s, e_s]                        r < s = k, s odd
    (3) (-1)^{ks} e_r e_k e_s + e_r * [e_s, e_k]
        + A(r,s,k) - (-1)^{sk} A(r,k,s)                        r <= k < s, r = k only if even
    (4) -1/2 [e_r, e_r] * e_s + e_r * [e_s, e_r]
        + A(r,s,r) + A(r,r,s)                                  r = k < s, r odd
    (5) (-1)^{k(r+s)} e_k e_r e_s + (-1)^{ks} [e_r, e_k] * e_s
        + e_r * [e_s, e_k] - (-1)^{sk} A(r,k,s) + A(r,s,k)     k < r <= s

  e_r * (e_s e_k) =
    (1) e_r e_s e_k - A(r,s,k)                                 r <= s, word valid
    (2) 1/2 [e_r, e_r] * e_k - A(r,r,k)                        r = s odd
    (3) (-1)^{rs} e_s e_r e_k - A(r,s,k) + [e_r, e_s] * e_k    s < r <= k, r = k only if even
    (4) 1/2 (-1)^{rs} e_s * [e_r, e_r] + [e_r, e_s] * e_r
        - A(r,s,r) + (-1)^{rs} A(s,r,r)                        s < r = k, r odd
    (5) (-1)^{r(k+s)} e_s e_k e_r + (-1)^{rs} e_s * [e_r, e_k]
        + [e_r, e_s] * e_k + (-1)^{rs} A(s,r,k)
        - A(r,s,k) - (-1)^{(s+k)r} A(s,k,r)                    s <= k < r

(signs read as (-1) to the product of the named parities).  Every `*` on the
right-hand sides multiplies a generator by a degree-1 vector, so the recursion
bottoms out immediately.  V0 acts as the scalar unit, and for total degree
above 3 the product is the plain tensor pairing u * v = (u . v).

Consequences exercised by the verifiers below: the star super-commutator of
two generators equals their bracket, the star associator of three generators
equals their ternary value, and modulo terms of lower degree the product of
basis monomials is their super-symmetrized concatenation, so the associated
graded algebra in degrees <= 3 is the super-symmetric algebra and gr-dimensions
agree with the closed count implemented by graded_dim.

Degrees are capped by a :class:`TruncationPolicy` (default max degree 4, or
the AKIVIS_MAX_DEGREE environment variable): any operation that would produce
degree beyond the cap raises TruncationError instead of dropping terms, and
enumerations larger than the monomial cap raise CapacityError.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import (
    EVEN,
    ODD,
    AkivisSpec,
    AlgebraError,
    BasisMismatchError,
    GradedBasis,
    ScalarLike,
    Vector,
    as_scalar,
    koszul,
)
from .identities import CheckReport, ReportBuilder

ENV_MAX_DEGREE = "AKIVIS_MAX_DEGREE"

_ONE = Fraction(1)
_HALF = Fraction(1, 2)


class TruncationError(AlgebraError):
    """An operation would produce degree beyond the truncation policy."""

    def __init__(self, degree: int, max_degree: int):
        super().__init__(f"degree {degree} exceeds the truncation bound {max_degree}")
        self.degree = degree
        self.max_degree = max_degree


class CapacityError(AlgebraError):
    """An enumeration would exceed the monomial memory guard."""


class NotApplicableError(AlgebraError):
    """The symmetric normal form only exists in degrees up to 3."""


@dataclass(frozen=True)
class TruncationPolicy:
    """Degree cap and monomial-count guard for envelope computations."""

    max_degree: int = 4
    max_monomials: int = 200_000

    def __post_init__(self) -> None:
        if self.max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        if self.max_monomials < 1:
            raise ValueError("max_monomials must be positive")

    @classmethod
    def default(cls) -> "TruncationPolicy":
        raw = os.environ.get(ENV_MAX_DEGREE)
        if raw is None or raw == "":
            return cls()
        try:
            return cls(max_degree=int(raw))
        except ValueError:
            raise AlgebraError(f"{ENV_MAX_DEGREE} must be an integer, got {raw!r}") from None


def _default_policy(policy: TruncationPolicy | None) -> TruncationPolicy:
    return policy if policy is not None else TruncationPolicy.default()


@dataclass(frozen=True)
class PBWMonomial:
    """A basis monomial: a generator-index word of degree <= 3, or a pair of
    lower-degree monomials for degree > 3.  The unit is the empty word."""

    word: tuple[int, ...] | None = None
    pair: tuple["PBWMonomial", "PBWMonomial"] | None = None

    def __post_init__(self) -> None:
        if (self.word is None) == (self.pair is None):
            raise AlgebraError("a monomial is either a word or a pair")
        if self.word is not None:
            word = tuple(int(i) for i in self.word)
            object.__setattr__(self, "word", word)
            if len(word) > 3:
                raise AlgebraError("word monomials stop at degree 3")
            if any(i < 0 for i in word):
                raise AlgebraError("negative generator index")
        else:
            left, right = self.pair
            if not (isinstance(left, PBWMonomial) and isinstance(right, PBWMonomial)):
                raise AlgebraError("pair components must be monomials")
            if left.degree < 1 or right.degree < 1:
                raise AlgebraError("pair components must have positive degree")
            if left.degree + right.degree <= 3:
                raise AlgebraError("pairs only exist above degree 3")

    @property
    def degree(self) -> int:
        if self.word is not None:
            return len(self.word)
        left, right = self.pair
        return left.degree + right.degree

    def parity(self, basis: GradedBasis) -> int:
        if self.word is not None:
            return sum(basis.parities[i] for i in self.word) % 2
        left, right = self.pair
        return (left.parity(basis) + right.parity(basis)) % 2


UNIT_MONOMIAL = PBWMonomial(word=())


def word_monomial(basis: GradedBasis, indices: Sequence[int]) -> PBWMonomial:
    """A degree <= 3 basis monomial; validates the nondecreasing word shape
    with strict increase between consecutive odd generators."""
    word = tuple(int(i) for i in indices)
    n = len(basis)
    for i in word:
        if not 0 <= i < n:
            raise BasisMismatchError(f"generator index {i} out of range")
    for a, b in zip(word, word[1:]):
        if a > b:
            raise AlgebraError(f"word {word} is not nondecreasing")
        if a == b and basis.parities[a] == ODD:
            raise AlgebraError(f"word {word} repeats the odd generator {basis.names[a]}")
    return PBWMonomial(word=word)


def pair_monomial(left: PBWMonomial, right: PBWMonomial) -> PBWMonomial:
    return PBWMonomial(pair=(left, right))


def monomial_key(basis: GradedBasis, m: PBWMonomial):
    """Total order on monomials: degree, then parity word and indices for
    words, then left degree and recursive keys for pairs."""
    if m.word is not None:
        parities = tuple(basis.parities[i] for i in m.word)
        return (m.degree, parities, m.word)
    left, right = m.pair
    return (m.degree, left.degree, monomial_key(basis, left), monomial_key(basis, right))


def monomial_str(basis: GradedBasis, m: PBWMonomial) -> str:
    if m.word is not None:
        if not m.word:
            return "1"
        return "".join(basis.names[i] for i in m.word)
    left, right = m.pair
    return f"({monomial_str(basis, left)} . {monomial_str(basis, right)})"


class EnvElement(object):
    """A finite rational combination of basis monomials over one spec."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: AkivisSpec, terms: Mapping | Iterable | None = None) -> None:
        data: dict[PBWMonomial, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, c in items:
                if not isinstance(mono, PBWMonomial):
                    raise AlgebraError(f"not a monomial: {mono!r}")
                c = as_scalar(c)
                if mono in data:
                    c = data[mono] + c
                if c:
                    data[mono] = c
                elif mono in data:
                    del data[mono]
        self.spec = spec
        self._terms = data

    @classmethod
    def zero(cls, spec: AkivisSpec) -> "EnvElement":
        return cls(spec)

    @classmethod
    def one(cls, spec: AkivisSpec, coeff: ScalarLike = 1) -> "EnvElement":
        return cls(spec, {UNIT_MONOMIAL: coeff})

    @classmethod
    def from_vector(cls, spec: AkivisSpec, v: Vector) -> "EnvElement":
        """The canonical degree-1 embedding of M."""
        if v.basis != spec.basis:
            raise BasisMismatchError("vector basis differs from spec basis")
        return cls(spec, {word_monomial(spec.basis, (spec.basis.index(n),)): c
                          for n, c in v.items()})

    @classmethod
    def from_monomial(cls, spec: AkivisSpec, m: PBWMonomial, coeff: ScalarLike = 1) -> "EnvElement":
        return cls(spec, {m: coeff})

    def terms(self) -> list[tuple[PBWMonomial, Fraction]]:
        """(monomial, coefficient) pairs in canonical monomial order."""
        basis = self.spec.basis
        return sorted(self._terms.items(), key=lambda kv: monomial_key(basis, kv[0]))

    def coeff(self, m: PBWMonomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def max_degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def degree_component(self, n: int) -> "EnvElement":
        return EnvElement(self.spec, {m: c for m, c in self._terms.items() if m.degree == n})

    def parity_components(self) -> list[tuple[int, "EnvElement"]]:
        """Nonzero parity components, even first; the unit monomial is even."""
        basis = self.spec.basis
        parts: dict[int, dict[PBWMonomial, Fraction]] = {}
        for m, c in self._terms.items():
            parts.setdefault(m.parity(basis), {})[m] = c
        return [(p, EnvElement(self.spec, parts[p])) for p in (EVEN, ODD) if p in parts]

    def to_vector(self) -> Vector:
        """Project the degree-1 component onto M."""
        basis = self.spec.basis
        coeffs = {basis.names[m.word[0]]: c
                  for m, c in self._terms.items() if m.degree == 1}
        return Vector(basis, coeffs)

    def _require_same_spec(self, other: "EnvElement") -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise BasisMismatchError("elements over different specs")

    def __add__(self, other: "EnvElement") -> "EnvElement":
        if not isinstance(other, EnvElement):
            return NotImplemented
        self._require_same_spec(other)
        data = dict(self._terms)
        for m, c in other._terms.items():
            s = data.get(m, Fraction(0)) + c
            if s:
                data[m] = s
            elif m in data:
                del data[m]
        out = EnvElement.__new__(EnvElement)
        out.spec = self.spec
        out._terms = data
        return out

    def __sub__(self, other: "EnvElement") -> "EnvElement":
        if not isinstance(other, EnvElement):
            return NotImplemented
        return self + other.scaled(-1)

    def __neg__(self) -> "EnvElement":
        return self.scaled(-1)

    def scaled(self, c: ScalarLike) -> "EnvElement":
        c = as_scalar(c)
        out = EnvElement.__new__(EnvElement)
        out.spec = self.spec
        out._terms = {} if not c else {m: c * x for m, x in self._terms.items()}
        return out

    def __rmul__(self, c: ScalarLike) -> "EnvElement":
        if isinstance(c, (int, Fraction)):
            return self.scaled(c)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EnvElement):
            return NotImplemented
        return (self.spec is other.spec or self.spec == other.spec) and self._terms == other._terms

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        basis = self.spec.basis
        return " + ".join(f"{c} {monomial_str(basis, m)}" for m, c in self.terms())

    def __repr__(self) -> str:
        return f"EnvElement({self})"


def sym_normalize(basis: GradedBasis, word: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Super-symmetric normal form of a generator word of degree <= 3.

    Returns (sign, sorted word): adjacent transpositions of two odd
    generators flip the sign, and a repeated odd generator kills the word
    (sign 0).  Words longer than 3 have no symmetric normal form here."""
    w = [int(i) for i in word]
    if len(w) > 3:
        raise NotApplicableError("symmetric normal form stops at degree 3")
    n = len(basis)
    for i in w:
        if not 0 <= i < n:
            raise BasisMismatchError(f"generator index {i} out of range")
    sign = 1
    for i in range(1, len(w)):
        j = i
        while j > 0 and w[j - 1] > w[j]:
            if basis.parities[w[j - 1]] == ODD and basis.parities[w[j]] == ODD:
                sign = -sign
            w[j - 1], w[j] = w[j], w[j - 1]
            j -= 1
    for a, b in zip(w, w[1:]):
        if a == b and basis.parities[a] == ODD:
            return 0, tuple(w)
    return sign, tuple(w)


def graded_dim(spec: AkivisSpec, n: int, policy: TruncationPolicy | None = None) -> int:
    """dim of the degree-n component, by the closed recursion (no monomials
    are materialized): super-symmetric count for n <= 3, convolution above.
    A policy, when given, caps the admissible degree."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if policy is not None and n > policy.max_degree:
        raise TruncationError(n, policy.max_degree)
    p, q = spec.basis.dims()

    def sym_count(k: int) -> int:
        total = 0
        for b in range(0, min(k, q) + 1):
            a = k - b
            evens = 1 if a == 0 else math.comb(p + a - 1, a)
            total += math.comb(q, b) * evens
        return total

    memo: dict[int, int] = {}

    def dim(k: int) -> int:
        if k <= 3:
            return 1 if k == 0 else sym_count(k)
        if k not in memo:
            memo[k] = sum(dim(i) * dim(k - i) for i in range(1, k))
        return memo[k]

    return dim(n)


def pbw_basis(spec: AkivisSpec, n: int, policy: TruncationPolicy | None = None) -> list[PBWMonomial]:
    """All degree-n basis monomials in canonical order."""
    policy = _default_policy(policy)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n > policy.max_degree:
        raise TruncationError(n, policy.max_degree)
    if graded_dim(spec, n) > policy.max_monomials:
        raise CapacityError(
            f"degree {n} holds {graded_dim(spec, n)} monomials, "
            f"over the guard {policy.max_monomials}")
    basis = spec.basis
    if n == 0:
        return [UNIT_MONOMIAL]
    if n <= 3:
        dim = len(basis)
        words: list[tuple[int, ...]] = []

        def grow(prefix: tuple[int, ...]) -> None:
            if len(prefix) == n:
                words.append(prefix)
                return
            start = prefix[-1] if prefix else 0
            for i in range(start, dim):
                if prefix and i == prefix[-1] and basis.parities[i] == ODD:
                    continue
                grow(prefix + (i,))

        grow(())
        monos = [PBWMonomial(word=w) for w in words]
        monos.sort(key=lambda m: monomial_key(basis, m))
        return monos
    out: list[PBWMonomial] = []
    for i in range(1, n):
        for left in pbw_basis(spec, i, policy):
            for right in pbw_basis(spec, n - i, policy):
                out.append(pair_monomial(left, right))
    out.sort(key=lambda m: monomial_key(basis, m))
    return out


def _madd(acc: dict, terms: Mapping, c: Fraction = _ONE) -> None:
    if not c:
        return
    for m, x in terms.items():
        s = acc.get(m, Fraction(0)) + c * x
        if s:
            acc[m] = s
        elif m in acc:
            del acc[m]


def _vec_terms(spec: AkivisSpec, v: Vector) -> dict[PBWMonomial, Fraction]:
    basis = spec.basis
    return {word_monomial(basis, (basis.index(n),)): c for n, c in v.items()}


def _bracket(spec: AkivisSpec, r: int, s: int) -> Vector:
    names = spec.basis.names
    return spec.bracket_of(names[r], names[s])


def _ternary_terms(spec: AkivisSpec, r: int, s: int, k: int) -> dict[PBWMonomial, Fraction]:
    names = spec.basis.names
    return _vec_terms(spec, spec.ternary_of(names[r], names[s], names[k]))


def _star_gen_gen(spec: AkivisSpec, r: int, s: int) -> dict[PBWMonomial, Fraction]:
    basis = spec.basis
    pr, ps = basis.parities[r], basis.parities[s]
    if r < s or (r == s and pr == EVEN):
        return {word_monomial(basis, (r, s)): _ONE}
    if r == s:
        out: dict[PBWMonomial, Fraction] = {}
        _madd(out, _vec_terms(spec, _bracket(spec, r, r)), _HALF)
        return out
    out = {word_monomial(basis, (s, r)): Fraction(koszul(pr, ps))}
    _madd(out, _vec_terms(spec, _bracket(spec, r, s)))
    return out


def _star_gen_vec(spec: AkivisSpec, r: int, v: Vector) -> dict[PBWMonomial, Fraction]:
    basis = spec.basis
    out: dict[PBWMonomial, Fraction] = {}
    for name, c in v.items():
        _madd(out, _star_gen_gen(spec, r, basis.index(name)), c)
    return out


def _star_vec_gen(spec: AkivisSpec, v: Vector, s: int) -> dict[PBWMonomial, Fraction]:
    basis = spec.basis
    out: dict[PBWMonomial, Fraction] = {}
    for name, c in v.items():
        _madd(out, _star_gen_gen(spec, basis.index(name), s), c)
    return out


def _star_word2_gen(spec: AkivisSpec, word: tuple[int, int], k: int) -> dict[PBWMonomial, Fraction]:
    """(e_r e_s) * e_k by the five-way case table in the module docstring."""
    basis = spec.basis
    r, s = word
    pr, ps, pk = basis.parities[r], basis.parities[s], basis.parities[k]
    out: dict[PBWMonomial, Fraction] = {}
    if s < k or (s == k and ps == EVEN):
        out[word_monomial(basis, (r, s, k))] = _ONE
        return out
    if s == k:  # s odd, and r < s by word validity
        _madd(out, _ternary_terms(spec, r, s, s))
        _madd(out, _star_gen_vec(spec, r, _bracket(spec, s, s)), _HALF)
        return out
    # now k < s
    if r < k or (r == k and pr == EVEN):
        sign_ks = koszul(pk, ps)
        out[word_monomial(basis, (r, k, s))] = Fraction(sign_ks)
        _madd(out, _star_gen_vec(spec, r, _bracket(spec, s, k)))
        _madd(out, _ternary_terms(spec, r, s, k))
        _madd(out, _ternary_terms(spec, r, k, s), Fraction(-sign_ks))
        return out
    if r == k:  # r odd, r = k < s
        _madd(out, _star_vec_gen(spec, _bracket(spec, r, r), s), -_HALF)
        _madd(out, _star_gen_vec(spec, r, _bracket(spec, s, r)))
        _madd(out, _ternary_terms(spec, r, s, r))
        _madd(out, _ternary_terms(spec, r, r, s))
        return out
    # k < r <= s
    sign_ks = koszul(pk, ps)
    out[word_monomial(basis, (k, r, s))] = Fraction(koszul(pk, (pr + ps) % 2))
    _madd(out, _star_vec_gen(spec, _bracket(spec, r, k), s), Fraction(sign_ks))
    _madd(out, _star_gen_vec(spec, r, _bracket(spec, s, k)))
    _madd(out, _ternary_terms(spec, r, k, s), Fraction(-sign_ks))
    _madd(out, _ternary_terms(spec, r, s, k))
    return out


def _star_gen_word2(spec: AkivisSpec, r: int, word: tuple[int, int]) -> dict[PBWMonomial, Fraction]:
    """e_r * (e_s e_k) by the five-way case table in the module docstring."""
    basis = spec.basis
    s, k = word
    pr, ps, pk = basis.parities[r], basis.parities[s], basis.parities[k]
    out: dict[PBWMonomial, Fraction] = {}
    if r < s or (r == s and ps == EVEN):
        out[word_monomial(basis, (r, s, k))] = _ONE
        _madd(out, _ternary_terms(spec, r, s, k), Fraction(-1))
        return out
    if r == s:  # r odd, and s < k by word validity
        _madd(out, _star_vec_gen(spec, _bracket(spec, r, r), k), _HALF)
        _madd(out, _ternary_terms(spec, r, r, k), Fraction(-1))
        return out
    # now s < r
    sign_rs = koszul(pr, ps)
    if r < k or (r == k and pr == EVEN):
        out[word_monomial(basis, (s, r, k))] = Fraction(sign_rs)
        _madd(out, _ternary_terms(spec, r, s, k), Fraction(-1))
        _madd(out, _star_vec_gen(spec, _bracket(spec, r, s), k))
        return out
    if r == k:  # r odd, s < r = k
        _madd(out, _star_gen_vec(spec, s, _bracket(spec, r, r)), _HALF * sign_rs)
        _madd(out, _star_vec_gen(spec, _bracket(spec, r, s), r))
        _madd(out, _ternary_terms(spec, r, s, r), Fraction(-1))
        _madd(out, _ternary_terms(spec, s, r, r), Fraction(sign_rs))
        return out
    # s <= k < r
    out[word_monomial(basis, (s, k, r))] = Fraction(koszul(pr, (pk + ps) % 2))
    _madd(out, _star_gen_vec(spec, s, _bracket(spec, r, k)), Fraction(sign_rs))
    _madd(out, _star_vec_gen(spec, _bracket(spec, r, s), k))
    _madd(out, _ternary_terms(spec, s, r, k), Fraction(sign_rs))
    _madd(out, _ternary_terms(spec, r, s, k), Fraction(-1))
    _madd(out, _ternary_terms(spec, s, k, r), Fraction(-koszul(pr, (pk + ps) % 2)))
    return out


def _star_mono(spec: AkivisSpec, policy: TruncationPolicy,
               mu: PBWMonomial, mv: PBWMonomial) -> dict[PBWMonomial, Fraction]:
    du, dv = mu.degree, mv.degree
    if du == 0:
        return {mv: _ONE}
    if dv == 0:
        return {mu: _ONE}
    total = du + dv
    if total > policy.max_degree:
        raise TruncationError(total, policy.max_degree)
    if total > 3:
        return {pair_monomial(mu, mv): _ONE}
    if du == 1 and dv == 1:
        return _star_gen_gen(spec, mu.word[0], mv.word[0])
    if du == 2 and dv == 1:
        return _star_word2_gen(spec, mu.word, mv.word[0])
    # du == 1 and dv == 2
    return _star_gen_word2(spec, mu.word[0], mv.word)


def star(spec: AkivisSpec, u: EnvElement, v: EnvElement,
         policy: TruncationPolicy | None = None) -> EnvElement:
    """The bilinear extension of the basis-monomial product."""
    policy = _default_policy(policy)
    u._require_same_spec(v)
    if u.spec is not spec and u.spec != spec:
        raise BasisMismatchError("elements over a different spec")
    acc: dict[PBWMonomial, Fraction] = {}
    for mu, cu in u._terms.items():
        for mv, cv in v._terms.items():
            _madd(acc, _star_mono(spec, policy, mu, mv), cu * cv)
            if len(acc) > policy.max_monomials:
                raise CapacityError(
                    f"product holds more than {policy.max_monomials} monomials")
    return EnvElement(spec, acc)


class MagmaTerm(object):
    """A formal expression in the free unital magma on M: generators,
    rational multiples, sums, and binary (nonassociative) products.  Degree
    and parity of a product node are the sums over its children; sums only
    carry them when all summands agree."""

    __slots__ = ()


@dataclass(frozen=True)
class MagmaGen(MagmaTerm):
    name: str


@dataclass(frozen=True)
class MagmaScale(MagmaTerm):
    coeff: Fraction
    term: MagmaTerm

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", as_scalar(self.coeff))


@dataclass(frozen=True)
class MagmaSum(MagmaTerm):
    terms: tuple[MagmaTerm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class MagmaProd(MagmaTerm):
    left: MagmaTerm
    right: MagmaTerm


def magma_from_vector(v: Vector) -> MagmaTerm:
    return MagmaSum(tuple(MagmaScale(c, MagmaGen(n)) for n, c in v.items()))


def magma_degree(term: MagmaTerm) -> int | None:
    """Word degree of a term, None when a sum mixes degrees."""
    if isinstance(term, MagmaGen):
        return 1
    if isinstance(term, MagmaScale):
        return magma_degree(term.term)
    if isinstance(term, MagmaProd):
        l, r = magma_degree(term.left), magma_degree(term.right)
        return None if l is None or r is None else l + r
    if isinstance(term, MagmaSum):
        degrees = {magma_degree(t) for t in term.terms}
        return degrees.pop() if len(degrees) == 1 else None
    raise TypeError(f"not a magma term: {term!r}")


def magma_parity(spec: AkivisSpec, term: MagmaTerm) -> int | None:
    """Parity of a term, None when a sum mixes parities."""
    if isinstance(term, MagmaGen):
        return spec.basis.parity(term.name)
    if isinstance(term, MagmaScale):
        return magma_parity(spec, term.term)
    if isinstance(term, MagmaProd):
        l, r = magma_parity(spec, term.left), magma_parity(spec, term.right)
        return None if l is None or r is None else (l + r) % 2
    if isinstance(term, MagmaSum):
        parities = {magma_parity(spec, t) for t in term.terms}
        return parities.pop() if len(parities) == 1 else None
    raise TypeError(f"not a magma term: {term!r}")


def env_eval(spec: AkivisSpec, term: MagmaTerm,
             policy: TruncationPolicy | None = None) -> EnvElement:
    """Evaluate a magma term in the envelope model, products via star."""
    policy = _default_policy(policy)
    if isinstance(term, MagmaGen):
        return EnvElement.from_vector(spec, Vector.unit(spec.basis, term.name))
    if isinstance(term, MagmaScale):
        return env_eval(spec, term.term, policy).scaled(term.coeff)
    if isinstance(term, MagmaSum):
        acc = EnvElement.zero(spec)
        for t in term.terms:
            acc = acc + env_eval(spec, t, policy)
        return acc
    if isinstance(term, MagmaProd):
        return star(spec, env_eval(spec, term.left, policy),
                    env_eval(spec, term.right, policy), policy)
    raise TypeError(f"not a magma term: {term!r}")


def star_super_commutator(spec: AkivisSpec, u: EnvElement, v: EnvElement,
                          policy: TruncationPolicy | None = None) -> EnvElement:
    """<u, v> = u*v - (-1)^{|u||v|} v*u, extended from parity components."""
    policy = _default_policy(policy)
    acc = EnvElement.zero(spec)
    for a, ua in u.parity_components():
        for b, vb in v.parity_components():
            acc = acc + star(spec, ua, vb, policy) \
                - star(spec, vb, ua, policy).scaled(koszul(a, b))
    return acc


def star_associator(spec: AkivisSpec, u: EnvElement, v: EnvElement, w: EnvElement,
                    policy: TruncationPolicy | None = None) -> EnvElement:
    """<u, v, w> = (u*v)*w - u*(v*w)."""
    policy = _default_policy(policy)
    return star(spec, star(spec, u, v, policy), w, policy) \
        - star(spec, u, star(spec, v, w, policy), policy)


def verify_embedding_relations(spec: AkivisSpec, policy: TruncationPolicy | None = None,
                               max_witnesses: int = 16) -> CheckReport:
    """On all generator tuples: the star super-commutator reproduces the
    bracket table and the star associator reproduces the ternary table."""
    policy = _default_policy(policy)
    basis = spec.basis
    gen = {n: EnvElement.from_vector(spec, Vector.unit(basis, n)) for n in basis.names}
    col = ReportBuilder("embedding-relations", max_witnesses)
    for a in basis.names:
        for b in basis.names:
            lhs = star_super_commutator(spec, gen[a], gen[b], policy)
            rhs = EnvElement.from_vector(spec, spec.bracket_of(a, b))
            col.record((a, b), lhs, rhs, note="bracket")
    for a in basis.names:
        for b in basis.names:
            for c in basis.names:
                lhs = star_associator(spec, gen[a], gen[b], gen[c], policy)
                rhs = EnvElement.from_vector(spec, spec.ternary_of(a, b, c))
                col.record((a, b, c), lhs, rhs, note="associator")
    return col.report()


def verify_leading_term(spec: AkivisSpec, n: int, policy: TruncationPolicy | None = None,
                        max_witnesses: int = 16) -> CheckReport:
    """For every split i + j = n <= 3 and basis monomials u, v of those
    degrees, star(u, v) equals the super-symmetrized concatenation modulo
    terms of degree below n.  Above degree 3 the product is the tensor
    pairing and the statement is definitional, so n stops at 3."""
    policy = _default_policy(policy)
    if n < 1:
        raise ValueError("degree must be positive")
    if n > 3:
        raise NotApplicableError("the leading-term property is nontrivial only up to degree 3")
    basis = spec.basis
    col = ReportBuilder("leading-term", max_witnesses)
    for i in range(1, n):
        for u in pbw_basis(spec, i, policy):
            for v in pbw_basis(spec, n - i, policy):
                prod = star(spec, EnvElement.from_monomial(spec, u),
                            EnvElement.from_monomial(spec, v), policy)
                sign, word = sym_normalize(basis, u.word + v.word)
                want = EnvElement(spec) if sign == 0 else \
                    EnvElement.from_monomial(spec, word_monomial(basis, word), sign)
                col.record((monomial_str(basis, u), monomial_str(basis, v)),
                           prod.degree_component(n), want)
    return col.report()


def iota_roundtrip(spec: AkivisSpec, v: Vector,
                   policy: TruncationPolicy | None = None) -> Vector:
    """Embed a vector of M, multiply by the unit on both sides, and project
    back onto the degree-1 component."""
    policy = _default_policy(policy)
    one = EnvElement.one(spec)
    elem = EnvElement.from_vector(spec, v)
    elem = star(spec, one, star(spec, elem, one, policy), policy)
    return elem.to_vector()
