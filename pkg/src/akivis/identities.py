"""Decision procedures for multilinear identities of Akivis superalgebras.

Every check sweeps ordered basis tuples in lexicographic basis order, so runs
are deterministic; because all identities are multilinear, holding on basis
tuples is equivalent to holding identically.  A failed tuple is recorded as a
:class:`Witness` carrying both exact sides, and reports cap the stored
witnesses (default 16) while still counting every failure.

The Akivis identity, for homogeneous x, y, z of parities a, b, c:

    SJ(x, y, z) = A(x,y,z) + (-1)^{a(b+c)} A(y,z,x) + (-1)^{c(a+b)} A(z,x,y)
                - (-1)^{ab} A(y,x,z) - (-1)^{a(b+c)+bc} A(z,y,x)
                - (-1)^{bc} A(x,z,y)

with SJ the super-Jacobian of :mod:`akivis.core`.  Derived specs of graded
structure-constant tables satisfy it identically; the checker treats it as a
property, never as a construction invariant.

check_malcev_instance evaluates one instance of the weighted cyclic pattern

    sum_i  w_i * T_i  =  [[w, y], [x, z]],      with
    T_1 = [[[w,x],y],z], T_2 = [[[x,y],z],w], T_3 = [[[y,z],w],x], T_4 = [[[z,w],x],y].

With weights (1, 1, 1, 1) and even arguments this is the linearized Malcev
identity, which every Lie algebra satisfies.  No graded Malcev identity is
proposed here: for graded inputs only specific weighted instances are
evaluated, such as the failing instances (1,-1,0,0) on the octonions and
(2,-1,0,0) on the twisted matrix algebra exercised by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .core import (
    AkivisSpec,
    SuperTable,
    Vector,
    bracket_eval,
    koszul,
    sign_pow,
    super_commutator,
    super_jacobian,
)

DEFAULT_WITNESS_CAP = 16

LABEL_LIE = "lie"
LABEL_MALCEV = "malcev-presented"
LABEL_PROPER = "proper-akivis"
LABEL_NOT_AKIVIS = "not-akivis"


@dataclass(frozen=True)
class Witness:
    """One failed tuple: the generator names involved and both exact sides."""

    args: tuple[str, ...]
    lhs: object
    rhs: object
    note: str = ""

    def to_dict(self) -> dict:
        d = {"args": list(self.args), "lhs": str(self.lhs), "rhs": str(self.rhs)}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class CheckReport:
    """Outcome of one identity sweep.  `passed` iff no tuple failed; the
    witness list is capped at `witness_cap` but `failures` counts all."""

    identity: str
    passed: bool
    checked: int
    failures: int
    witnesses: list[Witness] = field(default_factory=list)
    witness_cap: int = DEFAULT_WITNESS_CAP

    def summary_line(self) -> str:
        status = "pass" if self.passed else "fail"
        line = f"{self.identity}: {status} ({self.checked} tuples checked"
        if not self.passed:
            line += f", {self.failures} failed"
        return line + ")"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "failures": self.failures,
            "witness_cap": self.witness_cap,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


class ReportBuilder:
    """Accumulates record() outcomes of one sweep into a CheckReport."""

    def __init__(self, identity: str, cap: int):
        if cap < 1:
            raise ValueError("witness cap must be at least 1")
        self.identity = identity
        self.cap = cap
        self.checked = 0
        self.failures = 0
        self.witnesses: list[Witness] = []

    def record(self, args: tuple[str, ...], lhs, rhs, note: str = "") -> None:
        self.checked += 1
        if lhs != rhs:
            self.failures += 1
            if len(self.witnesses) < self.cap:
                self.witnesses.append(Witness(args, lhs, rhs, note))

    def report(self) -> CheckReport:
        return CheckReport(self.identity, self.failures == 0, self.checked,
                           self.failures, self.witnesses, self.cap)


def _pairs(spec: AkivisSpec) -> Iterable[tuple[str, str]]:
    for a in spec.basis.names:
        for b in spec.basis.names:
            yield a, b


def _triples(spec: AkivisSpec) -> Iterable[tuple[str, str, str]]:
    for a in spec.basis.names:
        for b in spec.basis.names:
            for c in spec.basis.names:
                yield a, b, c


def akivis_identity_sides(spec: AkivisSpec, a: str, b: str, c: str) -> tuple[Vector, Vector]:
    """(SJ, alternating associator sum) at one ordered basis triple."""
    basis = spec.basis
    pa, pb, pc = basis.parity(a), basis.parity(b), basis.parity(c)
    va, vb, vc = (Vector.unit(basis, n) for n in (a, b, c))
    lhs = super_jacobian(spec, va, vb, vc)
    rhs = (spec.ternary_of(a, b, c)
           + spec.ternary_of(b, c, a).scaled(sign_pow(pa * (pb + pc)))
           + spec.ternary_of(c, a, b).scaled(sign_pow(pc * (pa + pb)))
           - spec.ternary_of(b, a, c).scaled(koszul(pa, pb))
           - spec.ternary_of(c, b, a).scaled(sign_pow(pa * (pb + pc) + pb * pc))
           - spec.ternary_of(a, c, b).scaled(koszul(pb, pc)))
    return lhs, rhs


def check_akivis_identity(spec: AkivisSpec,
                          max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Does `spec` satisfy the Akivis identity on all ordered basis triples?"""
    col = ReportBuilder("akivis", max_witnesses)
    for a, b, c in _triples(spec):
        lhs, rhs = akivis_identity_sides(spec, a, b, c)
        col.record((a, b, c), lhs, rhs)
    return col.report()


def check_superanticommutative(spec: AkivisSpec,
                               max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """[x,y] = -(-1)^{ab} [y,x] on all ordered basis pairs."""
    col = ReportBuilder("superanticommutative", max_witnesses)
    parity = spec.basis.parity
    for a, b in _pairs(spec):
        lhs = spec.bracket_of(a, b)
        rhs = spec.bracket_of(b, a).scaled(-koszul(parity(a), parity(b)))
        col.record((a, b), lhs, rhs)
    return col.report()


def check_lie(spec: AkivisSpec, max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Lie presentation: the ternary table vanishes and the super-Jacobian
    vanishes, both on all ordered basis triples."""
    col = ReportBuilder("lie", max_witnesses)
    basis = spec.basis
    zero = Vector.zero(basis)
    for a, b, c in _triples(spec):
        col.record((a, b, c), spec.ternary_of(a, b, c), zero, note="ternary")
        va, vb, vc = (Vector.unit(basis, n) for n in (a, b, c))
        col.record((a, b, c), super_jacobian(spec, va, vb, vc), zero, note="super-jacobian")
    return col.report()


def check_malcev_ternary(spec: AkivisSpec,
                         max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Malcev presentation: A(x,y,z) = SJ(x,y,z)/6 on all ordered basis triples."""
    col = ReportBuilder("malcev-ternary", max_witnesses)
    basis = spec.basis
    for a, b, c in _triples(spec):
        va, vb, vc = (Vector.unit(basis, n) for n in (a, b, c))
        lhs = spec.ternary_of(a, b, c)
        rhs = super_jacobian(spec, va, vb, vc).scaled(Fraction(1, 6))
        col.record((a, b, c), lhs, rhs)
    return col.report()


_CLASSICAL_WEIGHTS = (1, 1, 1, 1)


def check_malcev_instance(algebra: Union[AkivisSpec, SuperTable],
                          elems: Sequence[Vector],
                          weights: Sequence = _CLASSICAL_WEIGHTS,
                          labels: Sequence[str] | None = None) -> CheckReport:
    """Evaluate one weighted instance of the cyclic Malcev pattern (module
    docstring) on four concrete vectors.  `algebra` supplies the bracket:
    the bracket table of an AkivisSpec, or the super-commutator of a table."""
    if len(elems) != 4:
        raise ValueError("the pattern takes exactly four elements")
    if len(weights) != 4:
        raise ValueError("need exactly four weights")
    if isinstance(algebra, AkivisSpec):
        def br(u: Vector, v: Vector) -> Vector:
            return bracket_eval(algebra, u, v)
    else:
        def br(u: Vector, v: Vector) -> Vector:
            return super_commutator(algebra, u, v)
    w, x, y, z = elems
    terms = (
        br(br(br(w, x), y), z),
        br(br(br(x, y), z), w),
        br(br(br(y, z), w), x),
        br(br(br(z, w), x), y),
    )
    lhs = Vector.zero(w.basis)
    for wt, t in zip(weights, terms):
        lhs = lhs + t.scaled(wt)
    rhs = br(br(w, y), br(x, z))
    col = ReportBuilder("malcev-instance", 1)
    args = tuple(labels) if labels is not None else tuple(str(v) for v in elems)
    col.record(args, lhs, rhs, note=f"weights {tuple(str(Fraction(wt)) for wt in weights)}")
    return col.report()


def classify(spec: AkivisSpec, max_witnesses: int = DEFAULT_WITNESS_CAP) -> str:
    """Most specific of: lie > malcev-presented > proper-akivis, or not-akivis
    when the Akivis identity itself fails."""
    if not check_akivis_identity(spec, max_witnesses).passed:
        return LABEL_NOT_AKIVIS
    if check_lie(spec, max_witnesses).passed:
        return LABEL_LIE
    if check_malcev_ternary(spec, max_witnesses).passed:
        return LABEL_MALCEV
    return LABEL_PROPER


_CHECKS = {
    "akivis": check_akivis_identity,
    "superanticommutative": check_superanticommutative,
    "lie": check_lie,
    "malcev-ternary": check_malcev_ternary,
}


def run_check(spec: AkivisSpec, identity: str,
              max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Dispatch one of the sweep checks by name (see _CHECKS keys)."""
    try:
        fn = _CHECKS[identity]
    except KeyError:
        raise ValueError(f"unknown identity {identity!r}; "
                         f"known: {', '.join(sorted(_CHECKS))}") from None
    return fn(spec, max_witnesses)
