"""Expressions over a graded algebra: parsing and exact evaluation.

Grammar (whitespace free between tokens; a leading sign on the first term is
accepted as a convenience):

    expr   := ["+" | "-"] term (("+" | "-") term)*
    term   := [RATIONAL ["*"]] factor ("*" factor)*
    factor := IDENT
            | "[" expr "," expr "]"
            | "A" "(" expr "," expr "," expr ")"
            | "(" expr ")"
    RATIONAL := DIGITS ("/" DIGITS)?

Generator names resolve against the algebra at parse time.  The identifier
`A` immediately followed by `(` always reads as the ternary operation, even
when a generator is literally named A.

Evaluation is mode-dependent:

    eval_in_table     over a SuperTable: `*` is the table product, [x,y] the
                      super-commutator, A(x,y,z) the associator.
    eval_in_spec      over an AkivisSpec: [x,y] and A(x,y,z) are the bracket
                      and ternary tables; `*` between vectors is an error.
    eval_in_envelope  over an AkivisSpec: `*` is the star product, [x,y] the
                      star super-commutator, A(x,y,z) the star associator.

All three are linear in sums and rational scalings, and all arithmetic is
exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import (
    AkivisSpec,
    AlgebraError,
    GradedBasis,
    SuperTable,
    Vector,
    associator,
    bracket_eval,
    multiply,
    super_commutator,
    ternary_eval,
)
from .envelope import (
    EnvElement,
    TruncationPolicy,
    star,
    star_associator,
    star_super_commutator,
)


class ExprError(AlgebraError):
    """A parse or evaluation error, positioned by character column."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        prefix = f"column {pos + 1}: " if pos is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class ExprNode:
    __slots__ = ()


@dataclass(frozen=True)
class EGen(ExprNode):
    name: str
    pos: int = 0


@dataclass(frozen=True)
class EScale(ExprNode):
    coeff: Fraction
    node: ExprNode
    pos: int = 0


@dataclass(frozen=True)
class ESum(ExprNode):
    terms: tuple[ExprNode, ...]
    pos: int = 0


@dataclass(frozen=True)
class EProd(ExprNode):
    left: ExprNode
    right: ExprNode
    pos: int = 0


@dataclass(frozen=True)
class EBracket(ExprNode):
    left: ExprNode
    right: ExprNode
    pos: int = 0


@dataclass(frozen=True)
class ETernary(ExprNode):
    first: ExprNode
    second: ExprNode
    third: ExprNode
    pos: int = 0


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<rat>\d+(?:/\d+)?)"
    r"|(?P<op>[-+*,()\[\]])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprError(f"unexpected character {text[pos]!r}", pos)
        pos = m.end()
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), m.start()))
    return tokens


class _Parser:
    def __init__(self, text: str, basis: GradedBasis):
        self.text = text
        self.basis = basis
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _take(self) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None:
            raise ExprError("unexpected end of expression", len(self.text))
        self.i += 1
        return tok

    def _expect_op(self, op: str) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None or tok[0] != "op" or tok[1] != op:
            pos = tok[2] if tok else len(self.text)
            found = repr(tok[1]) if tok else "end of expression"
            raise ExprError(f"expected {op!r}, found {found}", pos)
        return self._take()

    def parse(self) -> ExprNode:
        node = self.expr()
        tok = self._peek()
        if tok is not None:
            raise ExprError(f"unexpected trailing {tok[1]!r}", tok[2])
        return node

    def expr(self) -> ExprNode:
        terms = []
        sign = 1
        tok = self._peek()
        if tok is not None and tok[0] == "op" and tok[1] in "+-":
            self._take()
            sign = -1 if tok[1] == "-" else 1
        terms.append(self._signed(self.term(), sign))
        while True:
            tok = self._peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                break
            self._take()
            terms.append(self._signed(self.term(), -1 if tok[1] == "-" else 1))
        return terms[0] if len(terms) == 1 else ESum(tuple(terms), terms[0].pos)

    @staticmethod
    def _signed(node: ExprNode, sign: int) -> ExprNode:
        return node if sign == 1 else EScale(Fraction(-1), node, node.pos)

    def term(self) -> ExprNode:
        coeff = None
        tok = self._peek()
        if tok is not None and tok[0] == "rat":
            self._take()
            coeff = Fraction(tok[1])
            nxt = self._peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "*":
                self._take()
        node = self.factor()
        while True:
            tok = self._peek()
            if tok is None or tok[0] != "op" or tok[1] != "*":
                break
            self._take()
            right = self.factor()
            node = EProd(node, right, node.pos)
        if coeff is not None:
            node = EScale(coeff, node, node.pos)
        return node

    def factor(self) -> ExprNode:
        tok = self._peek()
        if tok is None:
            raise ExprError("expected a generator, '[', 'A(' or '('", len(self.text))
        kind, text, pos = tok
        if kind == "ident":
            self._take()
            nxt = self._peek()
            if text == "A" and nxt is not None and nxt[0] == "op" and nxt[1] == "(":
                self._expect_op("(")
                first = self.expr()
                self._expect_op(",")
                second = self.expr()
                self._expect_op(",")
                third = self.expr()
                self._expect_op(")")
                return ETernary(first, second, third, pos)
            if text not in self.basis:
                raise ExprError(f"unknown generator {text!r}", pos)
            return EGen(text, pos)
        if kind == "op" and text == "[":
            self._take()
            left = self.expr()
            self._expect_op(",")
            right = self.expr()
            self._expect_op("]")
            return EBracket(left, right, pos)
        if kind == "op" and text == "(":
            self._take()
            inner = self.expr()
            self._expect_op(")")
            return inner
        if kind == "rat":
            raise ExprError("a bare number is not a term; scale a generator", pos)
        raise ExprError(f"unexpected {text!r}", pos)


def parse_expr(text: str, algebra: Union[SuperTable, AkivisSpec, GradedBasis]) -> ExprNode:
    """Parse an expression, resolving generators against the algebra's basis."""
    basis = algebra if isinstance(algebra, GradedBasis) else algebra.basis
    return _Parser(text, basis).parse()


def eval_in_table(node: ExprNode, table: SuperTable) -> Vector:
    """Evaluate over a product table; see the module docstring for `*`."""
    if isinstance(node, EGen):
        return Vector.unit(table.basis, node.name)
    if isinstance(node, EScale):
        return eval_in_table(node.node, table).scaled(node.coeff)
    if isinstance(node, ESum):
        acc = Vector.zero(table.basis)
        for t in node.terms:
            acc = acc + eval_in_table(t, table)
        return acc
    if isinstance(node, EProd):
        return multiply(table, eval_in_table(node.left, table), eval_in_table(node.right, table))
    if isinstance(node, EBracket):
        return super_commutator(table, eval_in_table(node.left, table),
                                eval_in_table(node.right, table))
    if isinstance(node, ETernary):
        return associator(table, eval_in_table(node.first, table),
                          eval_in_table(node.second, table), eval_in_table(node.third, table))
    raise TypeError(f"not an expression node: {node!r}")


def eval_in_spec(node: ExprNode, spec: AkivisSpec) -> Vector:
    """Evaluate over an Akivis spec; vector products have no meaning here."""
    if isinstance(node, EGen):
        return Vector.unit(spec.basis, node.name)
    if isinstance(node, EScale):
        return eval_in_spec(node.node, spec).scaled(node.coeff)
    if isinstance(node, ESum):
        acc = Vector.zero(spec.basis)
        for t in node.terms:
            acc = acc + eval_in_spec(t, spec)
        return acc
    if isinstance(node, EProd):
        raise ExprError("a spec has no binary product; use [,] / A(,,) "
                        "or evaluate in the envelope", node.pos)
    if isinstance(node, EBracket):
        return bracket_eval(spec, eval_in_spec(node.left, spec), eval_in_spec(node.right, spec))
    if isinstance(node, ETernary):
        return ternary_eval(spec, eval_in_spec(node.first, spec),
                            eval_in_spec(node.second, spec), eval_in_spec(node.third, spec))
    raise TypeError(f"not an expression node: {node!r}")


def eval_in_envelope(node: ExprNode, spec: AkivisSpec,
                     policy: TruncationPolicy | None = None) -> EnvElement:
    """Evaluate in the envelope model; `*` is the star product."""
    if isinstance(node, EGen):
        return EnvElement.from_vector(spec, Vector.unit(spec.basis, node.name))
    if isinstance(node, EScale):
        return eval_in_envelope(node.node, spec, policy).scaled(node.coeff)
    if isinstance(node, ESum):
        acc = EnvElement.zero(spec)
        for t in node.terms:
            acc = acc + eval_in_envelope(t, spec, policy)
        return acc
    if isinstance(node, EProd):
        return star(spec, eval_in_envelope(node.left, spec, policy),
                    eval_in_envelope(node.right, spec, policy), policy)
    if isinstance(node, EBracket):
        return star_super_commutator(spec, eval_in_envelope(node.left, spec, policy),
                                     eval_in_envelope(node.right, spec, policy), policy)
    if isinstance(node, ETernary):
        return star_associator(spec, eval_in_envelope(node.first, spec, policy),
                               eval_in_envelope(node.second, spec, policy),
                               eval_in_envelope(node.third, spec, policy), policy)
    raise TypeError(f"not an expression node: {node!r}")
