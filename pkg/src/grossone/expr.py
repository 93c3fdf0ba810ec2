"""Calculator expression language.

Grammar (``G`` or ``①`` is grossone)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor | juxtaposed)*
    factor := "-" factor | atom ("^" factor)?
    atom   := number | "G" | ident | "(" expr ")"

A juxtaposed factor is one that starts with ``G``, a name or ``(``
directly after another factor, so ``16.5G^44.2`` reads as
``16.5 * G^44.2``.  Numbers are decimal literals parsed exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from . import core, extended
from .core import DEFAULT_MAX_TERMS, GROSSONE
from .errors import ParseError, UnboundVariable
from .formatting import format_value


class Expr:
    pass


@dataclass(frozen=True)
class Literal(Expr):
    value: Fraction


@dataclass(frozen=True)
class GrossSymbol(Expr):
    pass


@dataclass(frozen=True)
class Variable(Expr):
    name: str


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: Expr


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<gross>①)|(?P<op>[-+*/^()])"
)


@dataclass
class _Tok:
    kind: str  # "num", "name", "G", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "gross" or (kind == "name" and m.group() == "G"):
            toks.append(_Tok("G", m.group(), pos))
        elif kind != "ws":
            toks.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def _is_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def parse(self) -> Expr:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        e = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self._is_op("+", "-"):
            op = self.tok.text
            self.i += 1
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.factor()
        while True:
            if self._is_op("*", "/"):
                op = self.tok.text
                self.i += 1
                rhs = self.factor()
                e = Mul(e, rhs) if op == "*" else Div(e, rhs)
            elif self.tok.kind in ("G", "name") or self._is_op("("):
                e = Mul(e, self.factor())
            else:
                return e

    def factor(self) -> Expr:
        if self._is_op("-"):
            self.i += 1
            return Neg(self.factor())
        base = self.atom()
        if self._is_op("^"):
            self.i += 1
            return Pow(base, self.factor())
        return base

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return Literal(Fraction(tok.text if tok.text[-1] != "." else tok.text[:-1]))
        if tok.kind == "G":
            self.i += 1
            return GrossSymbol()
        if tok.kind == "name":
            self.i += 1
            return Variable(tok.text)
        if self._is_op("("):
            self.i += 1
            e = self.expr()
            if not self._is_op(")"):
                raise ParseError("expected ')'", self.tok.pos)
            self.i += 1
            return e
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.pos)
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def evaluate(
    e: Expr,
    env: Optional[Mapping[str, object]] = None,
    *,
    max_div_terms: int = DEFAULT_MAX_TERMS,
    strict: bool = True,
):
    """Fold ``e`` with exact arithmetic.

    Returns a :class:`GrossNumber` when possible, an ``ExtendedValue`` when
    power atoms are involved, or a display-only ``SymbolicPower``.  With
    ``strict=False`` an inexact division yields its truncated quotient.
    """
    env = env or {}

    def ev(node: Expr):
        if isinstance(node, Literal):
            return core.from_rational(node.value)
        if isinstance(node, GrossSymbol):
            return GROSSONE
        if isinstance(node, Variable):
            try:
                value = env[node.name]
            except KeyError:
                raise UnboundVariable(f"unbound variable {node.name!r}") from None
            return core.as_gross(value) if isinstance(value, (int, Fraction)) else value
        if isinstance(node, Neg):
            return extended.neg(ev(node.operand))
        if isinstance(node, Add):
            return extended.add(ev(node.left), ev(node.right))
        if isinstance(node, Sub):
            return extended.sub(ev(node.left), ev(node.right))
        if isinstance(node, Mul):
            return extended.mul(ev(node.left), ev(node.right))
        if isinstance(node, Div):
            return extended.divide(ev(node.left), ev(node.right), max_div_terms, strict)
        if isinstance(node, Pow):
            return extended.power(ev(node.base), ev(node.exponent), max_div_terms)
        raise TypeError(f"not an expression node: {node!r}")

    return ev(e)


def evaluate_text(text: str, env=None, **opts):
    return evaluate(parse(text), env, **opts)


def parse_roundtrip(text: str) -> str:
    return format_value(evaluate(parse(text)))


Value = Union[core.GrossNumber, extended.ExtendedValue, extended.SymbolicPower]
