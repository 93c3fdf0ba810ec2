"""Counting elements of infinite sets of naturals.

The building block is the progression ``N(k, n) = {k, k+n, k+2n, ...}``,
one of the ``n`` equal parts of the naturals, which has ``G/n`` elements.
Boolean combinations with finite sets are counted by lifting every
progression to residue classes modulo a common step; no infinite set is
ever enumerated.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import core
from .core import GROSSONE, GrossNumber
from .errors import ParseError, UnsupportedForm, UnsupportedLevel, UnsupportedSet
from .extended import PowAtom, Value, mul as ext_mul

# residue tables larger than this are refused rather than built
MAX_COMMON_STEP = 1_000_000


class SetExpr:
    def __or__(self, other: "SetExpr") -> "SetExpr":
        return Union_(self, other)

    def __and__(self, other: "SetExpr") -> "SetExpr":
        return Intersection(self, other)

    def __sub__(self, other: "SetExpr") -> "SetExpr":
        return Difference(self, other)


@dataclass(frozen=True)
class Progression(SetExpr):
    k: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.n, int)):
            raise TypeError("progression offset and step must be integers")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got N({self.k},{self.n})")

    def __contains__(self, m: int) -> bool:
        return m >= 1 and (m - self.k) % self.n == 0

    def first(self, count: int) -> list[int]:
        return [self.k + i * self.n for i in range(count)]

    def __str__(self):
        return f"N({self.k},{self.n})"


@dataclass(frozen=True)
class FiniteSet(SetExpr):
    elements: frozenset

    def __init__(self, elements):
        elements = frozenset(elements)
        if any(not isinstance(e, int) or e < 1 for e in elements):
            raise ValueError("finite sets hold positive integers only")
        object.__setattr__(self, "elements", elements)


@dataclass(frozen=True)
class Union_(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Intersection(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Difference(SetExpr):
    left: SetExpr
    right: SetExpr


def card_progression(p: Progression) -> GrossNumber:
    return core.monomial(Fraction(1, p.n), 1)


def intersect_progressions(p1: Progression, p2: Progression) -> Optional[Progression]:
    """Solve ``x = k1 mod n1, x = k2 mod n2``; None when the classes are disjoint."""
    g = math.gcd(p1.n, p2.n)
    diff = p2.k - p1.k
    if diff % g:
        return None
    step = p1.n // g * p2.n
    m = p2.n // g
    t = (diff // g) * pow(p1.n // g, -1, m) % m if m > 1 else 0
    r = (p1.k + p1.n * t) % step
    return Progression(r or step, step)


# -- normal form ------------------------------------------------------------


@dataclass(frozen=True)
class Normalized:
    """``(union of N(r, step) for r in residues)`` with membership flipped at ``flips``."""

    step: int
    residues: frozenset
    flips: frozenset

    def __contains__(self, m: int) -> bool:
        return ((m % self.step or self.step) in self.residues) != (m in self.flips)

    def progressions(self) -> list[Progression]:
        return [Progression(r, self.step) for r in sorted(self.residues)]

    def cardinality(self) -> GrossNumber:
        count = core.monomial(Fraction(len(self.residues), self.step), 1)
        correction = sum(
            -1 if (m % self.step or self.step) in self.residues else 1 for m in self.flips
        )
        return core.add(count, correction)


def _steps(e: SetExpr) -> list[int]:
    if isinstance(e, Progression):
        return [e.n]
    if isinstance(e, FiniteSet):
        return []
    if isinstance(e, (Union_, Intersection, Difference)):
        return _steps(e.left) + _steps(e.right)
    raise UnsupportedSet(f"unknown set node {e!r}")


_COMBINE = {
    Union_: lambda a, b: a or b,
    Intersection: lambda a, b: a and b,
    Difference: lambda a, b: a and not b,
}


def _lift(e: SetExpr, step: int) -> Normalized:
    if isinstance(e, Progression):
        return Normalized(step, frozenset(range(e.k, step + 1, e.n)), frozenset())
    if isinstance(e, FiniteSet):
        return Normalized(step, frozenset(), e.elements)
    left, right = _lift(e.left, step), _lift(e.right, step)
    op = _COMBINE[type(e)]
    residues = frozenset(
        r for r in range(1, step + 1) if op(r in left.residues, r in right.residues)
    )
    flips = set()
    for m in left.flips | right.flips:
        in_class = (m % step or step) in residues
        if op(m in left, m in right) != in_class:
            flips.add(m)
    return Normalized(step, residues, frozenset(flips))


def normalize(e: SetExpr) -> Normalized:
    """Rewrite ``e`` as disjoint progressions with a common step plus finite exceptions."""
    step = math.lcm(*_steps(e)) if _steps(e) else 1
    if step > MAX_COMMON_STEP:
        raise UnsupportedSet(f"common step {step} is too large to tabulate")
    return _lift(e, step)


def card(e: SetExpr) -> GrossNumber:
    return normalize(e).cardinality()


# -- sets given by formulae -------------------------------------------------


@dataclass(frozen=True)
class Linear:
    """``g(i) = k + n*(i - 1)`` for ``i >= 1``."""

    k: int
    n: int


@dataclass(frozen=True)
class Power:
    """``g(i) = k + n*i**j`` for ``i >= 0``."""

    k: int
    n: int
    j: int


def count_by_inverse(form: Union[Linear, Power], bound=GROSSONE) -> GrossNumber:
    """Number of indices with ``g(i) <= bound``: the integer part of ``g^-1(bound)``."""
    bound = core.as_gross(bound)
    if core.sign(bound) <= 0:
        raise ValueError("bound must be positive")
    if isinstance(form, Linear):
        x = core.mul(core.sub(bound, form.k), Fraction(1, form.n))
        return core.add(core.floor(x), 1)
    if isinstance(form, Power):
        x = core.mul(core.sub(bound, form.k), Fraction(1, form.n))
        return core.floor(core.nth_root(x, form.j))
    raise UnsupportedForm(f"no inverse known for {form!r}")


def card_tuples(m: int) -> GrossNumber:
    if m < 1:
        raise ValueError("tuple length must be positive")
    return core.monomial(1, m)


def card_integers() -> GrossNumber:
    return core.GrossNumber([(1, 2), (0, 1)])


def card_Q1() -> GrossNumber:
    # numerators over 2G+1 integers, denominators over 2G nonzero ones
    return core.mul(card_integers(), core.monomial(2, 1))


def card_Q2() -> GrossNumber:
    return core.GrossNumber([(2, 2), (0, 1)])


def card_Rb(b: int) -> PowAtom:
    """Numerals with at most G digits on each side of the radix point."""
    if b < 2:
        raise ValueError("radix must be at least 2")
    return PowAtom(Fraction(b), core.monomial(2, 1))


@dataclass(frozen=True)
class GridLevel:
    level: int


@dataclass(frozen=True)
class Positional:
    base: int


def card_line(points: Union[GridLevel, Positional]) -> Value:
    if isinstance(points, GridLevel):
        if points.level == 1:
            return core.monomial(2, 2)
        if points.level == 2:
            return core.monomial(2, 3)
        raise UnsupportedLevel(f"grid level {points.level} is not covered")
    if isinstance(points, Positional):
        if points.base < 2:
            raise ValueError("radix must be at least 2")
        # 2G unit intervals, b^G positional points in each
        return ext_mul(core.monomial(2, 1), PowAtom(Fraction(points.base), GROSSONE))
    raise UnsupportedForm(f"unknown point description {points!r}")


# -- text syntax ------------------------------------------------------------

_DIGITS = re.compile(r"\d+")


class _SetParser:
    """``N(k,n)``, ``{a,b}``, ``&`` binding tighter than ``|`` and ``\\``."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch: str):
        if self._peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def _int(self) -> int:
        self._peek()
        m = _DIGITS.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def parse(self) -> SetExpr:
        e = self._union()
        if self._peek():
            raise ParseError(f"unexpected {self._peek()!r}", self.pos)
        return e

    def _union(self) -> SetExpr:
        e = self._inter()
        while self._peek() in ("|", "\\"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self._inter()
            e = Union_(e, rhs) if op == "|" else Difference(e, rhs)
        return e

    def _inter(self) -> SetExpr:
        e = self._atom()
        while self._peek() == "&":
            self.pos += 1
            e = Intersection(e, self._atom())
        return e

    def _atom(self) -> SetExpr:
        ch = self._peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            e = self._union()
            self._expect(")")
            return e
        if ch == "{":
            self.pos += 1
            items = []
            if self._peek() != "}":
                items.append(self._int())
                while self._peek() == ",":
                    self.pos += 1
                    items.append(self._int())
            self._expect("}")
            if len(set(items)) != len(items):
                raise ParseError("repeated element in finite set", start)
            return FiniteSet(items)
        if ch == "N":
            self.pos += 1
            self._expect("(")
            k = self._int()
            self._expect(",")
            n = self._int()
            self._expect(")")
            try:
                return Progression(k, n)
            except ValueError as exc:
                raise ParseError(str(exc), start) from None
        raise ParseError("expected N(k,n), {...} or '('", start)


def parse_set(text: str) -> SetExpr:
    return _SetParser(text).parse()
