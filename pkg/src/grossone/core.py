"""Grossnumbers: exact numerals in the positional system with infinite radix G.

A grossnumber is a finite sum of terms ``digit * G**power`` where every
digit is a nonzero :class:`fractions.Fraction` and every power is itself a
grossnumber.  Terms are kept sorted by strictly decreasing power, so two
canonical numbers are equal exactly when their term tuples are equal.
"""

from __future__ import annotations

import enum
import functools
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Union

from .errors import DivisionByZero, InexactDivision, InexactRoot, NotInteger, UnsupportedShape

DEFAULT_MAX_TERMS = 20

Number = Union["GrossNumber", int, Fraction]


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1
    INCOMPARABLE = None

    @classmethod
    def of(cls, s: int) -> "Ordering":
        return cls(s)

    def __str__(self) -> str:
        return self.name.capitalize()


class NumberClass(enum.Enum):
    ZERO = "Zero"
    FINITE_PURE = "FinitePure"
    INFINITESIMAL = "Infinitesimal"
    INFINITE = "Infinite"
    FINITE_MIXED = "FiniteMixed"

    def __str__(self) -> str:
        return self.value


class Parity(enum.Enum):
    EVEN = "Even"
    ODD = "Odd"

    def __str__(self) -> str:
        return self.value


class Term(NamedTuple):
    power: "GrossNumber"
    digit: Fraction


def _to_fraction(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact grossdigit {x!r}; use int, Fraction or a decimal string")
    if isinstance(x, (int, Fraction, str)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a grossdigit")


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


class GrossNumber:
    """Immutable canonical grossnumber.

    ``GrossNumber(raw_terms)`` accepts any iterable of ``(power, digit)``
    pairs and canonicalizes them.  Powers may be grossnumbers, ints,
    Fractions or decimal strings.
    """

    __slots__ = ("terms", "_finite", "_hash")

    def __init__(self, terms: Iterable = ()):
        acc: dict[GrossNumber, Fraction] = {}
        for power, digit in terms:
            p = as_gross(power)
            acc[p] = acc.get(p, Fraction(0)) + _to_fraction(digit)
        self._set(_sorted_terms(acc))

    @classmethod
    def _make(cls, terms: tuple) -> "GrossNumber":
        # terms must already be canonical
        obj = cls.__new__(cls)
        obj._set(terms)
        return obj

    def _set(self, terms: tuple) -> None:
        self.terms: tuple[Term, ...] = terms
        if not terms:
            self._finite: Optional[Fraction] = Fraction(0)
        elif len(terms) == 1 and not terms[0].power.terms:
            self._finite = terms[0].digit
        else:
            self._finite = None
        self._hash: Optional[int] = None

    # -- inspection -------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        """True for plain rationals (zero included): no grossone anywhere."""
        return self._finite is not None

    def as_fraction(self) -> Fraction:
        if self._finite is None:
            raise ValueError(f"{self} is not a finite rational")
        return self._finite

    @property
    def leading(self) -> Term:
        if not self.terms:
            raise ValueError("zero has no leading term")
        return self.terms[0]

    def finite_part(self) -> Fraction:
        for power, digit in self.terms:
            if not power.terms:
                return digit
        return Fraction(0)

    # -- python protocol --------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        if self._hash is None:
            # pure rationals must hash like the int/Fraction they equal
            self._hash = hash(self._finite) if self._finite is not None else hash(self.terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __lt__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else _cmp(self, o) < 0

    def __le__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else _cmp(self, o) <= 0

    def __gt__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else _cmp(self, o) > 0

    def __ge__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else _cmp(self, o) >= 0

    def __add__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else sub(self, o)

    def __rsub__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else sub(o, self)

    def __mul__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else exact_div(self, o)

    def __rtruediv__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else exact_div(o, self)

    def __neg__(self) -> "GrossNumber":
        return neg(self)

    def __pos__(self) -> "GrossNumber":
        return self

    def __pow__(self, n):
        if isinstance(n, int) and not isinstance(n, bool):
            if n >= 0:
                return pow_nat(self, n)
            return exact_div(ONE, pow_nat(self, -n))
        return NotImplemented

    def __repr__(self) -> str:
        return f"GrossNumber({self})"

    def __str__(self) -> str:
        from .formatting import format_value

        return format_value(self)


def as_gross(x) -> GrossNumber:
    if isinstance(x, GrossNumber):
        return x
    return from_rational(_to_fraction(x))


def _coerce(x) -> Optional[GrossNumber]:
    if isinstance(x, GrossNumber):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return from_rational(Fraction(x))
    return None


# -- order ----------------------------------------------------------------


def _cmp(a: GrossNumber, b: GrossNumber) -> int:
    """sign(a - b), computed by walking both term lists from the top."""
    if a is b:
        return 0
    fa, fb = a._finite, b._finite
    if fa is not None and fb is not None:
        return _sgn(fa - fb)
    ta, tb = a.terms, b.terms
    i = 0
    while True:
        if i == len(ta):
            return 0 if i == len(tb) else -_sgn(tb[i].digit)
        if i == len(tb):
            return _sgn(ta[i].digit)
        (pa, da), (pb, db) = ta[i], tb[i]
        c = _cmp(pa, pb)
        if c > 0:
            return _sgn(da)
        if c < 0:
            return -_sgn(db)
        if da != db:
            return _sgn(da - db)
        i += 1


_power_key = functools.cmp_to_key(lambda x, y: _cmp(y[0], x[0]))


def _sorted_terms(acc: dict) -> tuple:
    items = [(p, d) for p, d in acc.items() if d]
    if all(p._finite is not None for p, _ in items):
        items.sort(key=lambda t: t[0]._finite, reverse=True)
    else:
        items.sort(key=_power_key)
    return tuple(Term(p, d) for p, d in items)


def cmp(a: Number, b: Number) -> Ordering:
    return Ordering.of(_cmp(as_gross(a), as_gross(b)))


def sign(a: Number) -> int:
    a = as_gross(a)
    return _sgn(a.terms[0].digit) if a.terms else 0


# -- construction ---------------------------------------------------------


def canonicalize(raw: Iterable) -> GrossNumber:
    """Merge equal powers, drop zero digits, sort powers decreasingly."""
    return GrossNumber(raw)


def from_rational(r) -> GrossNumber:
    r = _to_fraction(r)
    if not r:
        return ZERO
    return GrossNumber._make((Term(ZERO, r),))


def monomial(digit, power=1) -> GrossNumber:
    """``digit * G**power``."""
    d = _to_fraction(digit)
    if not d:
        return ZERO
    return GrossNumber._make((Term(as_gross(power), d),))


ZERO = GrossNumber._make(())
ONE = GrossNumber._make((Term(ZERO, Fraction(1)),))
GROSSONE = GrossNumber._make((Term(ONE, Fraction(1)),))


# -- arithmetic -----------------------------------------------------------


def add(a: Number, b: Number) -> GrossNumber:
    a, b = as_gross(a), as_gross(b)
    if a._finite is not None and b._finite is not None:
        return from_rational(a._finite + b._finite)
    ta, tb = a.terms, b.terms
    out = []
    i = j = 0
    while i < len(ta) and j < len(tb):
        c = _cmp(ta[i].power, tb[j].power)
        if c > 0:
            out.append(ta[i])
            i += 1
        elif c < 0:
            out.append(tb[j])
            j += 1
        else:
            d = ta[i].digit + tb[j].digit
            if d:
                out.append(Term(ta[i].power, d))
            i += 1
            j += 1
    out.extend(ta[i:])
    out.extend(tb[j:])
    return GrossNumber._make(tuple(out))


def neg(a: Number) -> GrossNumber:
    a = as_gross(a)
    return GrossNumber._make(tuple(Term(p, -d) for p, d in a.terms))


def sub(a: Number, b: Number) -> GrossNumber:
    return add(a, neg(b))


def mul(a: Number, b: Number) -> GrossNumber:
    a, b = as_gross(a), as_gross(b)
    if a._finite is not None and b._finite is not None:
        return from_rational(a._finite * b._finite)
    if not a.terms or not b.terms:
        return ZERO
    acc: dict[GrossNumber, Fraction] = {}
    for pa, da in a.terms:
        for pb, db in b.terms:
            p = add(pa, pb)
            acc[p] = acc.get(p, Fraction(0)) + da * db
    return GrossNumber._make(_sorted_terms(acc))


def pow_nat(a: Number, n: int) -> GrossNumber:
    a = as_gross(a)
    if n < 0:
        raise ValueError("pow_nat needs a non-negative exponent")
    result, base = ONE, a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


class DivisionResult(NamedTuple):
    quotient: GrossNumber
    remainder: GrossNumber
    exact: bool
    # (quotient term, partial remainder after subtracting it) per step
    steps: tuple


def div(c: Number, b: Number, max_terms: int = DEFAULT_MAX_TERMS) -> DivisionResult:
    """Long division of ``c`` by ``b`` producing at most ``max_terms`` quotient terms.

    Each step divides the leading term of the running remainder by the
    leading term of ``b``; the remainder's leading power strictly drops, so
    the loop stops either at a zero remainder (``exact``) or at the budget.
    ``c == quotient * b + remainder`` holds exactly in both cases.
    """
    c, b = as_gross(c), as_gross(b)
    if not b.terms:
        raise DivisionByZero("division by zero")
    if not isinstance(max_terms, int) or max_terms < 1:
        raise ValueError("max_terms must be a positive integer")
    lead_power, lead_digit = b.terms[0]
    quotient, rem = ZERO, c
    steps = []
    while rem.terms and len(steps) < max_terms:
        rp, rd = rem.terms[0]
        t = GrossNumber._make((Term(sub(rp, lead_power), rd / lead_digit),))
        quotient = add(quotient, t)
        rem = sub(rem, mul(t, b))
        steps.append((t, rem))
    return DivisionResult(quotient, rem, not rem.terms, tuple(steps))


def exact_div(c: Number, b: Number, max_terms: int = DEFAULT_MAX_TERMS) -> GrossNumber:
    res = div(c, b, max_terms)
    if not res.exact:
        raise InexactDivision(
            f"division not exact after {max_terms} terms (remainder {res.remainder})"
        )
    return res.quotient


# -- classification -------------------------------------------------------


def classify(a: Number) -> NumberClass:
    a = as_gross(a)
    if not a.terms:
        return NumberClass.ZERO
    top = sign(a.terms[0].power)
    if top > 0:
        return NumberClass.INFINITE
    if top < 0:
        return NumberClass.INFINITESIMAL
    return NumberClass.FINITE_PURE if len(a.terms) == 1 else NumberClass.FINITE_MIXED


def is_integer(a: Number) -> bool:
    """Integer grossnumbers: integer finite part plus ``c*G**p`` terms with rational
    ``c`` and finite integer ``p >= 1`` (each ``G/q`` counts a set, hence is an integer)."""
    a = as_gross(a)
    for power, digit in a.terms:
        f = power._finite
        if f is None or f.denominator != 1 or f < 0:
            return False
        if f == 0 and digit.denominator != 1:
            return False
    return True


def parity(a: Number) -> Parity:
    a = as_gross(a)
    if not is_integer(a):
        raise NotInteger(f"{a} is not an integer grossnumber")
    return Parity.EVEN if a.finite_part() % 2 == 0 else Parity.ODD


def floor(a: Number) -> GrossNumber:
    """Integer part of a grossnumber whose infinite terms are integers."""
    a = as_gross(a)
    head, finite, tail = [], Fraction(0), ZERO
    for i, (power, digit) in enumerate(a.terms):
        s = sign(power)
        if s > 0:
            head.append(Term(power, digit))
        elif s == 0:
            finite = digit
        else:
            tail = GrossNumber._make(a.terms[i:])
            break
    infinite = GrossNumber._make(tuple(head))
    if not is_integer(infinite):
        raise NotInteger(f"cannot take the integer part of {a}")
    whole = finite.numerator // finite.denominator
    if finite.denominator == 1 and sign(tail) < 0:
        whole -= 1
    return add(infinite, whole)


# -- roots ----------------------------------------------------------------


def _int_root(n: int, k: int) -> Optional[int]:
    """Exact integer k-th root of n, or None."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = _int_root(-n, k)
        return None if r is None else -r
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def rational_root(c: Fraction, k: int) -> Fraction:
    num, den = _int_root(c.numerator, k), _int_root(c.denominator, k)
    if num is None or den is None:
        raise InexactRoot(f"the {k}-th root of {c} is not rational")
    return Fraction(num, den)


def nth_root(a: Number, j: int) -> GrossNumber:
    """``c**(1/j) * G**(p/j)`` for a single positive term ``c*G**p``."""
    a = as_gross(a)
    if not isinstance(j, int) or j < 1:
        raise ValueError("root index must be a positive integer")
    if not a.terms:
        return ZERO
    power, digit = a.terms[0]
    root = rational_root(digit, j)
    if len(a.terms) > 1:
        raise UnsupportedShape(f"nth_root needs a single-term number, got {a}")
    if digit < 0:
        raise UnsupportedShape("nth_root needs a positive number")
    return GrossNumber._make((Term(mul(power, Fraction(1, j)), root),))
