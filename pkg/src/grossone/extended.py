"""Values outside the positional form: power atoms such as ``2^(-G)``.

An :class:`ExtendedValue` is a sum of products ``coefficient * atom * atom ...``
where each coefficient is a grossnumber and each :class:`PowAtom` is
``base ** exponent`` with rational ``base > 1``.  Whenever a value ends up
with no atoms it collapses back to a plain :class:`GrossNumber`, so callers
only ever see an ``ExtendedValue`` when one is really needed.

The module-level ``add``/``sub``/``mul``/``divide``/``power`` functions accept
either kind of value and are what the expression evaluator uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import core
from .core import (
    DEFAULT_MAX_TERMS,
    ONE,
    ZERO,
    GrossNumber,
    NumberClass,
    Ordering,
    Parity,
    Term,
)
from .errors import DisplayOnly, DivisionByZero, InexactDivision, NotInteger, UnsupportedPow


@dataclass(frozen=True)
class PowAtom:
    base: Fraction
    exponent: GrossNumber

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(self, "exponent", core.as_gross(self.exponent))
        if self.base <= 1:
            raise ValueError(f"power atom base must exceed 1, got {self.base}")

    @classmethod
    def make(cls, base, exponent) -> "PowAtom":
        """Build ``base**exponent`` for any positive base != 1, flipping bases below 1."""
        base = Fraction(base)
        exponent = core.as_gross(exponent)
        if base <= 0 or base == 1:
            raise ValueError(f"no power atom for base {base}")
        if base < 1:
            return cls(1 / base, core.neg(exponent))
        return cls(base, exponent)

    def as_value(self) -> "Value":
        return _build([(ONE, (self,))])

    def __str__(self) -> str:
        from .formatting import format_value

        return format_value(self.as_value())


@dataclass(frozen=True)
class SymbolicPower:
    """Unevaluated ``base ** exponent`` kept only for display (e-type numbers)."""

    base: GrossNumber
    exponent: GrossNumber

    def __str__(self) -> str:
        from .formatting import format_value

        return format_value(self)


class ExtendedValue:
    __slots__ = ("terms",)

    def __init__(self, terms: tuple):
        # terms: ((atoms, coefficient), ...) canonical, at least one with atoms
        self.terms: tuple[tuple[tuple[PowAtom, ...], GrossNumber], ...] = terms

    def pure_part(self) -> GrossNumber:
        for atoms, coeff in self.terms:
            if not atoms:
                return coeff
        return ZERO

    def atom_terms(self) -> list:
        return [(atoms, coeff) for atoms, coeff in self.terms if atoms]

    def __eq__(self, other):
        if isinstance(other, ExtendedValue):
            return self.terms == other.terms
        if isinstance(other, (GrossNumber, int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return divide(self, other)

    def __rtruediv__(self, other):
        return divide(other, self)

    def __neg__(self):
        return neg(self)

    def __repr__(self):
        return f"ExtendedValue({self})"

    def __str__(self):
        from .formatting import format_value

        return format_value(self)


Value = Union[GrossNumber, ExtendedValue]


def _atom_key(atoms) -> tuple:
    return tuple(a.base for a in atoms)


def _normalize_atoms(coeff: GrossNumber, atoms) -> tuple:
    merged: dict[Fraction, GrossNumber] = {}
    for a in atoms:
        merged[a.base] = core.add(merged.get(a.base, ZERO), a.exponent)
    kept = []
    for base, exp in sorted(merged.items()):
        f = exp._finite
        if f is not None and f.denominator == 1:
            # integer finite exponents fold into the coefficient
            coeff = core.mul(coeff, base ** int(f))
        else:
            kept.append(PowAtom(base, exp))
    return coeff, tuple(kept)


def _build(items) -> Value:
    acc: dict[tuple, GrossNumber] = {}
    for coeff, atoms in items:
        coeff, atoms = _normalize_atoms(coeff, atoms)
        if coeff:
            acc[atoms] = core.add(acc.get(atoms, ZERO), coeff)
    terms = [(atoms, c) for atoms, c in acc.items() if c]
    if not any(atoms for atoms, _ in terms):
        return terms[0][1] if terms else ZERO
    terms.sort(key=_display_rank)
    return ExtendedValue(tuple(terms))


def _display_rank(term):
    atoms, _ = term
    if not atoms:
        return (0, ())
    return (-core.sign(atoms[0].exponent), _atom_key(atoms))


def lift(v) -> list:
    """Sum-of-products items of any value."""
    if isinstance(v, ExtendedValue):
        return [(coeff, atoms) for atoms, coeff in v.terms]
    if isinstance(v, SymbolicPower):
        raise DisplayOnly("e-type records are display-only and take no further arithmetic")
    if isinstance(v, PowAtom):
        return [(ONE, (v,))]
    g = core.as_gross(v)
    return [(g, ())] if g else []


def add(a, b) -> Value:
    return _build(lift(a) + lift(b))


def neg(a) -> Value:
    return _build([(core.neg(c), atoms) for c, atoms in lift(a)])


def sub(a, b) -> Value:
    return add(a, neg(b))


def mul(a, b) -> Value:
    return _build(
        [(core.mul(ca, cb), aa + ab) for ca, aa in lift(a) for cb, ab in lift(b)]
    )


def _monomial_inverse(items) -> list:
    (coeff, atoms), = items
    if len(coeff.terms) != 1:
        raise InexactDivision("can only divide by a single product of atoms")
    (p, d), = coeff.terms
    inv = GrossNumber._make((Term(core.neg(p), 1 / d),))
    return [(inv, tuple(PowAtom(a.base, core.neg(a.exponent)) for a in atoms))]


def divide(a, b, max_terms: int = DEFAULT_MAX_TERMS, strict: bool = True) -> Value:
    ia, ib = lift(a), lift(b)
    if not ib:
        raise DivisionByZero("division by zero")
    if len(ib) == 1 and ib[0][1]:
        return _build(
            [(core.mul(ca, cb), aa + ab) for ca, aa in ia for cb, ab in _monomial_inverse(ib)]
        )
    if any(atoms for _, atoms in ib):
        raise InexactDivision("cannot divide by a sum involving power atoms")
    divisor = ib[0][0]
    out = []
    for coeff, atoms in ia:
        res = core.div(coeff, divisor, max_terms)
        if strict and not res.exact:
            raise InexactDivision(
                f"division not exact after {max_terms} terms (remainder {res.remainder})"
            )
        out.append((res.quotient, atoms))
    return _build(out)


def power(base, exponent, max_terms: int = DEFAULT_MAX_TERMS) -> Union[Value, SymbolicPower]:
    """``base ** exponent`` under the grossone rules.

    Finite integer exponents use repeated multiplication.  ``G^0 = 1``,
    ``1^E = 1`` and ``0^E = 0`` for positive ``E``.  A single term
    ``c*G^p`` raised to a non-finite integer exponent ``E`` becomes
    ``G^(p*E)`` times the atom ``c^E``; ``(-1)^E`` is decided by parity.
    ``(1 + infinitesimal)^E`` with infinite ``E`` is returned as a
    display-only :class:`SymbolicPower`.
    """
    if isinstance(exponent, (ExtendedValue, SymbolicPower, PowAtom)):
        raise UnsupportedPow("exponents must be grossnumbers")
    e = core.as_gross(exponent)
    if not e:
        return ONE
    f = e._finite
    if isinstance(base, (ExtendedValue, PowAtom)):
        if f is None or f.denominator != 1:
            raise UnsupportedPow("power atoms only take finite integer exponents")
        n = int(f)
        result: Value = ONE
        for _ in range(abs(n)):
            result = mul(result, base)
        return result if n >= 0 else divide(ONE, result, max_terms)
    if isinstance(base, SymbolicPower):
        raise DisplayOnly("e-type records are display-only and take no further arithmetic")
    b = core.as_gross(base)
    if not b:
        if core.sign(e) > 0:
            return ZERO
        raise DivisionByZero("zero raised to a non-positive power")
    if f is not None and f.denominator == 1:
        n = int(f)
        if n >= 0:
            return core.pow_nat(b, n)
        return divide(ONE, core.pow_nat(b, -n), max_terms)
    if len(b.terms) == 1:
        p, c = b.terms[0]
        if f is not None:
            # rational exponent a/q: c^(a/q) must be rational
            digit = core.rational_root(c ** f.numerator, f.denominator)
            return core.monomial(digit, core.mul(p, f))
        if c == 1:
            return core.monomial(1, core.mul(p, e))
        if c == -1 and not p:
            try:
                par = core.parity(e)
            except NotInteger:
                raise UnsupportedPow(f"(-1)^E needs an integer exponent, got {e}") from None
            return ONE if par is Parity.EVEN else core.from_rational(-1)
        if c < 0:
            raise UnsupportedPow("negative bases only take finite or parity-decidable exponents")
        if not core.is_integer(e):
            raise UnsupportedPow(f"non-finite exponent {e} must be an integer grossnumber")
        return _build([(core.monomial(1, core.mul(p, e)), (PowAtom.make(c, e),))])
    if f is None and core.sign(e) > 0 and core.classify(b) is NumberClass.FINITE_MIXED:
        return SymbolicPower(b, e)
    raise UnsupportedPow(f"cannot raise {b} to the power {e}")


# -- order and classification ---------------------------------------------


def _atom_growth(atoms) -> int:
    """+1 if every atom grows infinitely, -1 if every atom shrinks infinitely, else 0."""
    signs = set()
    for a in atoms:
        if a.exponent.is_finite:
            return 0
        signs.add(core.sign(a.exponent))
    return signs.pop() if len(signs) == 1 else 0


def _dominance_sign(v: Value):
    """Sign of ``v`` when decidable by atom dominance, else None.

    An atom ``b^E`` with infinite positive ``E`` outgrows every grossnumber;
    one with infinite negative ``E`` is below every nonzero grossnumber.
    Coefficients must have a finite leading power for either rule to apply.
    """
    if isinstance(v, GrossNumber):
        return core.sign(v)
    big, small = [], []
    for atoms, coeff in v.atom_terms():
        if not coeff.terms[0].power.is_finite:
            return None
        g = _atom_growth(atoms)
        if g > 0:
            big.append(coeff)
        elif g < 0:
            small.append(coeff)
        else:
            return None
    if len(big) == 1:
        return core.sign(big[0])
    if big:
        return None
    pure = v.pure_part()
    if pure:
        return core.sign(pure)
    if len(small) == 1:
        return core.sign(small[0])
    return None


def cmp_extended(a, b) -> Ordering:
    if isinstance(a, SymbolicPower) or isinstance(b, SymbolicPower):
        return Ordering.INCOMPARABLE
    s = _dominance_sign(sub(a, b))
    return Ordering.INCOMPARABLE if s is None else Ordering.of(s)


def classify_extended(v) -> NumberClass:
    if isinstance(v, SymbolicPower):
        raise DisplayOnly("e-type records carry no classification")
    if not isinstance(v, ExtendedValue):
        return core.classify(core.as_gross(v))
    if _dominance_sign(v) is None:
        raise UnsupportedPow(f"cannot classify {v}")
    if any(_atom_growth(atoms) > 0 for atoms, _ in v.atom_terms()):
        return NumberClass.INFINITE
    pure = v.pure_part()
    if not pure:
        return NumberClass.INFINITESIMAL
    cls = core.classify(pure)
    return NumberClass.FINITE_MIXED if cls is NumberClass.FINITE_PURE else cls
