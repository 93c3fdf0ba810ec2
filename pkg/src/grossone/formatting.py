"""Text rendering of grossnumbers and extended values.

Exact mode output is canonical: it parses back to the same value.

* terms by decreasing power, joined with ``" + "`` / ``" - "``
* terminating digits print as minimal decimals (``16.5``), others as
  ``p/q`` for the finite part and ``pG^k/q`` next to a power of ``G``
* ``G^1`` prints ``G``; a unit digit is dropped before a finite power
  (``-G^19``) but kept before a parenthesized non-finite one (``1G^(G^-1)``)
* power atoms print ``b^(exponent)``, joined to coefficients with ``*``

Decimal mode rounds each digit (half-up) to a number of significant
digits.  It is for reading only; rounded output need not parse back to the
same value.
"""

from __future__ import annotations

import decimal
from fractions import Fraction
from typing import Optional

from .core import GrossNumber
from .extended import ExtendedValue, PowAtom, SymbolicPower


def _terminating_scale(den: int) -> Optional[int]:
    """Smallest k with den | 10**k, or None when den has other prime factors."""
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    return max(twos, fives) if den == 1 else None


def decimal_text(x: Fraction) -> Optional[str]:
    """Exact minimal decimal for a terminating fraction, else None."""
    k = _terminating_scale(x.denominator)
    if k is None:
        return None
    sign = "-" if x < 0 else ""
    digits = str(abs(x.numerator) * 10**k // x.denominator)
    if k == 0:
        return sign + digits
    digits = digits.rjust(k + 1, "0")
    whole, frac = digits[:-k], digits[-k:].rstrip("0")
    return sign + whole + ("." + frac if frac else "")


def rounded_text(x: Fraction, digits: int) -> str:
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_UP)
    d = ctx.divide(decimal.Decimal(x.numerator), decimal.Decimal(x.denominator))
    text = format(d.normalize(ctx), "f")
    return "0" if text in ("0", "-0") else text


def rational_text(x: Fraction, digits: Optional[int] = None) -> str:
    if digits is not None:
        return rounded_text(x, digits)
    dec = decimal_text(x)
    return dec if dec is not None else f"{x.numerator}/{x.denominator}"


def _power_text(power: GrossNumber) -> tuple[str, bool]:
    """Rendered ``G^power`` and whether the power is finite."""
    f = power._finite
    if f is not None:
        if f == 1:
            return "G", True
        dec = decimal_text(f)
        if dec is not None:
            return "G^" + dec, True
        return f"G^({f.numerator}/{f.denominator})", True
    return "G^(" + format_value(power) + ")", False


def _term_body(power: GrossNumber, mag: Fraction, digits: Optional[int]) -> str:
    if not power.terms:
        return rational_text(mag, digits)
    gtext, finite = _power_text(power)
    if digits is None and _terminating_scale(mag.denominator) is None:
        num = "" if mag.numerator == 1 and finite else str(mag.numerator)
        return f"{num}{gtext}/{mag.denominator}"
    dtext = rational_text(mag, digits)
    if dtext == "1" and finite:
        dtext = ""
    return dtext + gtext


def _join(parts: list[tuple[bool, str]]) -> str:
    """parts: (negative, body) pairs in display order."""
    if not parts:
        return "0"
    out = []
    for i, (negative, body) in enumerate(parts):
        if i == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _gross_parts(g: GrossNumber, digits: Optional[int]) -> list[tuple[bool, str]]:
    return [(d < 0, _term_body(p, abs(d), digits)) for p, d in g.terms]


def _atom_text(a: PowAtom) -> str:
    if a.base.denominator == 1 or decimal_text(a.base) is not None:
        base = decimal_text(a.base)
    else:
        base = f"({a.base.numerator}/{a.base.denominator})"
    return f"{base}^({format_value(a.exponent)})"


def _product_part(coeff: GrossNumber, atoms, digits) -> tuple[bool, str]:
    atoms_text = "*".join(_atom_text(a) for a in atoms)
    if len(coeff.terms) != 1:
        return False, "(" + format_value(coeff, digits) + ")*" + atoms_text
    (negative, body), = _gross_parts(coeff, digits)
    if body == "1":
        return negative, atoms_text
    return negative, body + "*" + atoms_text


def record_text(g: GrossNumber) -> str:
    """Positional record with every digit and power spelled out: ``1G^0 1G^-1``."""
    if not g.terms:
        return "0"
    out = []
    for p, d in g.terms:
        dtext = rational_text(d)
        if d < 0:
            dtext = f"({dtext})"
        f = p._finite
        if f is not None:
            ptext = rational_text(f)
            if "/" in ptext:
                ptext = f"({ptext})"
        else:
            ptext = "(" + format_value(p) + ")"
        out.append(f"{dtext}G^{ptext}")
    return " ".join(out)


def format_value(v, digits: Optional[int] = None) -> str:
    """Render a value; ``digits`` switches to decimal mode with that many significant digits."""
    if digits is not None and digits < 1:
        raise ValueError("decimal mode needs at least one significant digit")
    if isinstance(v, SymbolicPower):
        exp = "G" if v.exponent == GrossNumber([(1, 1)]) else "(" + format_value(v.exponent) + ")"
        return f"({record_text(v.base)})^{exp}"
    if isinstance(v, PowAtom):
        v = v.as_value()
    if isinstance(v, ExtendedValue):
        parts = []
        for atoms, coeff in v.terms:
            if atoms:
                parts.append(_product_part(coeff, atoms, digits))
            else:
                parts.extend(_gross_parts(coeff, digits))
        return _join(parts)
    if isinstance(v, (int, Fraction)):
        v = GrossNumber([(0, v)])
    return _join(_gross_parts(v, digits))
