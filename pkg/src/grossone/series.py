"""Sequence lengths and closed-form sums with an explicit number of items.

A sequence can have at most G members (its index set is a subset of the
naturals).  Series, by contrast, are not built by sequential adding, so the
item count ``k`` may be any non-negative integer grossnumber; sums are
always obtained from closed forms, never by iteration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import core, extended
from .core import GROSSONE, ONE, ZERO, GrossNumber
from .errors import DegreeTooHigh, RatioOne
from .extended import SymbolicPower, Value


@dataclass(frozen=True)
class SeqDescriptor:
    length: GrossNumber
    label: str = ""

    def __post_init__(self):
        if not validate_length(self.length):
            raise ValueError(f"invalid sequence length {self.length}")


def validate_length(length) -> bool:
    """A sequence length is an integer between 0 and G inclusive."""
    length = core.as_gross(length)
    return core.is_integer(length) and core.sign(length) >= 0 and length <= GROSSONE


def is_complete(length) -> bool:
    length = core.as_gross(length)
    if not validate_length(length):
        raise ValueError(f"invalid sequence length {length}")
    return length == GROSSONE


def concat(l1, l2) -> tuple[GrossNumber, GrossNumber]:
    """Lengths of the sequence formed by appending two sequences, and of the overflow.

    The first part is at most complete; whatever does not fit forms a
    second sequence.
    """
    l1, l2 = core.as_gross(l1), core.as_gross(l2)
    for length in (l1, l2):
        if not validate_length(length):
            raise ValueError(f"invalid sequence length {length}")
    total = core.add(l1, l2)
    first = total if total <= GROSSONE else GROSSONE
    return first, core.sub(total, first)


def _item_count(k) -> GrossNumber:
    k = core.as_gross(k)
    if not core.is_integer(k) or core.sign(k) < 0:
        raise ValueError(f"number of items must be a non-negative integer, got {k}")
    return k


def sum_const(c, k) -> GrossNumber:
    return core.mul(Fraction(c), _item_count(k))


# power sums 1^d + ... + k^d as polynomials in k, lowest degree first
_FAULHABER = (
    (0, 1),
    (0, Fraction(1, 2), Fraction(1, 2)),
    (0, Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)),
    (0, 0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)),
)


def sum_poly(coeffs: Sequence, k) -> GrossNumber:
    """``sum_{i=1..k} (c0 + c1*i + c2*i^2 + c3*i^3)``."""
    k = _item_count(k)
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) > len(_FAULHABER):
        raise DegreeTooHigh(f"degree {len(coeffs) - 1} exceeds 3")
    powers = [core.pow_nat(k, e) for e in range(5)]
    total = ZERO
    for c, poly in zip(coeffs, _FAULHABER):
        for e, a in enumerate(poly):
            if a:
                total = core.add(total, core.mul(c * a, powers[e]))
    return total


def sum_geometric(r, k) -> Value:
    """``sum_{i=1..k} r^i = r (1 - r^k) / (1 - r)``; ``r^k`` stays symbolic for infinite ``k``."""
    r = Fraction(r)
    k = _item_count(k)
    if r == 1:
        raise RatioOne("geometric sum with ratio 1; use sum_const")
    rk = extended.power(core.from_rational(r), k)
    return extended.mul(extended.sub(ONE, rk), r / (1 - r))


def e_approximant(n) -> Union[GrossNumber, SymbolicPower]:
    """``(1 + 1/n)^n``: a rational for finite ``n``, a display-only record otherwise."""
    n = core.as_gross(n)
    if core.sign(n) <= 0:
        raise ValueError("n must be positive")
    base = core.add(ONE, core.exact_div(ONE, n))
    if n.is_finite:
        f = n.as_fraction()
        if f.denominator != 1:
            raise ValueError("finite n must be an integer")
        return core.pow_nat(base, int(f))
    return SymbolicPower(base, n)
