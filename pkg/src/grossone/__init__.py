"""Exact arithmetic with grossone, the infinite unit G.

Quick tour::

    >>> from grossone import G, div, parse, evaluate
    >>> str(16 * G**2 - 3 + G**-1)
    '16G^2 - 3 + G^-1'
    >>> str(evaluate(parse("(-1)^n * n^3"), {"n": G / 2 - 1}))
    '-0.125G^3 + 0.75G^2 - 1.5G + 1'
"""

from .core import (
    GROSSONE,
    ONE,
    ZERO,
    DivisionResult,
    GrossNumber,
    NumberClass,
    Ordering,
    Parity,
    Term,
    add,
    canonicalize,
    classify,
    cmp,
    div,
    exact_div,
    floor,
    from_rational,
    is_integer,
    monomial,
    mul,
    neg,
    nth_root,
    parity,
    pow_nat,
    sign,
    sub,
)
from .errors import *  # noqa: F401,F403
from .expr import evaluate, evaluate_text, parse, parse_roundtrip
from .extended import ExtendedValue, PowAtom, SymbolicPower, classify_extended, cmp_extended
from .formatting import format_value

G = GROSSONE
