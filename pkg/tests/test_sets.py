from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grossone.core import GROSSONE as G, GrossNumber, monomial
from grossone.errors import InexactRoot, ParseError, UnsupportedForm, UnsupportedLevel, UnsupportedSet
from grossone.extended import Ordering, PowAtom, cmp_extended
from grossone.formatting import format_value
from grossone.sets import (
    FiniteSet,
    GridLevel,
    Linear,
    Positional,
    Power,
    Progression,
    card,
    card_integers,
    card_line,
    card_progression,
    card_Q1,
    card_Q2,
    card_Rb,
    card_tuples,
    count_by_inverse,
    intersect_progressions,
    normalize,
    parse_set,
)
from oracles import brute_intersection


def test_card_progression():
    assert card_progression(Progression(1, 1)) == G
    assert card_progression(Progression(1, 2)) == G / 2
    assert card_progression(Progression(3, 3)) == G / 3


def test_progression_validation():
    with pytest.raises(ValueError):
        Progression(0, 3)
    with pytest.raises(ValueError):
        Progression(4, 3)


def test_intersections():
    assert intersect_progressions(Progression(4, 5), Progression(3, 11)) == Progression(14, 55)
    assert intersect_progressions(Progression(1, 2), Progression(2, 2)) is None
    assert intersect_progressions(Progression(2, 4), Progression(3, 6)) is None
    assert brute_intersection(2, 4, 3, 6, 200) == []


def test_card_examples():
    a = Progression(3, 7)
    assert card(a - FiniteSet([10])) == G / 7 - 1
    b = (Progression(4, 5) & Progression(3, 11)) | FiniteSet([3, 4, 5, 69])
    assert card(b) == G / 55 + 3
    assert card(Progression(1, 2) | Progression(2, 2)) == G


def test_card_mixed():
    # odds minus multiples of 3, plus 6 (not odd) and 9 (odd multiple of 3)
    e = (Progression(1, 2) - Progression(3, 3)) | FiniteSet([6, 9])
    assert card(e) == G / 3 + 2
    assert card(FiniteSet([1, 2, 3]) - Progression(2, 2)) == 2
    assert card(FiniteSet([])) == 0


def test_normalize_gives_disjoint_progressions():
    nf = normalize(Progression(1, 2) | Progression(1, 3))
    assert nf.step == 6
    assert nf.progressions() == [Progression(1, 6), Progression(3, 6), Progression(4, 6), Progression(5, 6)]


def test_unsupported_large_step():
    primes = [1009, 1013, 1019]
    e = Progression(1, primes[0]) | Progression(1, primes[1]) | Progression(1, primes[2])
    with pytest.raises(UnsupportedSet):
        card(e)


def test_count_by_inverse():
    for k, n in [(1, 1), (3, 7), (5, 5)]:
        assert count_by_inverse(Linear(k, n), G) == G / n
    assert count_by_inverse(Power(0, 1, 2), G**2) == G
    with pytest.raises(InexactRoot):
        count_by_inverse(Power(1, 3, 2), G)
    with pytest.raises(UnsupportedForm):
        count_by_inverse("squares", G)


def test_count_by_inverse_finite_bound():
    # brute force: 3, 10, 17, ... <= 100
    assert count_by_inverse(Linear(3, 7), 100) == len(range(3, 101, 7))
    assert count_by_inverse(Power(0, 1, 3), 64) == 4


def test_named_cardinalities():
    assert [card_tuples(m) for m in (1, 2, 3)] == [G, G**2, G**3]
    assert card_integers() == 2 * G + 1
    assert card_Q1() == 4 * G**2 + 2 * G
    assert card_Q2() == 2 * G**2 + 1


def test_radix_numerals():
    assert card_Rb(10) == PowAtom(Fraction(10), 2 * G)
    assert format_value(card_Rb(2)) == "2^(2G)"
    assert cmp_extended(card_Rb(2).as_value(), G) is Ordering.GREATER


def test_card_line():
    assert card_line(GridLevel(1)) == 2 * G**2
    assert card_line(GridLevel(2)) == 2 * G**3
    assert format_value(card_line(Positional(10))) == "2G*10^(G)"
    with pytest.raises(UnsupportedLevel):
        card_line(GridLevel(3))


def test_parse_set():
    e = parse_set("(N(4,5) & N(3,11)) | {3,4,5,69}")
    assert e == (Progression(4, 5) & Progression(3, 11)) | FiniteSet([3, 4, 5, 69])
    assert parse_set(r"N(1,2) \ {1}") == Progression(1, 2) - FiniteSet([1])
    assert parse_set("N(1,2) | N(1,3) & N(2,3)") == Progression(1, 2) | (Progression(1, 3) & Progression(2, 3))
    for bad in ["N(0,2)", "{1,1}", "N(1,2", "N(1,2) +", "{-1}"]:
        with pytest.raises(ParseError):
            parse_set(bad)


def test_partition_of_naturals():
    for n in range(1, 101):
        cards = [card_progression(Progression(k, n)) for k in range(1, n + 1)]
        assert sum(cards, GrossNumber()) == G
        assert cards[0] * n == G


progressions = st.integers(1, 50).flatmap(lambda n: st.integers(1, n).map(lambda k: Progression(k, n)))


@given(progressions, progressions)
def test_crt_against_brute_force(p1, p2):
    r = intersect_progressions(p1, p2)
    period = p1.n * p2.n
    common = brute_intersection(p1.k, p1.n, p2.k, p2.n, period)
    if r is None:
        assert common == []
    else:
        assert common and r.k == common[0]
        assert r.first(len(common)) == common[: len(common)]


simple_sets = st.recursive(
    progressions | st.frozensets(st.integers(1, 60), max_size=4).map(FiniteSet),
    lambda inner: st.tuples(inner, inner, st.sampled_from("|&-")).map(
        lambda t: t[0] | t[1] if t[2] == "|" else (t[0] & t[1] if t[2] == "&" else t[0] - t[1])
    ),
    max_leaves=4,
)


def _members(e, limit):
    if isinstance(e, Progression):
        return {m for m in range(1, limit + 1) if m in e}
    if isinstance(e, FiniteSet):
        return set(e.elements)
    left, right = _members(e.left, limit), _members(e.right, limit)
    return {"Union_": left | right, "Intersection": left & right, "Difference": left - right}[type(e).__name__]


@given(simple_sets)
def test_normal_form_membership(e):
    nf = normalize(e)
    limit = 60 + 2 * nf.step
    assert {m for m in range(1, limit + 1) if m in nf} == _members(e, limit)


@given(simple_sets, st.integers(1, 10**6))
def test_finite_correction(e, a):
    nf = normalize(e)
    assert card(e | FiniteSet([a])) == card(e) + (0 if a in nf else 1)


@given(st.integers(1, 30), st.data())
def test_monotone_equal_step(n, data):
    ks = data.draw(st.sets(st.integers(1, n), min_size=1))
    sub = data.draw(st.sets(st.sampled_from(sorted(ks)), min_size=1))

    def union(keys):
        items = [Progression(k, n) for k in sorted(keys)]
        e = items[0]
        for p in items[1:]:
            e = e | p
        return e

    assert card(union(sub)) <= card(union(ks))
    assert card(union(ks)) == monomial(Fraction(len(ks), n), 1)
