"""Print every worked example the package reproduces, one block per topic."""

from fractions import Fraction

from grossone import G, GrossNumber, div, format_value, monomial
from grossone.expr import evaluate, evaluate_text, parse
from grossone.extended import classify_extended, cmp_extended, sub
from grossone.sets import FiniteSet, GridLevel, Positional, Progression, card, card_line, card_Rb
from grossone.series import concat, e_approximant, sum_const, sum_geometric


def show(label, value, digits=None):
    text = value if isinstance(value, str) else format_value(value, digits)
    print(f"  {label:<38} {text}")


def arithmetic():
    print("arithmetic")
    a = GrossNumber([("44.2", "16.5"), (12, -12), (0, 17)])
    b = GrossNumber([(3, "6.23"), (0, "10.1"), ("-4.1", 15)])
    show("A + B", a + b)
    a7 = GrossNumber([(18, 1), ("2.4", -5), (1, -3)])
    b7 = GrossNumber([(1, -1), (-3, "0.7")])
    show("B * A", b7 * a7)
    divisor = GrossNumber([(3, 5), (0, 7)])
    for c, terms in [(GrossNumber([(3, -10), (0, 16), (-3, 42)]), 20), (GrossNumber([(3, -10), (0, 16), (-3, 40)]), 3)]:
        res = div(c, divisor, terms)
        show(f"({format_value(c)}) / ({format_value(divisor)})", res.quotient)
        show("  remainder", res.remainder)


def sets():
    print("sets")
    show("|N(3,7) minus {10}|", card(Progression(3, 7) - FiniteSet([10])))
    show("|(N(4,5) & N(3,11)) | {3,4,5,69}|", card((Progression(4, 5) & Progression(3, 11)) | FiniteSet([3, 4, 5, 69])))
    show("points on [0,1), level 1", card_line(GridLevel(1)))
    show("points on [0,1), level 2", card_line(GridLevel(2)))
    show("points on [0,1), base-10 numerals", card_line(Positional(10)))
    show("10^(2G) vs G", str(cmp_extended(card_Rb(10).as_value(), G)))


def series():
    print("series")
    show("5G threes / 5G tens", sum_const(3, 5 * G) / sum_const(10, 5 * G))
    show("(3G+4) tens - 10G threes", sum_const(10, 3 * G + 4) - sum_const(3, 10 * G))
    show("(3G+2) tens / 10G threes, 5 digits", sum_const(10, 3 * G + 2) / sum_const(3, 10 * G), 5)
    total = sum_geometric(Fraction(1, 2), G)
    show("sum of 2^-i, i = 1..G", total)
    show("  minus 1 is", str(classify_extended(sub(total, 1))))
    show("concat(2G/5, 4G/5)", "first = {}, leftover = {}".format(*map(format_value, concat(2 * G / 5, 4 * G / 5))))
    show("(1 + 1/G)^G", e_approximant(G))


def evaluation():
    print("evaluation")
    show("5x^3 - x^2 + 10^61 at x = 3G^2", evaluate(parse("5x^3 - x^2 + 10^61"), {"x": monomial(3, 2)}))
    show("(-1)^n n^3 at n = G/2 - 1", evaluate(parse("(-1)^n * n^3"), {"n": G / 2 - 1}))
    show("((x+h)^2 - x^2)/h at x = 1, h = 1/G", evaluate(parse("((x+h)^2 - x^2)/h"), {"x": 1, "h": G**-1}))
    show("2 - (2 - 10^(-G))", evaluate_text("2 - (2 - 10^(-G))"))


if __name__ == "__main__":
    arithmetic()
    sets()
    series()
    evaluation()
