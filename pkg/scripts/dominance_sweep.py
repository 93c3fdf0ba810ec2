"""How large must G be before ordinary numbers agree with the symbolic order?

For random pairs of numerals with integer powers, substitute G = 10^k for
k = 1..max_exp and record the smallest k from which the numeric sign of a - b
matches cmp(a, b) for every larger k tried.  Prints a histogram of that k.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass, fields
from fractions import Fraction

from grossone.core import GrossNumber, cmp


@dataclass
class SweepConfig:
    pairs: int = 2000
    max_terms: int = 4
    max_power: int = 3
    digit_range: int = 60
    max_exp: int = 12
    seed: int = 0


def rand_numeral(rng, cfg):
    terms = []
    for _ in range(rng.randint(1, cfg.max_terms)):
        digit = Fraction(rng.randint(-cfg.digit_range, cfg.digit_range) or 1, rng.choice([1, 2, 4, 5]))
        terms.append((rng.randint(-cfg.max_power, cfg.max_power), digit))
    return GrossNumber(terms)


def at(g, x):
    return sum((d * Fraction(x) ** int(p.as_fraction()) for p, d in g.terms), Fraction(0))


def settle_point(a, b, cfg):
    target = cmp(a, b).value
    signs = []
    for k in range(1, cfg.max_exp + 1):
        d = at(a, 10**k) - at(b, 10**k)
        signs.append((d > 0) - (d < 0))
    first = None
    for k, s in enumerate(signs, 1):
        if s != target:
            first = None
        elif first is None:
            first = k
    return first


def run(cfg):
    rng = random.Random(cfg.seed)
    hist = Counter()
    for _ in range(cfg.pairs):
        a, b = rand_numeral(rng, cfg), rand_numeral(rng, cfg)
        hist[settle_point(a, b, cfg)] += 1
    return hist


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(SweepConfig):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    hist = run(cfg)
    print(f"{cfg}")
    print("settles at G = 10^k   pairs")
    for k in sorted(hist, key=lambda v: (v is None, v or 0)):
        label = "never" if k is None else f"k = {k}"
        print(f"  {label:<18} {hist[k]}")


if __name__ == "__main__":
    main()
