"""``grosscalc``: interactive and batch front end.

Lines are either ``let name = expr``, a bare expression, or a ``:command``.
Command arguments are separated by ``;``.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, TextIO

from . import core, extended, series, sets
from .core import DEFAULT_MAX_TERMS, GrossNumber
from .errors import GrossError
from .expr import evaluate, parse
from .formatting import format_value

HELP = {
    "let": "let NAME = EXPR        bind a variable for later lines",
    ":div": ":div A ; B [; MAXTERMS]   long division with every partial remainder",
    ":card": ":card SETEXPR          count a set built from N(k,n), {a,b}, |, &, \\",
    ":count": ":count linear|power ; k, n[, j] ; BOUND   count {g(i) <= BOUND}",
    ":sum": ":sum const|poly|geom ; PARAMS ; k=EXPR   closed-form sum of k items",
    ":concat": ":concat L1 ; L2        split a concatenation into a complete part and overflow",
    ":classify": ":classify EXPR         Zero, FinitePure, FiniteMixed, Infinite or Infinitesimal",
    ":parity": ":parity EXPR           Even or Odd for integer grossnumbers",
    ":cmp": ":cmp A ; B              Less, Equal, Greater or Incomparable",
    ":e": ":e N                   the e-type number (1 + 1/N)^N",
    ":assert": ":assert A ; B          fail unless A and B evaluate to the same value",
    ":set": ":set max_div_terms N | :set format exact|decimal:D",
    ":help": ":help                  this list",
    ":quit": ":quit                  leave the session",
}


class Quit(Exception):
    pass


@dataclass
class Settings:
    max_div_terms: int = DEFAULT_MAX_TERMS
    decimal_digits: Optional[int] = None  # None means exact output


def parse_format(text: str) -> Optional[int]:
    text = text.strip()
    if text == "exact":
        return None
    m = re.fullmatch(r"decimal:(\d+)", text)
    if not m or int(m.group(1)) < 1:
        raise ValueError(f"format must be 'exact' or 'decimal:D', got {text!r}")
    return int(m.group(1))


@dataclass
class Session:
    env: dict = field(default_factory=dict)
    settings: Settings = field(default_factory=Settings)

    def fmt(self, value) -> str:
        return format_value(value, self.settings.decimal_digits)

    def eval(self, text: str):
        return evaluate(parse(text.strip()), self.env, max_div_terms=self.settings.max_div_terms)

    def eval_gross(self, text: str) -> GrossNumber:
        value = self.eval(text)
        if not isinstance(value, GrossNumber):
            raise GrossError(f"{self.fmt(value)} is not a grossnumber")
        return value

    def eval_rational(self, text: str) -> Fraction:
        value = self.eval_gross(text)
        if not value.is_finite:
            raise GrossError(f"{self.fmt(value)} is not a finite rational")
        return value.as_fraction()

    def execute(self, line: str) -> list[str]:
        """Run one line and return the output lines; errors propagate."""
        line = line.strip()
        if not line or line.startswith("#"):
            return []
        m = re.fullmatch(r"let\s+([A-Za-z_][A-Za-z_0-9]*)\s*=\s*(.+)", line)
        if m:
            name = m.group(1)
            if name == "G":
                raise GrossError("G is reserved for grossone")
            value = self.eval(m.group(2))
            self.env = {**self.env, name: value}
            return [f"{name} = {self.fmt(value)}"]
        if line.startswith(":"):
            cmd, _, rest = line.partition(" ")
            handler = getattr(self, "cmd_" + cmd[1:], None)
            if handler is None:
                raise GrossError(f"unknown command {cmd}; try :help")
            return handler(rest.strip())
        return [self.fmt(self.eval(line))]

    # -- commands ----------------------------------------------------------

    def _args(self, rest: str, low: int, high: int) -> list[str]:
        args = [a.strip() for a in rest.split(";")] if rest.strip() else []
        if not low <= len(args) <= high:
            raise GrossError(f"expected {low}..{high} ';'-separated arguments, got {len(args)}")
        return args

    def cmd_div(self, rest):
        args = self._args(rest, 2, 3)
        c, b = self.eval_gross(args[0]), self.eval_gross(args[1])
        max_terms = int(args[2]) if len(args) == 3 else self.settings.max_div_terms
        res = core.div(c, b, max_terms)
        out = [f"R_{i} = {self.fmt(r)}" for i, (_, r) in enumerate(res.steps, 1)]
        out += [
            f"quotient = {self.fmt(res.quotient)}",
            f"remainder = {self.fmt(res.remainder)}",
            f"exact = {'true' if res.exact else 'false'}",
        ]
        return out

    def cmd_card(self, rest):
        return [self.fmt(sets.card(sets.parse_set(rest)))]

    def cmd_count(self, rest):
        kind, params, bound = self._args(rest, 3, 3)
        nums = [int(self.eval_rational(p)) for p in params.split(",")]
        if kind == "linear" and len(nums) == 2:
            form = sets.Linear(*nums)
        elif kind == "power" and len(nums) == 3:
            form = sets.Power(*nums)
        else:
            raise GrossError("use 'linear ; k, n ; BOUND' or 'power ; k, n, j ; BOUND'")
        return [self.fmt(sets.count_by_inverse(form, self.eval_gross(bound)))]

    def cmd_sum(self, rest):
        family, params, count = self._args(rest, 3, 3)
        m = re.fullmatch(r"k\s*=\s*(.+)", count)
        if not m:
            raise GrossError("the last :sum argument must be k=EXPR")
        k = self.eval_gross(m.group(1))
        values = [self.eval_rational(p) for p in params.split(",")]
        if family == "const" and len(values) == 1:
            result = series.sum_const(values[0], k)
        elif family == "poly":
            result = series.sum_poly(values, k)
        elif family == "geom" and len(values) == 1:
            result = series.sum_geometric(values[0], k)
        else:
            raise GrossError("families: const ; c | poly ; c0, c1, ... | geom ; r")
        return [self.fmt(result)]

    def cmd_concat(self, rest):
        l1, l2 = (self.eval_gross(a) for a in self._args(rest, 2, 2))
        first, leftover = series.concat(l1, l2)
        return [f"first = {self.fmt(first)}", f"leftover = {self.fmt(leftover)}"]

    def cmd_classify(self, rest):
        return [str(extended.classify_extended(self.eval(rest)))]

    def cmd_parity(self, rest):
        return [str(core.parity(self.eval_gross(rest)))]

    def cmd_cmp(self, rest):
        a, b = (self.eval(x) for x in self._args(rest, 2, 2))
        return [str(extended.cmp_extended(a, b))]

    def cmd_e(self, rest):
        return [self.fmt(series.e_approximant(self.eval_gross(rest)))]

    def cmd_assert(self, rest):
        a, b = (self.eval(x) for x in self._args(rest, 2, 2))
        if a != b:
            raise GrossError(f"assertion failed: {self.fmt(a)} != {self.fmt(b)}")
        return []

    def cmd_set(self, rest):
        key, _, value = rest.partition(" ")
        if key == "max_div_terms":
            n = int(value)
            if n < 1:
                raise GrossError("max_div_terms must be positive")
            self.settings.max_div_terms = n
        elif key == "format":
            self.settings.decimal_digits = parse_format(value)
        else:
            raise GrossError("settings: max_div_terms, format")
        return []

    def cmd_help(self, rest):
        return list(HELP.values())

    def cmd_quit(self, rest):
        raise Quit


def _run_line(session: Session, line: str, out: TextIO) -> Optional[str]:
    """Execute one line; return an error message instead of raising."""
    try:
        for text in session.execute(line):
            print(text, file=out)
    except Quit:
        raise
    except (GrossError, ArithmeticError, ValueError, TypeError) as exc:
        return str(exc) or type(exc).__name__
    return None


def run_repl(stdin: TextIO, stdout: TextIO, session: Optional[Session] = None, stderr=None) -> int:
    session = session or Session()
    stderr = stderr or sys.stderr
    interactive = stdin.isatty()
    while True:
        if interactive:
            stdout.write("> ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            return 0
        try:
            err = _run_line(session, line, stdout)
        except Quit:
            return 0
        if err:
            print(f"error: {err}", file=stderr)


def run_batch(lines, session: Session, stdout: TextIO, stderr: TextIO) -> int:
    """Run every line; exit status 1 if any failed, naming the first failing line."""
    first_bad = None
    for number, line in enumerate(lines, 1):
        try:
            err = _run_line(session, line, stdout)
        except Quit:
            break
        if err:
            print(f"line {number}: error: {err}", file=stderr)
            first_bad = first_bad or number
    if first_bad:
        print(f"first error at line {first_bad}", file=stderr)
        return 1
    return 0


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin, stdout, stderr = stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr
    ap = argparse.ArgumentParser(prog="grosscalc", description="Exact grossone calculator.")
    ap.add_argument("--eval", metavar="EXPR", help="evaluate one line and exit")
    ap.add_argument("--script", metavar="FILE", help="run a file of calculator lines")
    ap.add_argument("--max-div-terms", type=int, default=DEFAULT_MAX_TERMS, metavar="N")
    ap.add_argument("--format", default="exact", help="exact or decimal:D")
    args = ap.parse_args(argv)
    if args.max_div_terms < 1:
        ap.error("--max-div-terms must be positive")
    try:
        digits = parse_format(args.format)
    except ValueError as exc:
        ap.error(str(exc))
    session = Session(settings=Settings(args.max_div_terms, digits))
    if args.script is None and args.eval is None:
        return run_repl(stdin, stdout, session, stderr)
    status = 0
    if args.script is not None:
        try:
            with open(args.script, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            print(f"error: {exc}", file=stderr)
            return 2
        status = run_batch(lines, session, stdout, stderr)
    if args.eval is not None:
        status = max(status, run_batch([args.eval], session, stdout, stderr))
    return status


if __name__ == "__main__":
    sys.exit(main())
