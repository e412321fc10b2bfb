"""Eventually periodic digit words.

A Word is a preperiod plus a repeating period; an empty period encodes a
finite word padded by zeros forever.  Words are canonicalized on
construction so that equality is structural: the period is primitive,
an all-zero period collapses to the empty one, and the preperiod is
minimal (its last digit never duplicates the aligned last period digit,
and finite words carry no trailing zeros).

Digits are plain integers.  Greedy expansion digits live in
[0, floor(beta)]; carry intermediates may leave that range (including
negative digits), which the same representation covers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator


def _primitive(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for p in range(1, n + 1):
        if n % p == 0 and period == period[: p] * (n // p):
            return period[: p]
    return period


@dataclass(frozen=True)
class Word:
    pre: tuple[int, ...]
    period: tuple[int, ...]

    def __init__(self, pre: Iterable[int] = (), period: Iterable[int] = ()):
        pre = list(int(d) for d in pre)
        period = list(int(d) for d in period)
        if period and all(d == 0 for d in period):
            period = []
        if period:
            period = list(_primitive(tuple(period)))
            while pre and pre[-1] == period[-1]:
                pre.pop()
                period = [period[-1]] + period[:-1]
        else:
            while pre and pre[-1] == 0:
                pre.pop()
        object.__setattr__(self, "pre", tuple(pre))
        object.__setattr__(self, "period", tuple(period))

    # -- basic queries ---------------------------------------------------

    def digit(self, i: int) -> int:
        """0-based digit access into the infinite sequence."""
        if i < len(self.pre):
            return self.pre[i]
        if not self.period:
            return 0
        return self.period[(i - len(self.pre)) % len(self.period)]

    def digits(self, n: int) -> list[int]:
        return [self.digit(i) for i in range(n)]

    def is_finite(self) -> bool:
        """True when only finitely many digits are nonzero."""
        return not self.period

    def is_zero(self) -> bool:
        return not self.pre and not self.period

    def max_abs_digit(self) -> int:
        return max((abs(d) for d in self.pre + self.period), default=0)

    def has_negative_digit(self) -> bool:
        return any(d < 0 for d in self.pre + self.period)

    def fits_alphabet(self, bound: int) -> bool:
        return all(0 <= d <= bound for d in self.pre + self.period)

    def period_len(self) -> int:
        return max(1, len(self.period))

    def shift(self, n: int) -> "Word":
        """Drop the first n digits."""
        if n <= len(self.pre):
            return Word(self.pre[n:], self.period)
        if not self.period:
            return Word((), ())
        k = (n - len(self.pre)) % len(self.period)
        return Word((), self.period[k:] + self.period[: k])

    def prepend(self, head: Iterable[int]) -> "Word":
        return Word(tuple(head) + self.pre, self.period)

    def __iter__(self) -> Iterator[int]:
        i = 0
        while True:
            yield self.digit(i)
            i += 1


ZERO_WORD = Word()


def compare_window(a: Word, b: Word) -> int:
    """Number of leading digits that decides equality of a and b."""
    return max(len(a.pre), len(b.pre)) + 2 * math.lcm(a.period_len(), b.period_len())


def lex_cmp(a: Word, b: Word) -> int:
    """-1, 0, +1 for lexicographic order on the infinite digit sequences."""
    for i in range(compare_window(a, b)):
        da, db = a.digit(i), b.digit(i)
        if da != db:
            return -1 if da < db else 1
    return 0


def subtract(a: Word, b: Word) -> Word:
    """Digitwise difference a - b, again eventually periodic."""
    pre = max(len(a.pre), len(b.pre))
    per = math.lcm(a.period_len(), b.period_len())
    return Word(
        (a.digit(i) - b.digit(i) for i in range(pre)),
        (a.digit(pre + i) - b.digit(pre + i) for i in range(per)),
    )


# -- the shared text format -------------------------------------------------
#
# Digits space separated, the period parenthesized:  "2 2 1 0 0 2" is a
# finite word, "1 0 0 0 0 0 2 0 (1)" repeats the digit 1 forever.

_WORD_RE = re.compile(r"^\s*((?:-?\d+\s+)*-?\d+)?\s*(?:\(\s*((?:-?\d+\s*)+)\))?\s*$")


def format_word(w: Word) -> str:
    head = " ".join(str(d) for d in w.pre)
    if w.period:
        tail = "(" + " ".join(str(d) for d in w.period) + ")"
        return f"{head} {tail}" if head else tail
    return head if head else "0"


def parse_word(text: str) -> Word:
    m = _WORD_RE.match(text)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise ValueError(f"cannot parse digit word {text!r}")
    pre = tuple(int(t) for t in m.group(1).split()) if m.group(1) else ()
    period = tuple(int(t) for t in m.group(2).split()) if m.group(2) else ()
    return Word(pre, period)
