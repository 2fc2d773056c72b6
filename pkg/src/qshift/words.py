"""Marked words, the counting statistics m_i(j), and amenability.

Letters are ordered 1' < 1 < 2' < 2 < ...  (a trailing apostrophe marks a
letter).  Internally a letter is often handled through its integer code
``2*v - 1`` (marked) or ``2*v`` (unmarked), which respects that order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, NamedTuple, Sequence

from .errors import IndexOutOfRange, MalformedToken


@total_ordering
@dataclass(frozen=True)
class Letter:
    value: int
    marked: bool = False

    def __post_init__(self):
        if self.value < 1:
            raise MalformedToken(f"letter value must be positive, got {self.value}")

    @property
    def code(self) -> int:
        return 2 * self.value - (1 if self.marked else 0)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls((code + 1) // 2, code % 2 == 1)

    def __lt__(self, other: "Letter") -> bool:
        return self.code < other.code

    def __str__(self) -> str:
        return f"{self.value}'" if self.marked else str(self.value)

    def __repr__(self) -> str:
        return f"Letter({self})"


Word = tuple  # a tuple of Letter, w_1 first

_TOKEN = re.compile(r"(\d+)(')?")


def parse_letter(token: str) -> Letter:
    m = _TOKEN.fullmatch(token)
    if not m or int(m.group(1)) < 1:
        raise MalformedToken(f"not a letter: {token!r}")
    return Letter(int(m.group(1)), m.group(2) is not None)


def parse_word(text: str) -> Word:
    """``"2 2' 3"`` -> (2, 2', 3)."""
    return tuple(parse_letter(tok) for tok in text.split())


def format_word(w: Iterable[Letter]) -> str:
    return " ".join(str(x) for x in w)


def word_codes(w: Iterable[Letter]) -> list[int]:
    return [x.code for x in w]


def count_profile(w: Sequence[Letter], i: int) -> list[int]:
    """The table ``[m_i(0), m_i(1), ..., m_i(2n)]``.

    For ``j <= n`` it counts unmarked ``i`` among the last ``j`` letters; past
    ``n`` it keeps adding marked ``i'`` found among the first ``j - n`` letters.
    """
    n = len(w)
    prof = [0] * (2 * n + 1)
    for j in range(1, n + 1):
        x = w[n - j]
        prof[j] = prof[j - 1] + (x.value == i and not x.marked)
    for j in range(n + 1, 2 * n + 1):
        x = w[j - n - 1]
        prof[j] = prof[j - 1] + (x.value == i and x.marked)
    return prof


def m_count(w: Sequence[Letter], i: int, j: int) -> int:
    if not 0 <= j <= 2 * len(w):
        raise IndexOutOfRange(f"j={j} outside 0..{2 * len(w)}")
    return count_profile(w, i)[j]


def restrict(w: Sequence[Letter], k: int) -> Word:
    """Keep only letters of value ``k`` or ``k - 1`` (marked or not)."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    return tuple(x for x in w if x.value in (k, k - 1))


class AmenabilityFailure(NamedTuple):
    k: int
    clause: int
    j: int | None  # the index from the clause, None for clauses 3 and 4

    def __str__(self) -> str:
        where = "" if self.j is None else f", j={self.j}"
        return f"k={self.k}, clause {self.clause}{where}"


def k_amenability_failure(w: Sequence[Letter], k: int) -> AmenabilityFailure | None:
    """First violated clause of k-amenability, or None if ``w`` is k-amenable."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    n = len(w)
    hi = count_profile(w, k)
    lo = count_profile(w, k - 1)
    for j in range(n):
        if hi[j] == lo[j]:
            x = w[n - j - 1]
            if x.value == k:
                return AmenabilityFailure(k, 1, j)
    for j in range(n, 2 * n):
        if hi[j] == lo[j]:
            x = w[j - n]
            if (x.value == k and x.marked) or (x.value == k - 1 and not x.marked):
                return AmenabilityFailure(k, 2, j)
    for clause, v in ((3, k), (4, k - 1)):
        first = next((x for x in w if x.value == v), None)
        if first is not None and first.marked:
            return AmenabilityFailure(k, clause, None)
    return None


def is_k_amenable(w: Sequence[Letter], k: int) -> bool:
    return k_amenability_failure(w, k) is None


def amenability_failure(w: Sequence[Letter]) -> AmenabilityFailure | None:
    top = max((x.value for x in w), default=0)
    for k in range(2, top + 2):
        fail = k_amenability_failure(w, k)
        if fail is not None:
            return fail
    return None


def is_amenable(w: Sequence[Letter]) -> bool:
    # k beyond max value + 1 leaves every clause vacuous
    return amenability_failure(w) is None


def is_amenable_via_restriction(w: Sequence[Letter]) -> bool:
    top = max((x.value for x in w), default=0)
    for k in range(2, top + 2):
        sub = restrict(w, k)
        if sub and not is_k_amenable(sub, k):
            return False
    return True
