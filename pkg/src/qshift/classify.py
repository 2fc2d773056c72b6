"""Which skew shapes have a Q-function equal to a single Q_nu.

Two independent verdicts are provided.  ``is_strange_theorem`` matches the
shape, up to translation, against four explicit families of diagrams.
``is_strange_oracle`` counts amenable fillings by exhaustive search: a shape
is strange exactly when it has one amenable filling.  ``sweep`` compares the
two over every small shape.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .shapes import SkewShape, StrictPartition, canonicalize, skew_pairs
from .tableaux import count_amenable


@dataclass(frozen=True)
class Straight:
    """Any straight shape (empty inner partition)."""

    name = "Straight"


@dataclass(frozen=True)
class StaircaseSkew:
    """Outer ``{m, m-1, ..., 1}``, inner with ``0 < len(inner) < m - 1`` parts."""

    m: int
    mu: StrictPartition
    name = "StaircaseSkew"

    def shape(self) -> SkewShape:
        return SkewShape(range(self.m, 0, -1), self.mu)


@dataclass(frozen=True)
class StaircaseInner:
    """Outer ``{p+q+r, ..., p}``, inner ``{q, ..., 1}``; ``p, q >= 1``, ``r >= 0``."""

    p: int
    q: int
    r: int
    name = "StaircaseInner"

    def shape(self) -> SkewShape:
        p, q, r = self.p, self.q, self.r
        return SkewShape(range(p + q + r, p - 1, -1), range(q, 0, -1))


@dataclass(frozen=True)
class ParallelStrip:
    """Outer ``{p+q, ..., p+q-r}``, inner ``{q, ..., q-r}``; ``p > 0``, ``q > r >= 0``.

    Every row is the same ``p`` columns, so the diagram is a ``(r+1) x p``
    rectangle and ``q`` only moves it sideways.
    """

    p: int
    q: int
    r: int
    name = "ParallelStrip"

    def shape(self) -> SkewShape:
        p, q, r = self.p, self.q, self.r
        return SkewShape(range(p + q, p + q - r - 1, -1), [x for x in range(q, q - r - 1, -1) if x > 0])


StrangeFamily = Union[Straight, StaircaseSkew, StaircaseInner, ParallelStrip]


def _strict_subsets(limit: int, count: int, caps, total: int) -> list[tuple[int, ...]]:
    """Strict partitions of ``total`` with ``count`` parts, part i at most ``caps[i]``."""
    out = []

    def rec(i, prev, acc, left):
        if i == count:
            if left == 0:
                out.append(tuple(acc))
            return
        rest = count - i - 1
        for v in range(min(prev - 1, caps[i], left), 0, -1):
            # the remaining parts are distinct and below v
            if v * (rest + 1) - rest * (rest + 1) // 2 < left:
                break
            if left - v < rest * (rest + 1) // 2:
                continue
            rec(i + 1, v, acc + [v], left - v)

    rec(0, limit + 1, [], total)
    return out


def _family_members(ncells: int):
    """Families 2-4 with exactly ``ncells`` boxes, in matching order.

    Staircase-skew members whose inner partition empties the top row are
    translates of a smaller staircase (or of a straight shape), so only
    inner partitions with ``mu_i <= m - i`` are generated.
    """
    m = 3
    while m <= ncells:
        total = m * (m + 1) // 2
        removed = total - ncells
        if removed > 0:
            caps = [m - i for i in range(1, m + 1)]
            for length in range(1, m - 1):
                for mu in _strict_subsets(m - 1, length, caps, removed):
                    yield StaircaseSkew(m, StrictPartition(mu))
        m += 1
    for q in range(1, ncells + 1):
        for r in range(0, ncells):
            for p in range(1, ncells + 1):
                lam = sum(range(p, p + q + r + 1))
                if lam - q * (q + 1) // 2 == ncells:
                    yield StaircaseInner(p, q, r)
    for r in range(0, ncells):
        if ncells % (r + 1) == 0:
            # every q > r gives a horizontal translate; q = r + 1 stands for all
            yield ParallelStrip(ncells // (r + 1), r + 1, r)


@lru_cache(maxsize=None)
def _family_table(ncells: int) -> dict:
    table = {}
    for fam in _family_members(ncells):
        table.setdefault(fam.shape().class_key, fam)
    return table


def match_family(shape: SkewShape) -> StrangeFamily | None:
    """First family (Straight, StaircaseSkew, StaircaseInner, ParallelStrip) matching ``shape`` up to translation."""
    canon = canonicalize(shape)
    if not canon.inner:
        return Straight()
    return _family_table(canon.ncells).get(canon.class_key)


def is_strange_theorem(shape: SkewShape) -> bool:
    return match_family(shape) is not None


def is_strange_oracle(shape: SkewShape, exact: bool = False) -> tuple[bool, int]:
    """(exactly one amenable filling, count); the count stops at 2 unless ``exact``."""
    count = count_amenable(shape, 0 if exact else 2)
    return count == 1, count


@dataclass
class SweepReport:
    max_outer_size: int
    pairs_tested: int
    shapes_tested: int
    strange_by_theorem: int
    strange_by_oracle: int
    mismatches: list[tuple[tuple[int, ...], tuple[int, ...], bool, int]] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json(self, with_elapsed: bool = False) -> dict:
        out = {
            "max_outer_size": self.max_outer_size,
            "pairs_tested": self.pairs_tested,
            "shapes_tested": self.shapes_tested,
            "strange_by_theorem": self.strange_by_theorem,
            "strange_by_oracle": self.strange_by_oracle,
            "mismatches": [
                {"outer": list(o), "inner": list(i), "theorem": t, "oracle_count": c}
                for o, i, t, c in self.mismatches
            ],
        }
        if with_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _judge(shape: SkewShape) -> tuple[tuple[int, ...], tuple[int, ...], bool, int]:
    strange, count = is_strange_oracle(shape)
    return tuple(shape.outer), tuple(shape.inner), is_strange_theorem(shape), count


def sweep(max_outer_size: int, parallelism: int = 1) -> SweepReport:
    """Compare the family classifier with the filling count on every shape class."""
    if max_outer_size < 1:
        raise ValueError("max_outer_size must be at least 1")
    start = time.perf_counter()
    pairs = 0
    classes = set()
    for shape in skew_pairs(max_outer_size):
        pairs += 1
        classes.add(canonicalize(shape))
    shapes = sorted(classes, key=lambda s: (s.ncells, tuple(s.outer), tuple(s.inner)))
    if parallelism > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            verdicts = list(pool.map(_judge, shapes, chunksize=32))
    else:
        verdicts = [_judge(s) for s in shapes]
    verdicts.sort()
    report = SweepReport(
        max_outer_size=max_outer_size,
        pairs_tested=pairs,
        shapes_tested=len(shapes),
        strange_by_theorem=sum(1 for v in verdicts if v[2]),
        strange_by_oracle=sum(1 for v in verdicts if v[3] == 1),
    )
    report.mismatches = [v for v in verdicts if v[2] != (v[3] == 1)]
    report.elapsed = time.perf_counter() - start
    return report
