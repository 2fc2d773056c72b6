"""Strict partitions and shifted (skew) diagrams.

Cells are addressed as ``(row, col)`` with row 1 at the top.  Row ``i`` of the
shifted diagram of ``outer`` occupies columns ``i .. i + outer_i - 1``; the
skew shape removes the first ``inner_i`` of them.

In the Cartesian picture where the box ``B(x, y)`` has its center at
``(x, y)``, a cell corresponds to ``x = col`` and ``y = -row``.  So the
up-left neighbour ``B(x-1, y+1)`` is ``(row-1, col-1)`` and the box below,
``B(x, y-1)``, is ``(row+1, col)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .errors import MalformedToken, NonPositivePart, NotContained, NotStrictlyDecreasing


class StrictPartition(tuple):
    """A strictly decreasing tuple of positive integers (possibly empty)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p <= 0:
                raise NonPositivePart(f"part {p} is not positive in {parts}")
        for a, b in zip(parts, parts[1:]):
            if a <= b:
                raise NotStrictlyDecreasing(f"{parts} is not strictly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def parse_partition(text: str) -> StrictPartition:
    """Parse ``"7,4,2,1"`` or ``"7 4 2 1"``; the empty string is the empty partition."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    parts = []
    for tok in tokens:
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise MalformedToken(f"not an integer: {tok!r}")
        parts.append(int(tok))
    return StrictPartition(parts)


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class SkewShape:
    outer: StrictPartition
    inner: StrictPartition = field(default_factory=StrictPartition)

    def __post_init__(self):
        object.__setattr__(self, "outer", StrictPartition(self.outer))
        object.__setattr__(self, "inner", StrictPartition(self.inner))
        if len(self.inner) > len(self.outer) or any(
            m > l for m, l in zip(self.inner, self.outer)
        ):
            raise NotContained(f"{self.inner!r} is not contained in {self.outer!r}")

    @cached_property
    def row_intervals(self) -> tuple[tuple[int, int, int], ...]:
        """``(row, first_col, last_col)`` for every nonempty row, top to bottom."""
        out = []
        for i, lam in enumerate(self.outer, start=1):
            mu = self.inner[i - 1] if i <= len(self.inner) else 0
            if lam > mu:
                out.append((i, i + mu, i + lam - 1))
        return tuple(out)

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(
            Cell(r, c) for r, a, b in self.row_intervals for c in range(a, b + 1)
        )

    @property
    def ncells(self) -> int:
        return self.outer.size - self.inner.size

    @cached_property
    def class_key(self) -> tuple[Cell, ...]:
        """Sorted cells translated to min row 1, min col 1; equal iff translates."""
        return _normalized(self.cells)

    def __repr__(self) -> str:
        return f"{self.outer!r}/{self.inner!r}"


def make_skew(outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
    return SkewShape(StrictPartition(outer), StrictPartition(inner))


def cells_reading_order(shape: SkewShape) -> list[Cell]:
    """Bottom row first, each row left to right (the row-word order)."""
    return [
        Cell(r, c)
        for r, a, b in reversed(shape.row_intervals)
        for c in range(a, b + 1)
    ]


def _normalized(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    cells = list(cells)
    if not cells:
        return ()
    r0 = min(c.row for c in cells)
    c0 = min(c.col for c in cells)
    return tuple(sorted(Cell(r - r0 + 1, c - c0 + 1) for r, c in cells))


def canonicalize(shape: SkewShape) -> SkewShape:
    """Lexicographically smallest ``outer/inner`` whose cells translate onto ``shape``'s.

    The first and last rows of the result are nonempty, the inner partition
    is as far left as the shifted geometry allows, and interior empty rows
    (if any) get the smallest admissible common value.  Two shapes have the
    same canonical form exactly when their cell sets are translates.
    """
    key = shape.class_key
    if not key:
        return SkewShape(StrictPartition(), StrictPartition())
    nrows = key[-1].row
    spans: dict[int, list[int]] = {}
    for r, c in key:
        lo_hi = spans.setdefault(r, [c, c])
        lo_hi[0] = min(lo_hi[0], c)
        lo_hi[1] = max(lo_hi[1], c)
    # Smallest column shift keeping every row start at or right of the diagonal.
    shift = max(r - lo for r, (lo, _) in spans.items())
    outer = [0] * nrows
    inner = [0] * nrows
    for i in range(nrows, 0, -1):
        if i in spans:
            lo, hi = spans[i]
            outer[i - 1] = hi + shift - i + 1
            inner[i - 1] = lo + shift - i
        else:
            outer[i - 1] = inner[i - 1] = outer[i] + 1
    while inner and inner[-1] == 0:
        inner.pop()
    out = SkewShape(StrictPartition(outer), StrictPartition(inner))
    assert out.class_key == key, (shape, out)
    return out


def is_canonical(shape: SkewShape) -> bool:
    return canonicalize(shape) == shape


@dataclass(frozen=True)
class Diagonal:
    """Cells with a common ``col - row``, listed top-left to bottom-right."""

    offset: int
    cells: tuple[Cell, ...]

    @property
    def length(self) -> int:
        # l_s in the usual notation; the run has length + 1 cells
        return len(self.cells) - 1


def diagonals(shape: SkewShape) -> list[Diagonal]:
    groups: dict[int, list[Cell]] = {}
    for cell in shape.cells:
        groups.setdefault(cell.col - cell.row, []).append(cell)
    return [Diagonal(s, tuple(sorted(groups[s]))) for s in sorted(groups)]


@dataclass(frozen=True)
class Hook:
    """``p`` boxes down the first column, ``q`` boxes along the first row."""

    p: int
    q: int
    anchor: Cell

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"hook arms must be positive, got p={self.p}, q={self.q}")

    @property
    def cells(self) -> frozenset[Cell]:
        r, c = self.anchor
        return frozenset(
            [Cell(r + i, c) for i in range(self.p)] + [Cell(r, c + j) for j in range(self.q)]
        )


def as_hook(cells: Iterable[Cell]) -> Hook | None:
    """Return the hook whose cells are exactly ``cells``, or None."""
    cells = frozenset(cells)
    if not cells:
        return None
    top = min(c.row for c in cells)
    left = min(c.col for c in cells)
    p = sum(1 for c in cells if c.col == left)
    q = sum(1 for c in cells if c.row == top)
    hook = Hook(p, q, Cell(top, left))
    return hook if hook.cells == cells else None


def render_ascii(shape: SkewShape, entries: dict[Cell, str] | None = None) -> str:
    """One line per diagram row; ``.`` marks an absent position, ``[]`` a box.

    With ``entries`` the boxes show the given strings instead, padded to a
    common width with at least one separating space.
    """
    if not shape.row_intervals:
        return ""
    width = 2
    if entries:
        width = max(width, 1 + max(len(s) for s in entries.values()))
    absent = ".".ljust(width)
    lines = []
    rows = {r: (a, b) for r, a, b in shape.row_intervals}
    for r in range(1, shape.row_intervals[-1][0] + 1):
        if r not in rows:
            lines.append("")
            continue
        a, b = rows[r]
        parts = [absent] * (a - 1)
        for c in range(a, b + 1):
            parts.append("[]" if entries is None else entries[Cell(r, c)].ljust(width))
        lines.append("".join(parts).rstrip())
    return "\n".join(lines) + "\n"


def strict_partitions(max_size: int, min_size: int = 0) -> Iterator[StrictPartition]:
    """All strict partitions with ``min_size <= size <= max_size``, in lex order."""

    def rec(limit: int, budget: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for part in range(min(limit, budget), 0, -1):
            for rest in rec(part - 1, budget - part):
                yield (part,) + rest

    found = sorted(p for p in rec(max_size, max_size) if sum(p) >= min_size)
    for parts in found:
        yield StrictPartition(parts)


def strict_partitions_of(n: int) -> list[StrictPartition]:
    return list(strict_partitions(n, n))


def sub_partitions(outer: StrictPartition) -> Iterator[StrictPartition]:
    """Every strict partition contained in ``outer`` (including the empty one)."""

    def rec(i: int, limit: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if i >= len(outer):
            return
        for part in range(min(limit, outer[i]), 0, -1):
            for rest in rec(i + 1, part - 1):
                yield (part,) + rest

    for parts in rec(0, outer[0] if outer else 0):
        yield StrictPartition(parts)


def skew_pairs(max_outer_size: int) -> Iterator[SkewShape]:
    """Every nonempty ``outer/inner`` with ``0 < |outer| <= max_outer_size``."""
    for outer in strict_partitions(max_outer_size, 1):
        for inner in sub_partitions(outer):
            if inner != outer:
                yield SkewShape(outer, inner)


def skew_classes(
    max_cells: int,
    max_width: int | None = None,
    min_cells: int = 1,
    connected: bool = False,
) -> Iterator[SkewShape]:
    """Canonical shapes with ``min_cells..max_cells`` cells and ``outer[0] <= max_width``.

    ``max_width`` defaults to ``max_cells``, which already covers every
    connected shape of that size; disconnected shapes are included as long as
    their canonical outer partition fits the width.  With ``connected=True``
    only edge-connected shapes are produced.
    """
    width = max_cells if max_width is None else max_width

    def rec(outer, inner, budget):
        if outer and inner[-1] == 0 and max_cells - budget >= min_cells:
            yield outer, inner
        lam_lim = outer[-1] - 1 if outer else width
        for lam in range(lam_lim, 0, -1):
            # inner parts stop at the first zero
            if inner and inner[-1] == 0:
                top = 0
            elif inner:
                top = min(lam, inner[-1] - 1)
            else:
                top = lam - 1  # a canonical first row is nonempty
            bottom = max(0, lam - budget)
            if connected:
                if outer and lam < inner[-1]:
                    break
                top = min(top, lam - 1)
            for mu in range(top, bottom - 1, -1):
                yield from rec(outer + (lam,), inner + (mu,), budget - lam + mu)

    for outer, inner in rec((), (), max_cells):
        shape = SkewShape(outer, tuple(x for x in inner if x > 0))
        if is_canonical(shape):
            yield shape
