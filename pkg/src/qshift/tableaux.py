"""Generalized shifted Young tableaux, amenable tableaux and shifted LR coefficients."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping

import numpy as np

from . import _kernels
from .errors import InternalNonStrictContent, ShapeMismatch
from .shapes import Cell, SkewShape, StrictPartition, cells_reading_order, make_skew, render_ascii
from .words import Letter, Word, parse_letter

Content = tuple  # (a_1, a_2, ...) with trailing zeros trimmed


@dataclass(frozen=True, eq=False)
class Tableau:
    shape: SkewShape
    entries: Mapping[Cell, Letter]

    @classmethod
    def from_reading_codes(cls, shape: SkewShape, codes) -> "Tableau":
        order = cells_reading_order(shape)
        return cls(shape, {c: Letter.from_code(int(x)) for c, x in zip(order, codes)})

    @cached_property
    def reading_codes(self) -> tuple[int, ...]:
        return tuple(self.entries[c].code for c in cells_reading_order(self.shape))

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.shape == other.shape and dict(self.entries) == dict(other.entries)

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self.entries.items()))))

    def __repr__(self):
        return f"Tableau({self.shape!r}, {' '.join(str(x) for x in row_word(self))})"


def _check_cover(t: Tableau) -> None:
    if set(t.entries) != set(t.shape.cells):
        raise ShapeMismatch("tableau entries do not cover exactly the shape's cells")


def is_valid_gsyt(t: Tableau) -> bool:
    _check_cover(t)
    e = t.entries
    for (r, c), x in e.items():
        right = e.get(Cell(r, c + 1))
        if right is not None:
            if right < x or (right == x and x.marked):
                return False
        below = e.get(Cell(r + 1, c))
        if below is not None:
            if below < x or (below == x and not x.marked):
                return False
    return True


def row_word(t: Tableau) -> Word:
    return tuple(t.entries[c] for c in cells_reading_order(t.shape))


def content(t: Tableau) -> Content:
    counts = Counter(x.value for x in t.entries.values())
    top = max(counts, default=0)
    return tuple(counts[v] for v in range(1, top + 1))


def enumerate_gsyt(shape: SkewShape, max_letter: int) -> Iterator[Tableau]:
    """Every GSYT with values ``<= max_letter``, lexicographic in reading order."""
    order = cells_reading_order(shape)
    index = {c: p for p, c in enumerate(order)}
    n = len(order)
    # neighbours filled before p in reading order: left in the row, below in the column
    left = [index.get(Cell(r, c - 1), -1) for r, c in order]
    below = [index.get(Cell(r + 1, c), -1) for r, c in order]
    top = 2 * max_letter
    codes = [0] * n

    def rec(p):
        if p == n:
            yield Tableau.from_reading_codes(shape, codes)
            return
        lo = 1
        if left[p] >= 0:
            lo = codes[left[p]]
        hi = top
        if below[p] >= 0:
            hi = codes[below[p]]
        for x in range(lo, hi + 1):
            if left[p] >= 0 and x == codes[left[p]] and x % 2 == 1:
                continue
            if below[p] >= 0 and x == codes[below[p]] and x % 2 == 0:
                continue
            codes[p] = x
            yield from rec(p + 1)

    yield from rec(0)


def staircase_cap(ncells: int) -> int:
    """Largest m with m(m+1)/2 <= ncells: no amenable content can use a larger value."""
    m = 0
    while (m + 1) * (m + 2) // 2 <= ncells:
        m += 1
    return m


def _neighbour_arrays(shape: SkewShape):
    order = cells_reading_order(shape)
    index = {c: p for p, c in enumerate(order)}
    right = np.array([index.get(Cell(r, c + 1), -1) for r, c in order], dtype=np.int64)
    above = np.array([index.get(Cell(r - 1, c), -1) for r, c in order], dtype=np.int64)
    return right, above


def count_amenable(shape: SkewShape, limit: int = 0) -> int:
    """Number of amenable fillings, stopping early at ``limit`` when positive."""
    right, above = _neighbour_arrays(shape)
    cap = staircase_cap(shape.ncells)
    return int(_kernels.search_amenable(right, above, cap, limit, _kernels.empty_out(len(right))))


def _amenable_codes(shape: SkewShape) -> np.ndarray:
    right, above = _neighbour_arrays(shape)
    n = len(right)
    cap = staircase_cap(n)
    total = _kernels.search_amenable(right, above, cap, 0, _kernels.empty_out(n))
    out = np.zeros((total, n), dtype=np.int64)
    _kernels.search_amenable(right, above, cap, 0, out)
    if total and n:
        out = out[np.lexsort(out.T[::-1])]
    return out


def enumerate_amenable(shape: SkewShape) -> Iterator[Tableau]:
    """Every amenable GSYT of ``shape``, lexicographic in reading order."""
    if shape.ncells == 0:
        yield Tableau(shape, {})
        return
    for row in _amenable_codes(shape):
        yield Tableau.from_reading_codes(shape, row)


def lr_coeff(outer, inner, nu) -> int:
    """f^outer_{inner, nu}: amenable tableaux of shape outer/inner with content nu."""
    shape = make_skew(outer, inner)
    nu = StrictPartition(nu)
    if nu.size != shape.ncells:
        return 0
    return sum(1 for t in enumerate_amenable(shape) if content(t) == tuple(nu))


def decompose(shape: SkewShape) -> list[tuple[StrictPartition, int]]:
    """All (nu, f) with f > 0 in the expansion of Q_shape, sorted by nu."""
    counts = Counter(content(t) for t in enumerate_amenable(shape))
    out = []
    for nu in sorted(counts):
        if any(a <= b for a, b in zip(nu, nu[1:])) or 0 in nu:
            raise InternalNonStrictContent(f"amenable filling of {shape!r} has content {nu}")
        out.append((StrictPartition(nu), counts[nu]))
    return out


def tableau_to_json(t: Tableau) -> dict:
    rows, skip = [], []
    for r in range(1, len(t.shape.outer) + 1):
        cells = sorted(c for c in t.entries if c.row == r)
        rows.append([str(t.entries[c]) for c in cells])
        skip.append(cells[0].col - 1 if cells else 0)
    while rows and not rows[-1]:
        rows.pop()
        skip.pop()
    return {
        "outer": list(t.shape.outer),
        "inner": list(t.shape.inner),
        "skip": skip,
        "rows": rows,
        "content": list(content(t)),
    }


def tableau_from_json(data: dict) -> Tableau:
    shape = make_skew(data["outer"], data.get("inner", []))
    entries = {}
    for r, (row, s) in enumerate(zip(data["rows"], data["skip"]), start=1):
        for offset, token in enumerate(row):
            entries[Cell(r, s + 1 + offset)] = parse_letter(token)
    t = Tableau(shape, entries)
    _check_cover(t)
    return t


def render_tableau(t: Tableau) -> str:
    return render_ascii(t.shape, {c: str(x) for c, x in t.entries.items()})
