"""The layer-peeling filling that produces one amenable tableau of any shape.

At step k the layer ``P_k`` consists of the cells of the residual diagram
whose up-left neighbour ``(row-1, col-1)`` is no longer present.  A cell of
``P_k`` gets ``k'`` when the cell directly below it, ``(row+1, col)``, is also
in ``P_k``, and ``k`` otherwise.  The layer is then removed and the process
repeats until nothing is left.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotAPath
from .shapes import Cell, SkewShape
from .tableaux import Tableau
from .words import Letter


@dataclass(frozen=True)
class Layer:
    k: int
    cells: frozenset[Cell]
    components: tuple[frozenset[Cell], ...]


@dataclass(frozen=True)
class PathEndpoints:
    first: Cell
    last: Cell


def _neighbours(cell: Cell):
    r, c = cell
    return (Cell(r - 1, c), Cell(r + 1, c), Cell(r, c - 1), Cell(r, c + 1))


def components(cells: Iterable[Cell]) -> tuple[frozenset[Cell], ...]:
    """Edge-connected components (union-find), ordered by their smallest cell."""
    cells = set(cells)
    parent = {c: c for c in cells}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for c in cells:
        for d in (Cell(c.row + 1, c.col), Cell(c.row, c.col + 1)):
            if d in cells:
                a, b = find(c), find(d)
                if a != b:
                    parent[a] = b
    groups: dict[Cell, set[Cell]] = {}
    for c in cells:
        groups.setdefault(find(c), set()).add(c)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def compute_layers(shape: SkewShape) -> list[Layer]:
    residual = set(shape.cells)
    layers = []
    k = 1
    while residual:
        layer = frozenset(c for c in residual if Cell(c.row - 1, c.col - 1) not in residual)
        layers.append(Layer(k, layer, components(layer)))
        residual -= layer
        k += 1
    return layers


def canonical_filling(shape: SkewShape) -> Tableau:
    entries = {}
    for layer in compute_layers(shape):
        for cell in layer.cells:
            below = Cell(cell.row + 1, cell.col)
            entries[cell] = Letter(layer.k, below in layer.cells)
    return Tableau(shape, entries)


def layer_has_disconnection(shape: SkewShape) -> bool:
    return any(len(layer.components) > 1 for layer in compute_layers(shape))


def path_endpoints(component: Iterable[Cell]) -> PathEndpoints:
    """First box: nothing above it or to its right.  Last box: nothing left or below."""
    comp = frozenset(component)
    if not comp:
        raise NotAPath("empty component")
    degree = {c: sum(d in comp for d in _neighbours(c)) for c in comp}
    edges = sum(degree.values()) // 2
    if len(components(comp)) != 1 or edges != len(comp) - 1 or max(degree.values()) > 2:
        raise NotAPath(f"cells do not form a path: {sorted(comp)}")
    firsts = [c for c in comp if Cell(c.row - 1, c.col) not in comp and Cell(c.row, c.col + 1) not in comp]
    lasts = [c for c in comp if Cell(c.row, c.col - 1) not in comp and Cell(c.row + 1, c.col) not in comp]
    if len(firsts) != 1 or len(lasts) != 1:
        raise NotAPath(f"path has no unique first/last box: {sorted(comp)}")
    return PathEndpoints(firsts[0], lasts[0])
