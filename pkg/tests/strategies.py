"""Hypothesis strategies for partitions and skew shapes."""
from hypothesis import assume
from hypothesis import strategies as st

from qshift.shapes import SkewShape


@st.composite
def strict_partitions(draw, max_part=7, max_size=None):
    parts = draw(st.sets(st.integers(1, max_part), max_size=max_part))
    out = sorted(parts, reverse=True)
    if max_size is not None:
        while sum(out) > max_size:
            out.pop(0)
    return tuple(out)


@st.composite
def skew_shapes(draw, max_part=7, max_cells=None):
    outer = draw(strict_partitions(max_part))
    inner = []
    for i, lam in enumerate(outer):
        hi = lam if not inner else min(lam, inner[-1] - 1)
        if hi < 1:
            break
        mu = draw(st.integers(0, hi))
        if mu == 0:
            break
        inner.append(mu)
    shape = SkewShape(outer, inner)
    if max_cells is not None:
        assume(shape.ncells <= max_cells)
    return shape
