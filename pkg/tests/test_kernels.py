import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qshift import _kernels
from qshift.qpoly import _states
from qshift.shapes import skew_classes
from qshift.tableaux import _neighbour_arrays, staircase_cap
from qshift.words import Letter, is_amenable, is_k_amenable
from strategies import skew_shapes

codes = st.lists(st.integers(1, 8), max_size=14)


@given(codes, st.integers(2, 5))
def test_k_amenable_kernel_matches_words_module(ws, k):
    w = np.array(ws, dtype=np.int64)
    word = [Letter.from_code(c) for c in ws]
    expect = is_k_amenable(word, k)
    assert _kernels.k_amenable_codes(w, len(ws), k) == expect
    assert _kernels.py_func(_kernels.k_amenable_codes)(w, len(ws), k) == expect


@given(codes)
def test_amenable_kernel_matches_words_module(ws):
    w = np.array(ws, dtype=np.int64)
    assert _kernels.amenable_codes(w, len(ws)) == is_amenable([Letter.from_code(c) for c in ws])


@given(skew_shapes(max_part=5, max_cells=8))
def test_search_compiled_and_interpreted_agree(shape):
    right, above = _neighbour_arrays(shape)
    n = len(right)
    cap = staircase_cap(n)
    fast = _kernels.search_amenable
    slow = _kernels.py_func(_kernels.search_amenable)
    total = fast(right, above, cap, 0, _kernels.empty_out(n))
    assert slow(right, above, cap, 0, _kernels.empty_out(n)) == total
    a = np.zeros((total, n), dtype=np.int64)
    b = np.zeros((total, n), dtype=np.int64)
    fast(right, above, cap, 0, a)
    slow(right, above, cap, 0, b)
    assert np.array_equal(a, b)
    assert fast(right, above, cap, 1, _kernels.empty_out(n)) == min(total, 1)


def test_strip_kernels_compiled_and_interpreted_agree():
    from qshift.qpoly import _monomial_counts

    for shape in skew_classes(6, max_width=6):
        states = np.array(_states(shape), dtype=np.int64)
        sizes = states.sum(axis=1) - sum(shape.inner)
        ptr, src, wgt = _kernels.strip_transitions(states, sizes)
        p2, s2, w2 = _kernels.py_func(_kernels.strip_transitions)(states, sizes)
        assert np.array_equal(ptr, p2) and np.array_equal(src, s2) and np.array_equal(wgt, w2)
        dist = np.zeros(len(states), dtype=np.int64)
        nvars = 3
        counts = _monomial_counts(nvars, shape.ncells)
        args = (sizes, ptr, src, wgt, dist, 0, len(states) - 1, nvars, counts)
        fast = _kernels.strip_dp(*args, np.ones(1, dtype=np.int64))
        obj = _kernels.py_func(_kernels.strip_dp)(
            sizes, ptr, src, wgt.astype(object), dist, 0, len(states) - 1, nvars, counts, np.ones(1, dtype=object)
        )
        assert [int(x) for x in fast] == [int(x) for x in obj]


def test_empty_search():
    empty = np.zeros(0, dtype=np.int64)
    assert _kernels.search_amenable(empty, empty, 0, 0, _kernels.empty_out(0)) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["sweep", "--max-size", "7", "--json"],
        ["expand", "--outer", "4,2,1", "--inner", "1", "--vars", "3", "--json"],
        ["decompose", "--outer", "6,4,2", "--inner", "3,1", "--json"],
    ],
)
def test_pure_python_fallback_gives_identical_output(argv):
    cmd = [sys.executable, "-m", "qshift", *argv]
    fast = subprocess.run(cmd, capture_output=True, check=True, env={**os.environ, "QSHIFT_DISABLE_NUMBA": "0"})
    slow = subprocess.run(cmd, capture_output=True, check=True, env={**os.environ, "QSHIFT_DISABLE_NUMBA": "1"})
    assert fast.stdout == slow.stdout


def test_fallback_flag_is_honoured():
    code = "from qshift import _kernels; print(_kernels.USE_NUMBA)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True,
                         env={**os.environ, "QSHIFT_DISABLE_NUMBA": "1"}).stdout
    assert out.strip() == "False"
