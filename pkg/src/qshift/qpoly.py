"""Homogeneous polynomials with nonnegative integer coefficients, and Q-function expansions.

A polynomial of degree ``d`` in ``n`` variables is stored as a dense
coefficient vector over a fixed monomial basis.  The basis order is the one
produced by adding variables one at a time: monomials in ``n`` variables are
grouped by the exponent of the last variable (0, 1, ..., d), each group
listing the ``n - 1`` variable monomials of the remaining degree in their own
order.  With that order, appending a variable to a polynomial is a
concatenation of blocks, which is what ``expand_q`` exploits.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Mapping

import numpy as np

from . import _kernels
from .errors import DegreeMismatch, VarCountMismatch
from .shapes import SkewShape, make_skew
from .tableaux import decompose

_INT64_SAFE = 2**62


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int) -> np.ndarray:
    """Exponent vectors of all degree-``degree`` monomials, shape ``(M, nvars)``."""
    if nvars == 0:
        return np.zeros((1 if degree == 0 else 0, 0), dtype=np.int64)
    blocks = []
    for s in range(degree + 1):
        sub = monomial_basis(nvars - 1, degree - s)
        col = np.full((sub.shape[0], 1), s, dtype=np.int64)
        blocks.append(np.hstack([sub, col]))
    out = np.vstack(blocks)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _basis_index(nvars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {tuple(row): i for i, row in enumerate(monomial_basis(nvars, degree).tolist())}


@lru_cache(maxsize=None)
def _swap_permutation(nvars: int, degree: int, i: int) -> np.ndarray:
    basis = monomial_basis(nvars, degree)
    swapped = basis.copy()
    swapped[:, [i, i + 1]] = swapped[:, [i + 1, i]]
    index = _basis_index(nvars, degree)
    return np.array([index[tuple(row)] for row in swapped.tolist()], dtype=np.int64)


class QPolynomial:
    """Homogeneous polynomial in ``x_1..x_nvars`` with integer coefficients."""

    __slots__ = ("nvars", "degree", "coefs")

    def __init__(self, nvars: int, degree: int, coefs):
        self.nvars = nvars
        self.degree = degree
        self.coefs = np.asarray(coefs)
        if self.coefs.shape != (monomial_basis(nvars, degree).shape[0],):
            raise ValueError("coefficient vector does not match the monomial basis")

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "QPolynomial":
        return cls(nvars, degree, np.zeros(monomial_basis(nvars, degree).shape[0], dtype=np.int64))

    @classmethod
    def from_terms(cls, nvars: int, terms: Mapping[tuple[int, ...], int]) -> "QPolynomial":
        degrees = {sum(e) for e in terms}
        if len(degrees) > 1:
            raise DegreeMismatch(f"terms of several degrees: {sorted(degrees)}")
        degree = degrees.pop() if degrees else 0
        index = _basis_index(nvars, degree)
        big = any(abs(c) >= _INT64_SAFE for c in terms.values())
        coefs = np.zeros(len(index), dtype=object if big else np.int64)
        for exp, c in terms.items():
            if len(exp) != nvars:
                raise VarCountMismatch(f"exponent {exp} has {len(exp)} entries, expected {nvars}")
            coefs[index[tuple(exp)]] += c
        return cls(nvars, degree, coefs)

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        basis = monomial_basis(self.nvars, self.degree)
        nz = np.flatnonzero(self.coefs)
        return {tuple(e): int(c) for e, c in zip(basis[nz].tolist(), self.coefs[nz].tolist())}

    def is_zero(self) -> bool:
        return not np.any(self.coefs)

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, c: int):
        return scale(self, c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return equals(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"QPolynomial({format_poly(self)})"


def _compatible(a: QPolynomial, b: QPolynomial) -> None:
    if a.nvars != b.nvars:
        raise VarCountMismatch(f"{a.nvars} vs {b.nvars} variables")
    if a.degree != b.degree and not (a.is_zero() or b.is_zero()):
        raise DegreeMismatch(f"degree {a.degree} vs {b.degree}")


def _safe_dtype(*bounds: int):
    return np.int64 if max(bounds, default=0) < _INT64_SAFE else object


def _max_abs(p: QPolynomial) -> int:
    return int(np.max(np.abs(p.coefs))) if p.coefs.size else 0


def add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    _compatible(a, b)
    if a.degree != b.degree:
        return b if a.is_zero() else a
    dtype = _safe_dtype(_max_abs(a) + _max_abs(b))
    return QPolynomial(a.nvars, a.degree, a.coefs.astype(dtype) + b.coefs.astype(dtype))


def scale(a: QPolynomial, c: int) -> QPolynomial:
    dtype = _safe_dtype(_max_abs(a) * abs(c))
    return QPolynomial(a.nvars, a.degree, a.coefs.astype(dtype) * c)


def equals(a: QPolynomial, b: QPolynomial) -> bool:
    _compatible(a, b)
    if a.degree != b.degree:
        return a.is_zero() and b.is_zero()
    return bool(np.all(a.coefs == b.coefs))


def is_symmetric(p: QPolynomial) -> bool:
    """Invariance under every adjacent transposition of variables."""
    for i in range(p.nvars - 1):
        perm = _swap_permutation(p.nvars, p.degree, i)
        if not np.all(p.coefs[perm] == p.coefs):
            return False
    return True


def drop_last_variable(p: QPolynomial) -> QPolynomial:
    """Set ``x_nvars = 0``."""
    if p.nvars == 0:
        raise VarCountMismatch("no variable to drop")
    # monomials free of the last variable form the leading block of the basis
    m = monomial_basis(p.nvars - 1, p.degree).shape[0]
    return QPolynomial(p.nvars - 1, p.degree, p.coefs[:m].copy())


def _states(shape: SkewShape) -> list[tuple[int, ...]]:
    """Shifted shapes between inner and outer, as row-length tuples padded with 0."""
    lam, mu = shape.outer, shape.inner
    length = len(lam)
    mu = tuple(mu) + (0,) * (length - len(mu))
    out = []

    def rec(i, prev, acc):
        if i == length:
            out.append(tuple(acc))
            return
        top = lam[i] if prev is None else min(lam[i], max(prev - 1, 0))
        for v in range(mu[i], top + 1):
            rec(i + 1, v, acc + [v])

    rec(0, None, [])
    return out


def strip_weight(small: tuple[int, ...], big: tuple[int, ...]) -> int:
    """Number of ways to fill ``big/small`` with the two letters k' < k as part of a GSYT.

    Inside the strip a box with a strip box to its left must hold ``k`` and a
    box with a strip box below it must hold ``k'``.  A box facing both is a
    contradiction; every remaining box (the leftmost box of its row, with no
    strip box below) is free.
    """
    return int(_kernels.strip_weight_rows(np.array(small, dtype=np.int64), np.array(big, dtype=np.int64)))


@lru_cache(maxsize=None)
def _monomial_counts(nvars: int, degree: int) -> np.ndarray:
    counts = np.zeros((nvars + 1, degree + 1), dtype=np.int64)
    counts[0, 0] = 1
    for i in range(1, nvars + 1):
        for d in range(degree + 1):
            counts[i, d] = comb(d + i - 1, i - 1)
    return counts


def expand_q(shape: SkewShape, nvars: int) -> QPolynomial:
    """Sum of x^T over all GSYT of ``shape`` with values ``<= nvars``.

    Cells holding values ``<= i`` form a shifted shape between inner and
    outer, so the sum runs over chains of such shapes, one strip per
    variable, weighted by ``strip_weight``.
    """
    n = shape.ncells
    if n == 0:
        return QPolynomial(nvars, 0, np.ones(1, dtype=np.int64))
    states = np.array(_states(shape), dtype=np.int64)
    sizes = states.sum(axis=1) - sum(shape.inner)
    start, goal = 0, len(states) - 1
    ptr, src, wgt = _kernels.strip_transitions(states, sizes)
    # fewest strips from each state to the full shape
    big_of = np.repeat(np.arange(len(states)), np.diff(ptr))
    dist = np.full(len(states), 1 << 40, dtype=np.int64)
    dist[goal] = 0
    for b in np.argsort(-sizes, kind="stable"):
        if dist[b] < (1 << 40):
            continue
        nb = big_of[src == b]
        if nb.size:
            dist[b] = dist[nb].min() + 1
    counts = _monomial_counts(nvars, n)
    if (2 * nvars) ** n < _INT64_SAFE:
        coefs = _kernels.strip_dp(sizes, ptr, src, wgt, dist, start, goal, nvars, counts,
                                  np.ones(1, dtype=np.int64))
    else:
        dp = _kernels.py_func(_kernels.strip_dp)
        coefs = dp(sizes, ptr, src, wgt.astype(object), dist, start, goal, nvars, counts,
                   np.ones(1, dtype=object))
    return QPolynomial(nvars, n, coefs)


@lru_cache(maxsize=None)
def _straight_q(nu: tuple[int, ...], nvars: int) -> QPolynomial:
    return expand_q(make_skew(nu), nvars)


def decomposition_rhs(shape: SkewShape, nvars: int) -> QPolynomial:
    """Sum of f * Q_nu over the decomposition of ``shape``."""
    total = QPolynomial.zero(nvars, shape.ncells)
    for nu, f in decompose(shape):
        total = add(total, scale(_straight_q(tuple(nu), nvars), f))
    return total


def verify_decomposition(shape: SkewShape) -> bool:
    n = shape.ncells
    return equals(expand_q(shape, n), decomposition_rhs(shape, n))


def _grlex_terms(p: QPolynomial) -> list[tuple[tuple[int, ...], int]]:
    return sorted(p.terms.items(), key=lambda kv: kv[0], reverse=True)


def format_poly(p: QPolynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in _grlex_terms(p):
        mono = "*".join(
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e
        )
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


def poly_to_json(p: QPolynomial) -> dict:
    return {
        "nvars": p.nvars,
        "degree": p.degree,
        "terms": [{"exp": list(exp), "coef": str(c)} for exp, c in _grlex_terms(p)],
    }


def poly_from_json(data: dict) -> QPolynomial:
    terms = {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]}
    if not terms:
        return QPolynomial.zero(data["nvars"], data["degree"])
    p = QPolynomial.from_terms(data["nvars"], terms)
    if p.degree != data["degree"]:
        raise DegreeMismatch(f"declared degree {data['degree']} but terms have degree {p.degree}")
    return p
