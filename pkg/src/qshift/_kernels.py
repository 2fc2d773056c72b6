"""Array kernels: amenability of coded words, the amenable-filling search,
and the strip transfer used by the Q-function expansion.

The same source runs either compiled by numba (default) or as plain Python
on numpy arrays.  Set ``QSHIFT_DISABLE_NUMBA=1`` before import to force the
interpreted path; it is also used automatically when numba is missing.

Letters are integer codes: ``2*v - 1`` for a marked ``v``, ``2*v`` for an
unmarked ``v``.  Cells are indexed in row-word order (bottom row first, left
to right), so index ``p`` holds ``w_{p+1}``.
"""
import os

import numpy as np

_DISABLED = os.environ.get("QSHIFT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    USE_NUMBA = True
except ImportError:
    USE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


@njit(cache=True)
def k_amenable_codes(w, n, k):
    """True iff ``w[:n]`` satisfies all four k-amenability clauses."""
    hi = 0
    lo = 0
    # suffix phase: j = 0..n-1, the letter tested is w_{n-j}
    for j in range(n):
        x = w[n - 1 - j]
        if hi == lo and (x + 1) // 2 == k:
            return False
        if x == 2 * k:
            hi += 1
        elif x == 2 * k - 2:
            lo += 1
    # prefix phase over marked letters: j = n..2n-1, letter w_{j-n+1}
    for j in range(n):
        x = w[j]
        if hi == lo and (x == 2 * k - 1 or x == 2 * k - 2):
            return False
        if x == 2 * k - 1:
            hi += 1
        elif x == 2 * k - 3:
            lo += 1
    for v in (k, k - 1):
        for j in range(n):
            x = w[j]
            if (x + 1) // 2 == v:
                if x % 2 == 1:
                    return False
                break
    return True


@njit(cache=True)
def amenable_codes(w, n):
    top = 0
    for j in range(n):
        v = (w[j] + 1) // 2
        if v > top:
            top = v
    for k in range(2, top + 2):
        if not k_amenable_codes(w, n, k):
            return False
    return True


@njit(cache=True)
def search_amenable(right, above, cap, limit, out):
    """Depth-first search for amenable GSYT fillings.

    ``right[p]`` / ``above[p]`` give the index of the cell to the right in the
    same row / directly above in the same column, or -1.  Cells are filled in
    reverse row-word order (top row first, right to left), so both neighbours
    are already set when cell ``p`` is chosen.  In that order the first
    amenability clause becomes a lattice condition on the unmarked letters
    seen so far, which prunes the tree; the remaining clauses are checked on
    complete fillings.

    Letter values run over ``1..cap``.  Stops after ``limit`` solutions when
    ``limit > 0``.  The first ``out.shape[0]`` solutions are written to
    ``out``.  Returns the number of solutions found.
    """
    n = right.shape[0]
    if n == 0:
        return 1
    top = 2 * cap
    t = np.zeros(n, dtype=np.int64)
    unmarked = np.zeros(cap + 2, dtype=np.int64)
    found = 0
    depth = 0
    while depth >= 0:
        p = n - 1 - depth
        x = t[p]
        if x > 0 and x % 2 == 0:
            unmarked[x // 2] -= 1
        lo = 1
        if above[p] >= 0:
            lo = t[above[p]]
        hi = top
        if right[p] >= 0:
            hi = t[right[p]]
        nxt = x + 1
        if nxt < lo:
            nxt = lo
        chosen = 0
        while nxt <= hi:
            ok = True
            if right[p] >= 0 and nxt == t[right[p]] and nxt % 2 == 1:
                ok = False
            if above[p] >= 0 and nxt == t[above[p]] and nxt % 2 == 0:
                ok = False
            v = (nxt + 1) // 2
            if ok and v >= 2 and unmarked[v - 1] == unmarked[v]:
                ok = False
            if ok:
                chosen = nxt
                break
            nxt += 1
        if chosen == 0:
            t[p] = 0
            depth -= 1
            continue
        t[p] = chosen
        if chosen % 2 == 0:
            unmarked[chosen // 2] += 1
        if depth == n - 1:
            if amenable_codes(t, n):
                if found < out.shape[0]:
                    out[found, :] = t
                found += 1
                if limit > 0 and found >= limit:
                    return found
        else:
            depth += 1
            t[n - 1 - depth] = 0
    return found


def empty_out(n):
    return np.zeros((0, n), dtype=np.int64)


@njit(cache=True)
def strip_weight_rows(small, big):
    """Fillings of the strip ``big/small`` by k' < k; rows are shifted row lengths."""
    length = small.shape[0]
    free = 0
    for i in range(length):
        a = small[i]
        b = big[i]
        if b < a:
            return 0
        if b == a:
            continue
        below_a = 0
        below_b = 0
        if i + 1 < length:
            below_a = small[i + 1]
            below_b = big[i + 1]
        if below_b > a:
            return 0
        if not (below_a < a and a <= below_b):
            free += 1
    return 1 << free


@njit(cache=True)
def strip_transitions(states, sizes):
    """Nonzero strip weights between states as CSR arrays indexed by the larger state."""
    nstates = states.shape[0]
    ptr = np.zeros(nstates + 1, dtype=np.int64)
    src = np.zeros(nstates * nstates, dtype=np.int64)
    wgt = np.zeros(nstates * nstates, dtype=np.int64)
    m = 0
    for big in range(nstates):
        for small in range(nstates):
            if sizes[small] < sizes[big]:
                w = strip_weight_rows(states[small], states[big])
                if w:
                    src[m] = small
                    wgt[m] = w
                    m += 1
        ptr[big + 1] = m
    return ptr, src[:m], wgt[:m]


@njit(cache=True)
def strip_dp(sizes, ptr, src, wgt, dist, start, goal, nvars, counts, seed):
    """Coefficient vector of the chain sum over ``nvars`` strips from ``start`` to ``goal``.

    ``counts[i, d]`` is the number of degree-``d`` monomials in ``i``
    variables; ``seed`` is a length-1 array holding 1 in the working dtype.
    Vectors use the basis where the last variable's exponent is the outer
    block index, so adding a strip of size ``s`` writes into block ``s``.
    """
    nstates = sizes.shape[0]
    prev_off = np.full(nstates, -1, dtype=np.int64)
    prev_off[start] = 0
    prev = seed.copy()
    for i in range(nvars):
        remaining = nvars - i - 1
        cur_off = np.full(nstates, -1, dtype=np.int64)
        total = 0
        for b in range(nstates):
            if dist[b] > remaining:
                continue
            live = prev_off[b] >= 0
            for e in range(ptr[b], ptr[b + 1]):
                if prev_off[src[e]] >= 0:
                    live = True
                    break
            if live:
                cur_off[b] = total
                total += counts[i + 1, sizes[b]]
        cur = np.zeros(total, dtype=seed.dtype)
        for b in range(nstates):
            base = cur_off[b]
            if base < 0:
                continue
            d = sizes[b]
            if prev_off[b] >= 0:
                n0 = counts[i, d]
                cur[base:base + n0] += prev[prev_off[b]:prev_off[b] + n0]
            for e in range(ptr[b], ptr[b + 1]):
                a = src[e]
                if prev_off[a] < 0:
                    continue
                s = d - sizes[a]
                off = base
                for t in range(s):
                    off += counts[i, d - t]
                ln = counts[i, d - s]
                cur[off:off + ln] += wgt[e] * prev[prev_off[a]:prev_off[a] + ln]
        prev = cur
        prev_off = cur_off
    if prev_off[goal] < 0:
        return np.zeros(counts[nvars, sizes[goal]], dtype=seed.dtype)
    return prev[prev_off[goal]:prev_off[goal] + counts[nvars, sizes[goal]]].copy()


def py_func(f):
    """The interpreted version of a kernel (needed for object-dtype coefficients)."""
    return getattr(f, "py_func", f)
