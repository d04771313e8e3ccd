"""
Hot inner loops over integer symbol arrays.

Every kernel exists twice: a numba ``@njit`` loop and a vectorized numpy
version. ``MORPHIC_NUMBA=0`` in the environment (or a missing numba install)
selects the numpy path at import time. Both paths return identical results;
the test-suite runs them against each other.

All arrays are 1-d ``int32`` (symbols) or ``int64`` (values, positions).
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and os.environ.get("MORPHIC_NUMBA", "1").lower() not in ("0", "false", "no", "off")

SYMBOL = np.int32


def _njit(func):
    if numba is None:  # pragma: no cover
        return func
    return numba.njit(cache=True, nogil=True)(func)


# ---------------------------------------------------------------------------
# morphism application


def _expand_py(block, flat, offsets, lengths):
    total = 0
    for i in range(block.shape[0]):
        total += lengths[block[i]]
    out = np.empty(total, dtype=np.int32)
    k = 0
    for i in range(block.shape[0]):
        a = block[i]
        start = offsets[a]
        for j in range(lengths[a]):
            out[k] = flat[start + j]
            k += 1
    return out


expand_numba = _njit(_expand_py)


def expand_numpy(block, flat, offsets, lengths):
    lens = lengths[block]
    total = int(lens.sum())
    if total == 0:
        return np.empty(0, dtype=np.int32)
    out_start = np.cumsum(lens) - lens
    idx = np.arange(total, dtype=np.int64)
    idx += np.repeat(offsets[block] - out_start, lens)
    return flat[idx].astype(np.int32, copy=False)


# ---------------------------------------------------------------------------
# occurrences of a pattern


def _occurrences_py(w, x):
    n = w.shape[0]
    m = x.shape[0]
    out = np.empty(max(n - m + 1, 0), dtype=np.int64)
    k = 0
    for i in range(n - m + 1):
        ok = True
        for j in range(m):
            if w[i + j] != x[j]:
                ok = False
                break
        if ok:
            out[k] = i
            k += 1
    return out[:k]


occurrences_numba = _njit(_occurrences_py)


def occurrences_numpy(w, x):
    n, m = w.shape[0], x.shape[0]
    if m > n:
        return np.empty(0, dtype=np.int64)
    mask = w[: n - m + 1] == x[0]
    for j in range(1, m):
        mask &= w[j : n - m + 1 + j] == x[j]
    return np.flatnonzero(mask).astype(np.int64)


# ---------------------------------------------------------------------------
# periodic windows: positions i, periods p with w[j] == w[j+p] for
# j in [i, i + a*p + b).  Squares/k-powers use (a, b) = (k-1, 0); overlaps
# use (1, 1).


def _periodic_windows_scan(w, max_period, a, b, pos, per, fill):
    n = w.shape[0]
    k = 0
    for p in range(1, max_period + 1):
        need = a * p + b
        if need + p > n:
            break
        run = 0
        for j in range(n - p):
            run = run + 1 if w[j] == w[j + p] else 0
            if run >= need:
                if fill:
                    pos[k] = j - need + 1
                    per[k] = p
                k += 1
    return k


_periodic_windows_scan_nb = _njit(_periodic_windows_scan)


def _periodic_windows_py(w, max_period, a, b):
    # count, then fill: growing buffers inside the loop defeats the JIT
    none = np.empty(0, dtype=np.int64)
    k = _periodic_windows_scan_nb(w, max_period, a, b, none, none, False)
    pos = np.empty(k, dtype=np.int64)
    per = np.empty(k, dtype=np.int64)
    _periodic_windows_scan_nb(w, max_period, a, b, pos, per, True)
    return pos, per


periodic_windows_numba = _periodic_windows_py


def periodic_windows_numpy(w, max_period, a, b):
    n = w.shape[0]
    pos_parts, per_parts = [], []
    for p in range(1, max_period + 1):
        need = a * p + b
        if need + p > n:
            break
        eq = (w[:-p] == w[p:]).astype(np.int64)
        c = np.concatenate(([0], np.cumsum(eq)))
        starts = np.flatnonzero(c[need:] - c[:-need] == need)
        if starts.size:
            pos_parts.append(starts.astype(np.int64))
            per_parts.append(np.full(starts.size, p, dtype=np.int64))
    if not pos_parts:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return np.concatenate(pos_parts), np.concatenate(per_parts)


# ---------------------------------------------------------------------------
# additive cubes over integer values


def _additive_cubes_scan(vals, max_block, pos, blk, fill):
    n = vals.shape[0]
    pref = np.zeros(n + 1, dtype=np.int64)
    for i in range(n):
        pref[i + 1] = pref[i] + vals[i]
    k = 0
    for b in range(1, max_block + 1):
        for i in range(n - 3 * b + 1):
            s1 = pref[i + b] - pref[i]
            if pref[i + 2 * b] - pref[i + b] == s1 and pref[i + 3 * b] - pref[i + 2 * b] == s1:
                if fill:
                    pos[k] = i
                    blk[k] = b
                k += 1
    return k


_additive_cubes_scan_nb = _njit(_additive_cubes_scan)


def _additive_cubes_py(vals, max_block):
    none = np.empty(0, dtype=np.int64)
    k = _additive_cubes_scan_nb(vals, max_block, none, none, False)
    pos = np.empty(k, dtype=np.int64)
    blk = np.empty(k, dtype=np.int64)
    _additive_cubes_scan_nb(vals, max_block, pos, blk, True)
    return pos, blk


additive_cubes_numba = _additive_cubes_py


def additive_cubes_numpy(vals, max_block):
    n = vals.shape[0]
    pref = np.concatenate(([0], np.cumsum(vals, dtype=np.int64)))
    pos_parts, blk_parts = [], []
    for b in range(1, max_block + 1):
        m = n - 3 * b + 1
        if m <= 0:
            break
        s1 = pref[b : b + m] - pref[:m]
        s2 = pref[2 * b : 2 * b + m] - pref[b : b + m]
        s3 = pref[3 * b : 3 * b + m] - pref[2 * b : 2 * b + m]
        hit = np.flatnonzero((s1 == s2) & (s2 == s3))
        if hit.size:
            pos_parts.append(hit.astype(np.int64))
            blk_parts.append(np.full(hit.size, b, dtype=np.int64))
    if not pos_parts:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return np.concatenate(pos_parts), np.concatenate(blk_parts)


# ---------------------------------------------------------------------------
# x x reverse(x)


def _xxxr_scan(w, max_x, pos, size, fill):
    n = w.shape[0]
    k = 0
    for m in range(1, max_x + 1):
        for i in range(n - 3 * m + 1):
            ok = True
            for j in range(m):
                if w[i + j] != w[i + m + j] or w[i + 2 * m + j] != w[i + m - 1 - j]:
                    ok = False
                    break
            if ok:
                if fill:
                    pos[k] = i
                    size[k] = m
                k += 1
    return k


_xxxr_scan_nb = _njit(_xxxr_scan)


def _xxxr_py(w, max_x):
    none = np.empty(0, dtype=np.int64)
    k = _xxxr_scan_nb(w, max_x, none, none, False)
    pos = np.empty(k, dtype=np.int64)
    size = np.empty(k, dtype=np.int64)
    _xxxr_scan_nb(w, max_x, pos, size, True)
    return pos, size


xxxr_numba = _xxxr_py


def xxxr_numpy(w, max_x):
    n = w.shape[0]
    pos_parts, size_parts = [], []
    for m in range(1, max_x + 1):
        cnt = n - 3 * m + 1
        if cnt <= 0:
            break
        cand = np.arange(cnt)
        for j in range(m):
            keep = (w[cand + j] == w[cand + m + j]) & (w[cand + 2 * m + j] == w[cand + m - 1 - j])
            cand = cand[keep]
            if not cand.size:
                break
        if cand.size:
            pos_parts.append(cand.astype(np.int64))
            size_parts.append(np.full(cand.size, m, dtype=np.int64))
    if not pos_parts:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return np.concatenate(pos_parts), np.concatenate(size_parts)


# ---------------------------------------------------------------------------
# factor complexity: counts[n] = number of distinct factors of length n,
# 0 <= n <= n_max.  numba builds a suffix automaton; numpy refines window
# ranks one length at a time.


def _factor_counts_py(w, sigma, n_max):
    n = w.shape[0]
    size = 2 * n + 2
    nxt = np.full((size, sigma), -1, dtype=np.int32)
    link = np.full(size, -1, dtype=np.int32)
    length = np.zeros(size, dtype=np.int32)
    states = 1
    last = 0
    for i in range(n):
        c = w[i]
        cur = states
        states += 1
        length[cur] = length[last] + 1
        p = last
        while p != -1 and nxt[p, c] == -1:
            nxt[p, c] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = nxt[p, c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = states
                states += 1
                length[clone] = length[p] + 1
                for s in range(sigma):
                    nxt[clone, s] = nxt[q, s]
                link[clone] = link[q]
                while p != -1 and nxt[p, c] == q:
                    nxt[p, c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    diff = np.zeros(n_max + 2, dtype=np.int64)
    for v in range(1, states):
        lo = length[link[v]] + 1
        if lo > n_max:
            continue
        hi = length[v]
        if hi > n_max:
            hi = n_max
        diff[lo] += 1
        diff[hi + 1] -= 1
    counts = np.zeros(n_max + 1, dtype=np.int64)
    acc = 0
    for k in range(n_max + 1):
        acc += diff[k]
        counts[k] = acc
    counts[0] = 1
    return counts


factor_counts_numba = _njit(_factor_counts_py)


def window_ids(w, length):
    """Dense id per window ``w[i:i+length]``; equal ids iff equal factors."""
    ids = w.astype(np.int64)
    sigma = int(w.max()) + 1 if w.size else 1
    for n in range(1, length):
        key = ids[:-1] * sigma + w[n:].astype(np.int64)
        ids = np.unique(key, return_inverse=True)[1].astype(np.int64)
    return ids


def factor_counts_numpy(w, sigma, n_max):
    counts = np.zeros(n_max + 1, dtype=np.int64)
    counts[0] = 1
    if n_max == 0:
        return counts
    ids = w.astype(np.int64)
    for n in range(1, n_max + 1):
        if n > 1:
            key = ids[:-1] * sigma + w[n - 1 :].astype(np.int64)
            ids = np.unique(key, return_inverse=True)[1].astype(np.int64)
        counts[n] = np.unique(ids).size
    return counts


# ---------------------------------------------------------------------------
# maximal runs of one letter


def _runs_py(w, letter):
    n = w.shape[0]
    starts = np.empty(n, dtype=np.int64)
    lens = np.empty(n, dtype=np.int64)
    k = 0
    i = 0
    while i < n:
        if w[i] == letter:
            j = i
            while j < n and w[j] == letter:
                j += 1
            starts[k] = i
            lens[k] = j - i
            k += 1
            i = j
        else:
            i += 1
    return starts[:k], lens[:k]


runs_numba = _njit(_runs_py)


def runs_numpy(w, letter):
    hit = np.concatenate(([0], (w == letter).astype(np.int8), [0]))
    d = np.diff(hit)
    starts = np.flatnonzero(d == 1)
    ends = np.flatnonzero(d == -1)
    return starts.astype(np.int64), (ends - starts).astype(np.int64)


# ---------------------------------------------------------------------------
# square prefixes: half-lengths L <= max_half with w[:L] == w[L:2L]


def _square_prefixes_py(w, max_half):
    n = w.shape[0]
    z = np.zeros(n, dtype=np.int64)
    left = 0
    right = 0
    for i in range(1, n):
        if i < right:
            z[i] = min(right - i, z[i - left])
        while i + z[i] < n and w[z[i]] == w[i + z[i]]:
            z[i] += 1
        if i + z[i] > right:
            left = i
            right = i + z[i]
    out = np.empty(max_half, dtype=np.int64)
    k = 0
    for half in range(1, max_half + 1):
        if 2 * half <= n and z[half] >= half:
            out[k] = half
            k += 1
    return out[:k]


square_prefixes_numba = _njit(_square_prefixes_py)


def square_prefixes_numpy(w, max_half):
    n = w.shape[0]
    halves = [h for h in range(1, min(max_half, n // 2) + 1) if np.array_equal(w[:h], w[h : 2 * h])]
    return np.asarray(halves, dtype=np.int64)


# ---------------------------------------------------------------------------

if USE_NUMBA:
    expand = expand_numba
    occurrences = occurrences_numba
    periodic_windows = periodic_windows_numba
    additive_cubes = additive_cubes_numba
    xxxr = xxxr_numba
    factor_counts = factor_counts_numba
    runs = runs_numba
    square_prefixes = square_prefixes_numba
else:
    expand = expand_numpy
    occurrences = occurrences_numpy
    periodic_windows = periodic_windows_numpy
    additive_cubes = additive_cubes_numpy
    xxxr = xxxr_numpy
    factor_counts = factor_counts_numpy
    runs = runs_numpy
    square_prefixes = square_prefixes_numpy

BACKEND = "numba" if USE_NUMBA else "numpy"

KERNELS = {
    "expand": (expand_numba, expand_numpy),
    "occurrences": (occurrences_numba, occurrences_numpy),
    "periodic_windows": (periodic_windows_numba, periodic_windows_numpy),
    "additive_cubes": (additive_cubes_numba, additive_cubes_numpy),
    "xxxr": (xxxr_numba, xxxr_numpy),
    "factor_counts": (factor_counts_numba, factor_counts_numpy),
    "runs": (runs_numba, runs_numpy),
    "square_prefixes": (square_prefixes_numba, square_prefixes_numpy),
}
