"""
Vectorised statistics over blocks of S_n.

A block is an ``(m, n)`` int8 array of permutations (values 1..n), one per
row.  Match information is kept as a uint16 bitmask per row, bit ``i - 1``
standing for position ``i``.  Blocks wider than 16 are refused (the
default cap is 11).

Whole-S_n passes are split into the n lexicographic blocks with a fixed
first entry.  Blocks are independent, so with ``jobs > 1`` they are farmed
out to worker processes and their histograms added up afterwards.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Callable, Iterable

import numpy as np

from .patterns import MarkedPattern, MmpSpec
from .perms import Symmetry, _check_n

__all__ = [
    "lex_block", "perm_array", "position_masks", "gamma_masks", "popcount",
    "mmp_values", "last_ascent_values", "last_descent_values", "pos_of_one_values",
    "histogram", "joint_histogram", "transform_block",
]


@functools.lru_cache(maxsize=4)
def _lex_zero_based(n: int) -> np.ndarray:
    """S_n over values 0..n-1 in lexicographic order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    sub = _lex_zero_based(n - 1)
    out = np.empty((sub.shape[0] * n, n), dtype=np.int8)
    rows = sub.shape[0]
    for v in range(n):
        block = out[v * rows:(v + 1) * rows]
        block[:, 0] = v
        block[:, 1:] = sub + (sub >= v)
    return out


def perm_array(n: int) -> np.ndarray:
    """All of S_n (values 1..n), lexicographic; row ``r`` matches ``enumerate_perms``."""
    _check_n(n, None)
    return _lex_zero_based(n) + 1


def lex_block(n: int, first: int) -> np.ndarray:
    """The rows of :func:`perm_array` whose first entry is ``first``."""
    _check_n(n, None)
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    sub = _lex_zero_based(n - 1)
    out = np.empty((sub.shape[0], n), dtype=np.int8)
    out[:, 0] = first
    out[:, 1:] = sub + 1 + (sub + 1 >= first)
    return out


def position_masks(perms: np.ndarray, tau: MarkedPattern) -> np.ndarray:
    """Bitmask of the positions at which each row has a ``tau``-match."""
    m, n = perms.shape
    if n > 16:
        raise ValueError(f"position masks hold 16 positions, got n = {n}")
    k = tau.k
    masks = np.zeros(m, dtype=np.uint16)
    if k > n:
        return masks
    pat = tau.pattern
    pairs = [(a, b, pat[a] < pat[b]) for a in range(k) for b in range(a + 1, k)]
    cols = [perms[:, j] for j in range(n)]
    for idx in itertools.combinations(range(n), k):
        hit = np.ones(m, dtype=bool)
        for a, b, up in pairs:
            if up:
                hit &= cols[idx[a]] < cols[idx[b]]
            else:
                hit &= cols[idx[a]] > cols[idx[b]]
        masks[hit] |= np.uint16(1 << idx[tau.mark - 1])
    return masks


def gamma_masks(perms: np.ndarray, gamma: Iterable[MarkedPattern]) -> np.ndarray:
    out = np.zeros(perms.shape[0], dtype=np.uint16)
    for tau in gamma:
        out |= position_masks(perms, tau)
    return out


def popcount(masks: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(masks).astype(np.int64)
    bits = np.unpackbits(masks.astype(">u2").view(np.uint8).reshape(-1, 2), axis=1)
    return bits.sum(axis=1).astype(np.int64)  # pragma: no cover


def mmp_values(perms: np.ndarray, spec: MmpSpec) -> np.ndarray:
    """``mmp^{(a,b,c,d)}`` of each row."""
    m, n = perms.shape
    total = np.zeros(m, dtype=np.int64)
    for pos in range(n):
        v = perms[:, pos:pos + 1]
        left, right = perms[:, :pos], perms[:, pos + 1:]
        q1 = (right > v).sum(axis=1)
        q2 = (left > v).sum(axis=1)
        q3 = (left < v).sum(axis=1)
        q4 = (right < v).sum(axis=1)
        total += (q1 >= spec.a) & (q2 >= spec.b) & (q3 >= spec.c) & (q4 >= spec.d)
    return total


def last_ascent_values(perms: np.ndarray) -> np.ndarray:
    """Last ascent position per row; 0 for strictly decreasing rows."""
    return _last_true(perms[:, :-1] < perms[:, 1:])


def last_descent_values(perms: np.ndarray) -> np.ndarray:
    """Last descent position per row; 0 for increasing rows."""
    return _last_true(perms[:, :-1] > perms[:, 1:])


def _last_true(flags: np.ndarray) -> np.ndarray:
    m, w = flags.shape
    if w == 0:
        return np.zeros(m, dtype=np.int64)
    rev = flags[:, ::-1]
    last = w - np.argmax(rev, axis=1)
    return np.where(rev.any(axis=1), last, 0).astype(np.int64)


def pos_of_one_values(perms: np.ndarray) -> np.ndarray:
    return (np.argmin(perms, axis=1) + 1).astype(np.int64)


def _block_histogram(stat: Callable[[np.ndarray], np.ndarray], n: int, first: int) -> np.ndarray:
    return np.bincount(stat(lex_block(n, first)), minlength=n + 1)


def histogram(n: int, stat: Callable[[np.ndarray], np.ndarray], jobs: int = 1) -> list[int]:
    """
    ``out[j]`` = number of sigma in S_n with ``stat(sigma) == j``.

    ``stat`` maps a block to an int array; for ``jobs > 1`` it must be
    picklable (a module-level function or ``functools.partial`` of one).
    """
    if n == 0:
        return [int(v) for v in np.bincount(stat(perm_array(0)), minlength=1)]
    firsts = range(1, n + 1)
    if jobs <= 1:
        parts = [_block_histogram(stat, n, f) for f in firsts]
    else:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_block_histogram, itertools.repeat(stat), itertools.repeat(n), firsts))
    width = max(len(p) for p in parts)
    total = np.zeros(width, dtype=np.int64)
    for p in parts:
        total[:len(p)] += p
    return [int(v) for v in total]


def joint_histogram(perms: np.ndarray, keys: np.ndarray, values: np.ndarray) -> dict[int, list[int]]:
    """Per key, the histogram of ``values`` over rows carrying that key."""
    width = int(values.max()) + 1 if values.size else 1
    out = {}
    for key in np.unique(keys):
        sel = values[keys == key]
        out[int(key)] = [int(v) for v in np.bincount(sel, minlength=width)]
    return out


def transform_block(perms: np.ndarray, t: Symmetry) -> np.ndarray:
    """Apply a diagram symmetry to every row of a block."""
    m, n = perms.shape
    xs = np.broadcast_to(np.arange(1, n + 1), (m, n))
    xp, yp = t.map_point(xs, perms.astype(np.int64), n)
    out = np.empty_like(perms)
    np.put_along_axis(out, np.asarray(xp) - 1, np.asarray(yp).astype(perms.dtype), axis=1)
    return out
