"""
Refined recursions for ``P_{n,tau}`` that avoid enumerating S_n.

Every engine fills its table bottom-up from the stated initial values and
stores explicit zeros for infeasible keys, so each cell can be compared with
:func:`.distributions.dist_refined_brute`.

==================  =========  ==============================================
engine              pattern    refinement of S_n
==================  =========  ==============================================
last_ascent_un123   [1]23      last ascent k
last_descent_un132  [1]32      last descent k
pos1_1un23          1[2]3      position k of 1
pos1_13un2          13[2]      position k of 1
len4_t1             1[2]34     last ascent s, position t of 1
len4_t2             1[2]43     last descent s, position t of 1
==================  =========  ==============================================
"""

from __future__ import annotations

from .distributions import RefinedTable
from .poly import ONE, X, ZERO, DistPoly

__all__ = [
    "recursion_last_ascent_un123", "recursion_last_descent_un132",
    "recursion_pos1_1un23", "recursion_pos1_13un2",
    "recursion_len4_t1", "recursion_len4_t2", "ENGINES",
]


def _last_run(n: int, kind: str) -> RefinedTable:
    # P_{m,k} = (k-1) x P_{m-1,k-1} + 1 + sum_{l=1}^{k} P_{m-1,l},  P_{m,0} = P_{m,m} = 0
    table = RefinedTable(kind)
    table.finals[1] = ONE
    if n >= 2:
        table.entries[(2, 1)] = ONE
        table.entries[(2, 2)] = ZERO
        table.finals[2] = ONE + ONE
    for m in range(3, n + 1):
        for k in range(1, m):
            acc = (k - 1) * X * table.get(m - 1, k - 1) + ONE
            for ell in range(1, k + 1):
                acc = acc + table.get(m - 1, ell)
            table.entries[(m, k)] = acc
        table.entries[(m, m)] = ZERO
        table.finals[m] = ONE + sum((table.get(m, k) for k in range(1, m)), ZERO)
    return table


def recursion_last_ascent_un123(n: int) -> RefinedTable:
    """Table of ``P_{m,[1]23,k}`` (last ascent at k) for 2 <= m <= n."""
    return _last_run(n, "last_ascent")


def recursion_last_descent_un132(n: int) -> RefinedTable:
    """Table of ``P_{m,[1]32,k}`` (last descent at k) for 2 <= m <= n."""
    return _last_run(n, "last_descent")


def _pos_of_one(n: int) -> RefinedTable:
    # P_{m,k} = sum_{l<k} P_{m-1,l} + (x(m-k-1) + 1) P_{m-1,k},  P_{m,N} = 0 for N > m
    table = RefinedTable("pos_of_1")
    if n >= 1:
        table.entries[(1, 1)] = ONE
        table.finals[1] = ONE
    for m in range(2, n + 1):
        for k in range(1, m + 1):
            acc = sum((table.get(m - 1, ell) for ell in range(1, k)), ZERO)
            if k <= m - 1:
                acc = acc + DistPoly([1, m - k - 1]) * table.get(m - 1, k)
            table.entries[(m, k)] = acc
        table.finals[m] = sum((table.get(m, k) for k in range(1, m + 1)), ZERO)
    return table


def recursion_pos1_1un23(n: int) -> RefinedTable:
    """Table of ``P_{m,1[2]3,k}`` (1 at position k) for 1 <= m <= n."""
    return _pos_of_one(n)


def recursion_pos1_13un2(n: int) -> RefinedTable:
    """Table of ``P_{m,13[2],k}`` (1 at position k) for 1 <= m <= n."""
    return _pos_of_one(n)


def _single(table: RefinedTable, m: int, s: int) -> DistPoly:
    """``P_{m,tau,s}``: the sum of row s over t."""
    return sum((table.get(m, s, t) for t in range(1, m + 1)), ZERO)


def _fill_zeros(table: RefinedTable, m: int) -> None:
    for s in range(0, m):
        for t in range(1, m + 1):
            table.entries.setdefault((m, s, t), ZERO)


def recursion_len4_t1(n: int) -> RefinedTable:
    """
    Table of ``P_{m,1[2]34,s,t}`` keyed (m, s, t): last ascent at s, 1 at t.

    Row s = 0 holds the decreasing permutation (1 at position m), the "1 +"
    term of the full polynomial.
    """
    table = RefinedTable("last_ascent+pos_of_1")
    for m in range(1, n + 1):
        table.entries[(m, 0, m)] = ONE
        for s in range(1, m):
            for t in range(1, s):
                acc = sum((table.get(m - 1, s - 1, ell) for ell in range(1, t)), ZERO)
                acc = acc + (s - 1 - t) * X * table.get(m - 1, s - 1, t)
                acc = acc + sum((table.get(m - 1, j, t) for j in range(t + 1, s + 1)), ZERO)
                acc = acc + table.get(m - 1, t, t)
                table.entries[(m, s, t)] = acc
            table.entries[(m, s, s)] = ONE + sum((_single(table, m - 1, i) for i in range(1, s)), ZERO)
            if s < m - 1:
                table.entries[(m, s, m)] = _single(table, m - 1, s)
        _fill_zeros(table, m)
        table.finals[m] = ONE + sum((_single(table, m, s) for s in range(1, m)), ZERO)
    return table


def recursion_len4_t2(n: int) -> RefinedTable:
    """
    Table of ``P_{m,1[2]43,s,t}`` keyed (m, s, t): last descent at s, 1 at t.

    Row s = 0 holds the increasing permutation as the cell (m, 0, 1) = 1.
    The general formula reads this cell when t = 1, where it accounts for
    removing 2 leaving the identity.
    """
    table = RefinedTable("last_descent+pos_of_1")
    for m in range(1, n + 1):
        table.entries[(m, 0, 1)] = ONE
        for s in range(1, m):
            for t in range(1, s):
                acc = sum((table.get(m - 1, s - 1, ell) for ell in range(1, t)), ZERO)
                acc = acc + (s - 1 - t) * X * table.get(m - 1, s - 1, t)
                acc = acc + sum((table.get(m - 1, j, t) for j in range(t + 1, s + 1)), ZERO)
                acc = acc + table.get(m - 1, t - 1, t)
                table.entries[(m, s, t)] = acc
            table.entries[(m, s, s + 1)] = ONE + sum((_single(table, m - 1, i) for i in range(1, s + 1)), ZERO)
        _fill_zeros(table, m)
        table.finals[m] = ONE + sum((_single(table, m, s) for s in range(1, m)), ZERO)
    return table


# engine name -> (builder, pattern text, brute-force refinement kind)
ENGINES = {
    "last_ascent_un123": (recursion_last_ascent_un123, "[1]23", "last_ascent"),
    "last_descent_un132": (recursion_last_descent_un132, "[1]32", "last_descent"),
    "pos1_1un23": (recursion_pos1_1un23, "1[2]3", "pos_of_1"),
    "pos1_13un2": (recursion_pos1_13un2, "13[2]", "pos_of_1"),
    "len4_t1": (recursion_len4_t1, "1[2]34", "last_ascent+pos_of_1"),
    "len4_t2": (recursion_len4_t2, "1[2]43", "last_descent+pos_of_1"),
}
