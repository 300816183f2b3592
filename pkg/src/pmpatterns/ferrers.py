"""
Ferrers-board reduction for patterns of the form ``1[2]·tail`` and ``[2]1·tail``.

Cells are ``(row, column)`` = ``(value, position)``, rows counted bottom to
top.  Fix a suffix pattern ``tau`` (the reduced tail).  A cell is dominant
when ``tau`` occurs strictly above and strictly right of it; dominant cells
form a down-left closed region.  The occupied non-dominant cells ``Q``
already determine that region.  Deleting the rows and columns of ``Q`` leaves
a Ferrers board ``lambda(Q)``, and the remaining points of sigma are one
filling of it.  Every filling arises this way, which turns the pmp count of
``1[2]·tail`` into a filling statistic with a product formula.

Boards list row lengths bottom row first, so ``rows[0]`` is the longest.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter, defaultdict
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from . import batch
from .distributions import dist_brute, dist_gamma
from .patterns import MarkedPattern
from .perms import Perm, check_permutation, enumerate_perms, format_perm, reduce
from .poly import ONE, DistPoly
from .report import Report

__all__ = [
    "Cell", "FerrersBoard", "BoardFilling", "NdSet", "dominant_cells", "dominant_from_nd",
    "nd_set", "lambda_of", "filling_of", "decompose", "enumerate_fillings", "filling_pmp",
    "filling_distribution", "product_poly", "phi_board", "all_fillable_boards",
    "lengthn_patterns", "verify_lengthn", "verify_multipattern", "parse_board",
    "PATTERN_12", "PATTERN_21",
]

Cell = tuple[int, int]

PATTERN_12 = MarkedPattern((1, 2), 2)
PATTERN_21 = MarkedPattern((2, 1), 1)


@dataclass(frozen=True)
class FerrersBoard:
    """Row lengths, bottom row first, weakly decreasing."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r <= 0 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def is_fillable(self) -> bool:
        k = self.k
        return all(k - i + 1 <= lam <= k for i, lam in enumerate(self.rows, start=1))

    def contains(self, row: int, col: int) -> bool:
        return 1 <= row <= self.k and 1 <= col <= self.rows[row - 1]

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)


def parse_board(text: str) -> FerrersBoard:
    """``"5,5,3,3,1"`` -> board; the empty string is the empty board."""
    text = text.strip().strip("()")
    return FerrersBoard(tuple(int(t) for t in text.split(",") if t.strip()))


@dataclass(frozen=True)
class BoardFilling:
    """One cross per row and column; ``placement[r - 1]`` is the column used in row r."""

    board: FerrersBoard
    placement: tuple[int, ...]

    def __post_init__(self):
        placement = tuple(self.placement)
        k = self.board.k
        if len(placement) != k or sorted(placement) != list(range(1, k + 1)):
            raise ValueError(f"placement {placement} is not one cross per row and column of a {k}-row board")
        for r, c in enumerate(placement, start=1):
            if not self.board.contains(r, c):
                raise ValueError(f"cross ({r}, {c}) lies outside board {self.board}")
        object.__setattr__(self, "placement", placement)

    def as_permutation(self) -> Perm:
        """Column by column, the row holding the cross."""
        perm = [0] * len(self.placement)
        for r, c in enumerate(self.placement, start=1):
            perm[c - 1] = r
        return tuple(perm)

    @classmethod
    def from_permutation(cls, board: FerrersBoard, perm: Sequence[int]) -> BoardFilling:
        perm = check_permutation(perm)
        placement = [0] * len(perm)
        for c, r in enumerate(perm, start=1):
            placement[r - 1] = c
        return cls(board, tuple(placement))

    def to_json(self) -> dict:
        return {"board": str(self.board), "placement": list(self.placement)}

    @classmethod
    def from_json(cls, data: dict) -> BoardFilling:
        return cls(parse_board(data["board"]), tuple(data["placement"]))


@dataclass(frozen=True)
class NdSet:
    """Occupied non-dominant cells of an ``n`` by ``n`` diagram."""

    cells: frozenset[Cell]
    n: int

    def __post_init__(self):
        cells = frozenset((int(r), int(c)) for r, c in self.cells)
        rows = [r for r, _ in cells]
        cols = [c for _, c in cells]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("at most one cell per row and per column")
        if any(not (1 <= v <= self.n) for v in rows + cols):
            raise ValueError(f"cells must lie in [{self.n}] x [{self.n}]")
        object.__setattr__(self, "cells", cells)

    def __len__(self) -> int:
        return len(self.cells)

    def free_rows(self) -> list[int]:
        used = {r for r, _ in self.cells}
        return [r for r in range(1, self.n + 1) if r not in used]

    def free_cols(self) -> list[int]:
        used = {c for _, c in self.cells}
        return [c for c in range(1, self.n + 1) if c not in used]


def _points(sigma: Sequence[int]) -> list[Cell]:
    return [(v, j) for j, v in enumerate(sigma, start=1)]


def _reach(points: Sequence[Cell], tau: Perm) -> int:
    """Largest first column over occurrences of ``tau`` among ``points``; 0 if none."""
    k = len(tau)
    by_col = sorted(points, key=lambda p: p[1])
    best = 0
    for combo in itertools.combinations(by_col, k):
        if combo[0][1] > best and reduce([r for r, _ in combo]) == tau:
            best = combo[0][1]
    return best


def _dominant_widths(points: Sequence[Cell], tau: Perm, n: int) -> list[int]:
    """``widths[i - 1]``: row i is dominant exactly in columns 1..widths[i - 1]."""
    widths = []
    for i in range(1, n + 1):
        reach = _reach([p for p in points if p[0] > i], tau)
        widths.append(max(reach - 1, 0))
    return widths


def _cells_from_widths(widths: Sequence[int]) -> frozenset[Cell]:
    return frozenset((i, j) for i, w in enumerate(widths, start=1) for j in range(1, w + 1))


def dominant_cells(sigma: Sequence[int], tau: Sequence[int]) -> frozenset[Cell]:
    """Cells (i, j) with an occurrence of ``tau`` in rows > i and columns > j."""
    sigma, tau = check_permutation(sigma), check_permutation(tau)
    return _cells_from_widths(_dominant_widths(_points(sigma), tau, len(sigma)))


def dominant_from_nd(q: NdSet, tau: Sequence[int]) -> frozenset[Cell]:
    """The dominant region recomputed from the points of ``Q`` alone."""
    return _cells_from_widths(_dominant_widths(sorted(q.cells), check_permutation(tau), q.n))


def nd_set(sigma: Sequence[int], tau: Sequence[int]) -> NdSet:
    sigma, tau = check_permutation(sigma), check_permutation(tau)
    widths = _dominant_widths(_points(sigma), tau, len(sigma))
    return NdSet(frozenset((v, j) for v, j in _points(sigma) if j > widths[v - 1]), len(sigma))


def lambda_of(q: NdSet, tau: Sequence[int]) -> FerrersBoard:
    """
    Shape left after deleting the rows and columns of ``Q`` from the dominant region.

    Raises ``ValueError`` when no permutation has ``Q`` as its non-dominant part
    as far as can be told from ``Q``: a cell of ``Q`` that ``Q`` itself makes
    dominant, or a leftover board with no filling.
    """
    tau = check_permutation(tau)
    widths = _dominant_widths(sorted(q.cells), tau, q.n)
    bad = [(r, c) for r, c in q.cells if c <= widths[r - 1]]
    if bad:
        raise ValueError(f"inconsistent Q: cell {min(bad)} would be dominant")
    cols = q.free_cols()
    rows = [sum(1 for c in cols if c <= widths[r - 1]) for r in q.free_rows()]
    if any(r == 0 for r in rows):
        raise ValueError("inconsistent Q: a free row has no dominant cell")
    try:
        board = FerrersBoard(tuple(rows))
    except ValueError as exc:
        raise ValueError(f"inconsistent Q: {exc}") from None
    if not board.is_fillable:
        raise ValueError(f"inconsistent Q: board {board} has no filling")
    return board


def _placement(sigma: Sequence[int], q: NdSet) -> tuple[int, ...]:
    row_idx = {r: i for i, r in enumerate(q.free_rows(), start=1)}
    col_idx = {c: i for i, c in enumerate(q.free_cols(), start=1)}
    placement = [0] * len(row_idx)
    for v, j in _points(sigma):
        if (v, j) not in q.cells:
            placement[row_idx[v] - 1] = col_idx[j]
    return tuple(placement)


def decompose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[NdSet, FerrersBoard, BoardFilling]:
    """sigma -> (Q, lambda(Q), the points of sigma outside Q in board coordinates)."""
    q = nd_set(sigma, tau)
    board = lambda_of(q, tau)
    return q, board, BoardFilling(board, _placement(sigma, q))


def filling_of(sigma: Sequence[int], tau: Sequence[int]) -> BoardFilling:
    return decompose(sigma, tau)[2]


def phi_board(f: BoardFilling, q: NdSet, tau: Sequence[int]) -> Perm:
    """Put the crosses of ``f`` into the free rows and columns of ``Q``."""
    board = lambda_of(q, tau)
    if f.board != board:
        raise ValueError(f"filling has shape {f.board}, but Q leaves {board}")
    rows, cols = q.free_rows(), q.free_cols()
    sigma = [0] * q.n
    for r, c in q.cells:
        sigma[c - 1] = r
    for r, c in enumerate(f.placement, start=1):
        sigma[cols[c - 1] - 1] = rows[r - 1]
    return tuple(sigma)


def enumerate_fillings(board: FerrersBoard) -> Iterator[BoardFilling]:
    """
    Every filling, each once.  Rows are filled top row first; row i then has
    ``lambda_i - (k - i)`` free columns, which is where the product formula
    comes from.
    """
    if not board.is_fillable:
        raise ValueError(f"board {board} has no filling")
    k = board.k
    placement = [0] * k
    used = [False] * (k + 1)

    def fill(row: int) -> Iterator[BoardFilling]:
        if row == 0:
            yield BoardFilling(board, tuple(placement))
            return
        for c in range(1, board.rows[row - 1] + 1):
            if not used[c]:
                used[c] = True
                placement[row - 1] = c
                yield from fill(row - 1)
                used[c] = False

    yield from fill(k)


def filling_pmp(f: BoardFilling, p: MarkedPattern) -> int:
    """
    Columns t at which the filling has a ``p``-match.  The whole subgrid spanned
    by the chosen rows and columns must lie inside the board, empty cells
    included; on a Ferrers board that means its top-right corner does.
    """
    perm = f.as_permutation()
    k = len(perm)
    hits = set()
    for cols in itertools.combinations(range(1, k + 1), p.k):
        rows = [perm[c - 1] for c in cols]
        if reduce(rows) == p.pattern and f.board.contains(max(rows), cols[-1]):
            hits.add(cols[p.mark - 1])
    return len(hits)


@functools.lru_cache(maxsize=None)
def filling_distribution(board: FerrersBoard, p: MarkedPattern) -> DistPoly:
    """``sum over fillings of x^{filling_pmp}`` by enumeration."""
    counts = Counter(filling_pmp(f, p) for f in enumerate_fillings(board))
    return DistPoly(counts.get(i, 0) for i in range(max(counts) + 1))


def product_poly(board: FerrersBoard) -> DistPoly:
    """``prod_i (1 + (lambda_i - (k - i + 1)) x)``."""
    if not board.is_fillable:
        raise ValueError(f"board {board} has no filling")
    k = board.k
    out = ONE
    for i, lam in enumerate(board.rows, start=1):
        out = out * DistPoly([1, lam - (k - i + 1)])
    return out


def all_fillable_boards(k: int) -> list[FerrersBoard]:
    """Every fillable board with k rows."""
    out: list[FerrersBoard] = []

    def grow(prefix: list[int]) -> None:
        i = len(prefix) + 1
        if i > k:
            out.append(FerrersBoard(tuple(prefix)))
            return
        top = prefix[-1] if prefix else k
        for lam in range(k - i + 1, top + 1):
            grow(prefix + [lam])

    grow([])
    return out


def _check_tail(tail: Sequence[int]) -> tuple[int, ...]:
    tail = tuple(int(v) for v in tail)
    if sorted(tail) != list(range(3, len(tail) + 3)):
        raise ValueError(f"tail {tail} must be a rearrangement of 3..{len(tail) + 2}")
    return tail


def lengthn_patterns(tail: Sequence[int]) -> tuple[MarkedPattern, MarkedPattern, MarkedPattern]:
    """(1[2]·tail, [2]1·tail, 2[1]·tail)."""
    tail = _check_tail(tail)
    return (MarkedPattern((1, 2) + tail, 2), MarkedPattern((2, 1) + tail, 1),
            MarkedPattern((2, 1) + tail, 2))


def _tail_text(tail: Sequence[int]) -> str:
    return "".join(str(v) for v in tail) or "(empty)"


def verify_lengthn(tail: Sequence[int], n: int, *, limit: int | None = None, jobs: int = 1,
                   decomposition_max: int = 7) -> Report:
    """
    Check that the three patterns share ``P_n``, and, for n up to
    ``decomposition_max``, that every class ``S_n^Q`` carries the same statistic
    as the fillings of ``lambda(Q)``.
    """
    tail = _check_tail(tail)
    p1, p2, p3 = lengthn_patterns(tail)
    rep = Report(f"lengthn tail={_tail_text(tail)} n={n}")
    d1, d2, d3 = (dist_brute(n, p, limit=limit, jobs=jobs) for p in (p1, p2, p3))
    rep.add(f"P_{n}({p1}) == P_{n}({p2})", d1 == d2, str(d1),
            None if d1 == d2 else {"n": n, "left": str(p1), "right": str(p2)})
    rep.add(f"P_{n}({p1}) == P_{n}({p3})", d1 == d3, str(d3),
            None if d1 == d3 else {"n": n, "left": str(p1), "right": str(p3)})
    if n <= decomposition_max:
        rep.extend(_decomposition_report(tail, n))
    return rep


def _decomposition_report(tail: tuple[int, ...], n: int) -> Report:
    tau = reduce(tail)
    p1, p2, _ = lengthn_patterns(tail)
    perms = batch.perm_array(n)
    s1 = batch.popcount(batch.position_masks(perms, p1))
    s2 = batch.popcount(batch.position_masks(perms, p2))
    buckets: dict[NdSet, list[Counter]] = defaultdict(lambda: [Counter(), Counter()])
    rep = Report("decomposition")
    roundtrip_ok = recover_ok = True
    for row, sigma in enumerate(enumerate_perms(n)):
        q, board, f = decompose(sigma, tau)
        b = buckets[q]
        b[0][int(s1[row])] += 1
        b[1][int(s2[row])] += 1
        if roundtrip_ok and phi_board(f, q, tau) != sigma:
            roundtrip_ok = rep.add("phi_board roundtrip", False, counterexample={"sigma": format_perm(sigma)})
        if recover_ok and dominant_from_nd(q, tau) != dominant_cells(sigma, tau):
            recover_ok = rep.add("dominant region from Q", False, counterexample={"sigma": format_perm(sigma)})
    if roundtrip_ok:
        rep.add("phi_board roundtrip", True, f"{perms.shape[0]} permutations")
    if recover_ok:
        rep.add("dominant region from Q", True)

    def as_poly(c: Counter) -> DistPoly:
        return DistPoly(c.get(i, 0) for i in range(max(c) + 1))

    bite_ok = True
    for q, (c1, c2) in buckets.items():
        board = lambda_of(q, tau)
        f1, f2 = filling_distribution(board, PATTERN_12), filling_distribution(board, PATTERN_21)
        if as_poly(c1) != f1 or as_poly(c2) != f2:
            bite_ok = rep.add("per-Q statistic equals filling statistic", False,
                              counterexample={"n": n, "Q": sorted(map(list, q.cells)), "board": str(board)})
            break
    if bite_ok:
        rep.add("per-Q statistic equals filling statistic", True, f"{len(buckets)} classes Q")
    return rep


def verify_multipattern(tails: Iterable[Sequence[int]], n: int, *, limit: int | None = None,
                        jobs: int = 1) -> Report:
    """``{1[2]·t}`` and ``{[2]1·t}`` over the given tails share their Gamma distribution."""
    tails = sorted({_check_tail(t) for t in tails})
    if not tails:
        raise ValueError("need at least one tail")
    if len({len(t) for t in tails}) != 1:
        raise ValueError("all tails must have the same length")
    g1 = [lengthn_patterns(t)[0] for t in tails]
    g2 = [lengthn_patterns(t)[1] for t in tails]
    d1 = dist_gamma(n, g1, limit=limit, jobs=jobs)
    d2 = dist_gamma(n, g2, limit=limit, jobs=jobs)
    label = "{" + ",".join(map(str, g1)) + "} vs {" + ",".join(map(str, g2)) + "}"
    rep = Report(f"multipattern tails={','.join(map(_tail_text, tails))} n={n}")
    rep.add(f"{label} at n={n}", d1 == d2, str(d1),
            None if d1 == d2 else {"n": n, "tails": [_tail_text(t) for t in tails]})
    return rep
