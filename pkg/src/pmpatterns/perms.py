"""
Permutations of ``{1, ..., n}`` in one-line notation.

A permutation is a plain tuple of ints, ``sigma[i - 1]`` being the value at
position ``i``.  Positions are one-based in every public function; the
empty tuple is the unique permutation of size 0.

Diagram convention: position ``i`` is the column (x axis, left to right) and
the value ``sigma_i`` is the row (y axis, bottom to top).  The eight
symmetries of the square act on diagrams as follows::

    IDENTITY          sigma
    REFLECT_VERTICAL  reverse            (mirror in a vertical axis)
    REFLECT_HORIZONTAL complement        (sigma_i -> n + 1 - sigma_i)
    REFLECT_MAIN      inverse            (mirror in the line y = x)
    REFLECT_ANTI      reverse-complement-inverse (mirror in y = n + 1 - x)
    ROTATE_90         reverse of inverse (counterclockwise)
    ROTATE_180        reverse-complement
    ROTATE_270        complement of inverse
"""

from __future__ import annotations

import enum
import itertools
import os
from collections.abc import Iterator, Sequence

__all__ = [
    "HARD_CAP", "Symmetry", "reduce", "reduce_word", "is_permutation", "check_permutation",
    "contains_classical", "avoids", "inversions", "last_ascent", "last_descent",
    "position_of", "apply_symmetry", "enumerate_perms", "enumerate_partition",
    "max_n", "format_perm", "parse_perm", "reverse", "complement", "inverse",
]

Perm = tuple[int, ...]

# permutations of size above this are refused unless PMP_MAX_N says otherwise
HARD_CAP = 11


def max_n(limit: int | None = None) -> int:
    """Return the enumeration limit in force: ``limit``, else ``$PMP_MAX_N``, else ``HARD_CAP``."""
    if limit is not None:
        return limit
    env = os.environ.get("PMP_MAX_N")
    if env:
        return int(env)
    return HARD_CAP


def reduce_word(w: Sequence[int]) -> tuple[int, ...]:
    """
    Replace the i-th smallest letter of ``w`` by ``i``; equal letters get equal ranks.

    >>> reduce_word([2, 5, 7, 2, 5])
    (1, 2, 3, 1, 2)
    """
    rank = {v: r for r, v in enumerate(sorted(set(w)), start=1)}
    return tuple(rank[v] for v in w)


def reduce(w: Sequence[int]) -> Perm:
    """
    Reduce a word with distinct letters to the permutation with the same relative order.

    >>> reduce([2, 6, 5, 3])
    (1, 4, 3, 2)
    """
    if len(set(w)) != len(w):
        raise ValueError(f"word {tuple(w)} has repeated letters: not reducible to a permutation")
    return reduce_word(w)


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def check_permutation(seq: Sequence[int]) -> Perm:
    """Return ``seq`` as a tuple, raising ``ValueError`` unless it is a bijection on 1..n."""
    seq = tuple(int(v) for v in seq)
    if not is_permutation(seq):
        raise ValueError(f"{seq} is not a permutation of 1..{len(seq)}")
    return seq


def contains_classical(sigma: Sequence[int], p: Sequence[int]) -> bool:
    """True iff some subsequence of ``sigma`` has the relative order of ``p``."""
    p = tuple(p)
    k = len(p)
    if k > len(sigma):
        return False
    return any(reduce(sub) == p for sub in itertools.combinations(sigma, k))


def avoids(sigma: Sequence[int], p: Sequence[int]) -> bool:
    return not contains_classical(sigma, p)


def inversions(sigma: Sequence[int]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def last_ascent(sigma: Sequence[int]) -> int | None:
    """
    Position ``k`` with ``sigma_k < sigma_{k+1} > sigma_{k+2} > ... > sigma_n``,
    or ``None`` when ``sigma`` is strictly decreasing.

    >>> last_ascent((1, 3, 4, 2))
    2
    """
    if not sigma:
        raise ValueError("last ascent of the empty permutation is undefined")
    for k in range(len(sigma) - 1, 0, -1):
        if sigma[k - 1] < sigma[k]:
            return k
    return None


def last_descent(sigma: Sequence[int]) -> int | None:
    """Position ``k`` with ``sigma_k > sigma_{k+1} < ... < sigma_n``, or ``None`` when increasing."""
    if not sigma:
        raise ValueError("last descent of the empty permutation is undefined")
    for k in range(len(sigma) - 1, 0, -1):
        if sigma[k - 1] > sigma[k]:
            return k
    return None


def position_of(sigma: Sequence[int], value: int) -> int:
    """One-based position of ``value`` in ``sigma``."""
    return list(sigma).index(value) + 1


def reverse(sigma: Sequence[int]) -> Perm:
    return tuple(reversed(sigma))


def complement(sigma: Sequence[int]) -> Perm:
    n = len(sigma)
    return tuple(n + 1 - v for v in sigma)


def inverse(sigma: Sequence[int]) -> Perm:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma, start=1):
        inv[v - 1] = i
    return tuple(inv)


class Symmetry(enum.Enum):
    """The dihedral group of the square, acting on permutation diagrams."""

    IDENTITY = "identity"
    ROTATE_90 = "rotate90"
    ROTATE_180 = "rotate180"
    ROTATE_270 = "rotate270"
    REFLECT_HORIZONTAL = "reflectHorizontal"
    REFLECT_VERTICAL = "reflectVertical"
    REFLECT_MAIN = "reflectMainDiagonal"
    REFLECT_ANTI = "reflectAntiDiagonal"

    def map_point(self, x: int, y: int, n: int) -> tuple[int, int]:
        """Image of the cell at column ``x``, row ``y`` of an ``n`` by ``n`` diagram."""
        m = n + 1
        return {
            Symmetry.IDENTITY: (x, y),
            Symmetry.ROTATE_90: (m - y, x),
            Symmetry.ROTATE_180: (m - x, m - y),
            Symmetry.ROTATE_270: (y, m - x),
            Symmetry.REFLECT_HORIZONTAL: (x, m - y),
            Symmetry.REFLECT_VERTICAL: (m - x, y),
            Symmetry.REFLECT_MAIN: (y, x),
            Symmetry.REFLECT_ANTI: (m - y, m - x),
        }[self]

    def compose(self, other: Symmetry) -> Symmetry:
        """The symmetry "apply ``other`` first, then ``self``"."""
        # read the composite off its action on an asymmetric 2-point probe
        probe = [(1, 1), (2, 1)]
        target = [self.map_point(*other.map_point(x, y, 3), 3) for x, y in probe]
        for t in Symmetry:
            if [t.map_point(x, y, 3) for x, y in probe] == target:
                return t
        raise AssertionError("dihedral group is not closed")  # pragma: no cover

    @property
    def inverse(self) -> Symmetry:
        return next(t for t in Symmetry if t.compose(self) is Symmetry.IDENTITY)


def apply_symmetry(sigma: Sequence[int], t: Symmetry) -> Perm:
    """Permutation whose diagram is the image of the diagram of ``sigma`` under ``t``."""
    n = len(sigma)
    out = [0] * n
    for i, v in enumerate(sigma, start=1):
        x, y = t.map_point(i, v, n)
        out[x - 1] = y
    return tuple(out)


def _check_n(n: int, limit: int | None) -> None:
    cap = max_n(limit)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration limit {cap} (set PMP_MAX_N to override)")


def enumerate_perms(n: int, *, limit: int | None = None) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    _check_n(n, limit)
    return itertools.permutations(range(1, n + 1))


def enumerate_partition(n: int, first: int, *, limit: int | None = None) -> Iterator[Perm]:
    """
    The lexicographic block of S_n whose first entry is ``first``.

    The blocks for ``first = 1..n`` are disjoint, cover S_n, and concatenate
    to the order of :func:`enumerate_perms`.
    """
    _check_n(n, limit)
    if not 1 <= first <= n:
        raise ValueError(f"first entry must be in 1..{n}, got {first}")
    rest = [v for v in range(1, n + 1) if v != first]
    return ((first, *p) for p in itertools.permutations(rest))


def format_perm(sigma: Sequence[int]) -> str:
    """One-line notation: ``"26481573"`` for n <= 9, comma separated above."""
    if len(sigma) <= 9:
        return "".join(str(v) for v in sigma)
    return ",".join(str(v) for v in sigma)


def parse_perm(text: str) -> Perm:
    text = text.strip()
    if "," in text:
        seq = [int(tok) for tok in text.split(",") if tok.strip()]
    elif text in {"", "()", "e"}:
        seq = []
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        seq = [int(ch) for ch in text]
    return check_permutation(seq)
