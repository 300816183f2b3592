"""
Positional marked patterns, multi-pattern matching and quadrant marked mesh patterns.

A marked pattern ``tau`` is a permutation of ``{1..k}`` with one position
underlined.  In text the underlined entry is bracketed: ``1[4]32`` is the
pattern 1432 marked at position 2.  ``sigma`` has a ``tau``-match at position
``l`` when some occurrence of the pattern in ``sigma`` uses ``sigma_l`` in the
role of the marked entry.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .perms import Perm, Symmetry, apply_symmetry, check_permutation, reduce

__all__ = [
    "MarkedPattern", "PatternSet", "MmpSpec", "parse_pattern", "parse_pattern_set",
    "parse_mmp", "has_match_at", "match_positions", "pmp", "pmp_naive", "gamma_pmp",
    "mmp_match_at", "mmp_count", "mmp_to_gamma", "all_marked_patterns",
    "symmetry_class", "canonical", "orbit_representatives",
]


@dataclass(frozen=True, order=True)
class MarkedPattern:
    """A permutation of 1..k (``pattern``) with the entry at position ``mark`` underlined."""

    pattern: Perm
    mark: int

    def __post_init__(self):
        object.__setattr__(self, "pattern", check_permutation(self.pattern))
        if not self.pattern:
            raise ValueError("a marked pattern has length at least 1")
        if not 1 <= self.mark <= len(self.pattern):
            raise ValueError(f"mark {self.mark} outside 1..{len(self.pattern)}")

    @property
    def k(self) -> int:
        return len(self.pattern)

    @property
    def marked_value(self) -> int:
        return self.pattern[self.mark - 1]

    def transform(self, t: Symmetry) -> MarkedPattern:
        """Apply a diagram symmetry; the underline travels with its cell."""
        x, _ = t.map_point(self.mark, self.marked_value, self.k)
        return MarkedPattern(apply_symmetry(self.pattern, t), x)

    def __str__(self) -> str:
        return "".join(f"[{v}]" if i == self.mark else str(v)
                       for i, v in enumerate(self.pattern, start=1))

    @classmethod
    def parse(cls, text: str) -> MarkedPattern:
        return parse_pattern(text)


_PATTERN_RE = re.compile(r"^(\d*)\[(\d)\](\d*)$")


def parse_pattern(text: str) -> MarkedPattern:
    """
    Parse ``"1[2]3"``-style text: digits with exactly one bracketed digit.

    >>> parse_pattern("1[4]32")
    MarkedPattern(pattern=(1, 4, 3, 2), mark=2)
    """
    m = _PATTERN_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse marked pattern {text!r}; expected e.g. 1[2]3")
    left, mid, right = m.groups()
    digits = [int(c) for c in left + mid + right]
    return MarkedPattern(tuple(digits), len(left) + 1)


@dataclass(frozen=True)
class PatternSet:
    """A nonempty collection of marked patterns of one common length."""

    patterns: frozenset[MarkedPattern]

    def __init__(self, patterns: Iterable[MarkedPattern]):
        pats = frozenset(patterns)
        if not pats:
            raise ValueError("a pattern set must be nonempty")
        if len({p.k for p in pats}) != 1:
            raise ValueError("all patterns in a set must have the same length")
        object.__setattr__(self, "patterns", pats)

    @property
    def k(self) -> int:
        return next(iter(self.patterns)).k

    def __iter__(self):
        return iter(sorted(self.patterns))

    def __len__(self) -> int:
        return len(self.patterns)

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self) + "}"


def parse_pattern_set(text: str) -> PatternSet:
    """Parse ``"{1[2]3,1[3]2}"``; a bare single pattern is accepted too."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    return PatternSet(parse_pattern(tok) for tok in text.split(",") if tok.strip())


@dataclass(frozen=True)
class MmpSpec:
    """Quadrant thresholds: at least a, b, c, d points in quadrants I, II, III, IV."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("quadrant thresholds must be nonnegative")

    @property
    def is_trivial(self) -> bool:
        return self.a + self.b + self.c + self.d == 0

    def __str__(self) -> str:
        return f"mmp({self.a},{self.b},{self.c},{self.d})"


def parse_mmp(text: str) -> MmpSpec:
    """Accept ``mmp(2,0,2,0)`` or bare ``2,0,2,0``."""
    m = re.fullmatch(r"\s*(?:mmp\()?\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)?\s*", text)
    if not m:
        raise ValueError(f"cannot parse MMP spec {text!r}; expected mmp(a,b,c,d)")
    return MmpSpec(*(int(g) for g in m.groups()))


def _check_position(sigma: Sequence[int], pos: int) -> None:
    if not 1 <= pos <= len(sigma):
        raise ValueError(f"position {pos} outside 1..{len(sigma)}")


def has_match_at(sigma: Sequence[int], tau: MarkedPattern, pos: int) -> bool:
    """
    Does ``sigma`` have a ``tau``-match at position ``pos``?

    Splits ``tau`` at its mark: the entries left of the mark are sought among
    ``sigma_1..sigma_{pos-1}`` and the entries right of it among
    ``sigma_{pos+1}..sigma_n``, each pre-filtered by which side of
    ``sigma_pos`` their value must lie on.
    """
    _check_position(sigma, pos)
    u, m = tau.mark, tau.marked_value
    pat = tau.pattern
    v = sigma[pos - 1]
    left_pat, right_pat = pat[:u - 1], pat[u:]
    if len(left_pat) > pos - 1 or len(right_pat) > len(sigma) - pos:
        return False

    def candidates(values, sub):
        for combo in itertools.combinations(values, len(sub)):
            if all((a < v) == (b < m) for a, b in zip(combo, sub)):
                if reduce(combo) == reduce(sub):
                    yield combo

    rights = list(candidates(sigma[pos:], right_pat))
    if not rights:
        return False
    for lc in candidates(sigma[:pos - 1], left_pat):
        for rc in rights:
            if reduce(lc + (v,) + rc) == pat:
                return True
    return False


def match_positions(sigma: Sequence[int], tau: MarkedPattern) -> frozenset[int]:
    return frozenset(pos for pos in range(1, len(sigma) + 1) if has_match_at(sigma, tau, pos))


def pmp(sigma: Sequence[int], tau: MarkedPattern) -> int:
    """Number of positions at which ``sigma`` has a ``tau``-match."""
    return len(match_positions(sigma, tau))


def pmp_naive(sigma: Sequence[int], tau: MarkedPattern) -> int:
    """Reference count: scan every k-subsequence and record the index playing the mark."""
    hits = set()
    for idx in itertools.combinations(range(len(sigma)), tau.k):
        if reduce([sigma[i] for i in idx]) == tau.pattern:
            hits.add(idx[tau.mark - 1])
    return len(hits)


def gamma_pmp(sigma: Sequence[int], gamma: PatternSet | Iterable[MarkedPattern]) -> int:
    """Number of positions matched by at least one pattern of ``gamma``."""
    hits: set[int] = set()
    for tau in gamma:
        hits |= match_positions(sigma, tau)
    return len(hits)


def quadrant_counts(sigma: Sequence[int], pos: int) -> tuple[int, int, int, int]:
    """Points of the graph of ``sigma`` in quadrants I..IV around ``(pos, sigma_pos)``."""
    _check_position(sigma, pos)
    v = sigma[pos - 1]
    q = [0, 0, 0, 0]
    for i, w in enumerate(sigma, start=1):
        if i > pos and w > v:
            q[0] += 1
        elif i < pos and w > v:
            q[1] += 1
        elif i < pos and w < v:
            q[2] += 1
        elif i > pos and w < v:
            q[3] += 1
    return tuple(q)


def mmp_match_at(sigma: Sequence[int], spec: MmpSpec, pos: int) -> bool:
    q = quadrant_counts(sigma, pos)
    return q[0] >= spec.a and q[1] >= spec.b and q[2] >= spec.c and q[3] >= spec.d


def mmp_count(sigma: Sequence[int], spec: MmpSpec) -> int:
    return sum(mmp_match_at(sigma, spec, pos) for pos in range(1, len(sigma) + 1))


def all_marked_patterns(k: int) -> list[MarkedPattern]:
    """S_k^*, ordered by pattern (lexicographic) then mark."""
    return [MarkedPattern(p, u) for p in itertools.permutations(range(1, k + 1))
            for u in range(1, k + 1)]


def mmp_to_gamma(spec: MmpSpec) -> PatternSet:
    """
    The marked patterns of length a+b+c+d+1 whose marked entry has exactly
    a, b, c, d other entries in quadrants I, II, III, IV.
    """
    if spec.is_trivial:
        raise ValueError("trivial spec: mmp(0,0,0,0) matches every position")
    k = spec.a + spec.b + spec.c + spec.d + 1
    want = (spec.a, spec.b, spec.c, spec.d)
    return PatternSet(t for t in all_marked_patterns(k)
                      if quadrant_counts(t.pattern, t.mark) == want)


def symmetry_class(tau: MarkedPattern) -> frozenset[MarkedPattern]:
    """Orbit of ``tau`` under the eight diagram symmetries."""
    return frozenset(tau.transform(t) for t in Symmetry)


def canonical(tau: MarkedPattern) -> MarkedPattern:
    """The smallest member of the orbit, ordering by (pattern, mark)."""
    return min(symmetry_class(tau))


def orbit_representatives(k: int) -> list[MarkedPattern]:
    return sorted({canonical(t) for t in all_marked_patterns(k)})
