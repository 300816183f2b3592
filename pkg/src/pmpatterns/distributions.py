"""
Distribution polynomials ``P_{n,tau}(x) = sum over S_n of x^{pmp_tau(sigma)}``.

Everything here is exhaustive over S_n and exact; the recursive engines that
reproduce the same tables without enumeration live in :mod:`.recursions`.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from . import batch
from .patterns import MarkedPattern, MmpSpec, PatternSet, all_marked_patterns, orbit_representatives
from .perms import avoids, enumerate_perms, inversions, max_n
from .poly import DistPoly

__all__ = [
    "BRUTE_DEFAULT_N", "BRUTE_EXTENDED_N", "REFINEMENTS", "RefinedTable", "Classification",
    "dist_brute", "dist_gamma", "dist_mmp", "dist_refined_brute", "classify",
    "catalan", "avoider_count", "special_constant_term", "special_leading",
    "expected_leading", "sum_inversions_132",
]

BRUTE_DEFAULT_N = 8
BRUTE_EXTENDED_N = 10

REFINEMENTS = ("last_ascent", "last_descent", "pos_of_1",
               "last_ascent+pos_of_1", "last_descent+pos_of_1")


def _check_limit(n: int, limit: int | None) -> None:
    lim = BRUTE_DEFAULT_N if limit is None else limit
    cap = max_n()
    if lim > cap:
        raise ValueError(f"limit {lim} exceeds the hard cap {cap} (set PMP_MAX_N to override)")
    if n > lim:
        raise ValueError(f"n = {n} exceeds the brute-force limit {lim}; raise the limit "
                         f"(--limit-override on the command line; up to {BRUTE_EXTENDED_N} is practical)")
    if n < 0:
        raise ValueError("n must be nonnegative")


def _pmp_stat(block: np.ndarray, tau: MarkedPattern) -> np.ndarray:
    return batch.popcount(batch.position_masks(block, tau))


def _gamma_stat(block: np.ndarray, gamma: tuple[MarkedPattern, ...]) -> np.ndarray:
    return batch.popcount(batch.gamma_masks(block, gamma))


def _mmp_stat(block: np.ndarray, spec: MmpSpec) -> np.ndarray:
    return batch.mmp_values(block, spec)


@functools.lru_cache(maxsize=4096)
def _dist_cached(n: int, tau: MarkedPattern) -> DistPoly:
    return DistPoly(batch.histogram(n, functools.partial(_pmp_stat, tau=tau)))


def dist_brute(n: int, tau: MarkedPattern, *, limit: int | None = None, jobs: int = 1) -> DistPoly:
    """
    ``P_{n,tau}(x)`` by enumerating S_n.

    ``limit`` defaults to 8; raise it (up to the hard cap) for larger n.
    ``jobs > 1`` shards S_n by first entry over worker processes.
    """
    _check_limit(n, limit)
    if jobs > 1:
        return DistPoly(batch.histogram(n, functools.partial(_pmp_stat, tau=tau), jobs=jobs))
    return _dist_cached(n, tau)


def dist_gamma(n: int, gamma: PatternSet | Iterable[MarkedPattern], *,
               limit: int | None = None, jobs: int = 1) -> DistPoly:
    """``sum over S_n of x^{pmp_Gamma(sigma)}`` for a set of marked patterns."""
    _check_limit(n, limit)
    stat = functools.partial(_gamma_stat, gamma=tuple(sorted(gamma)))
    return DistPoly(batch.histogram(n, stat, jobs=jobs))


def dist_mmp(n: int, spec: MmpSpec, *, limit: int | None = None, jobs: int = 1) -> DistPoly:
    _check_limit(n, limit)
    return DistPoly(batch.histogram(n, functools.partial(_mmp_stat, spec=spec), jobs=jobs))


@dataclass
class RefinedTable:
    """
    Polynomials keyed by ``(n, k)`` or ``(n, s, t)``.

    ``kind`` names the refinement (see ``REFINEMENTS``).  Key component 0 in
    the ascent/descent slot stands for "no ascent" / "no descent".
    ``finals[n]`` is the full ``P_{n,tau}``.
    """

    kind: str
    entries: dict[tuple[int, ...], DistPoly] = field(default_factory=dict)
    finals: dict[int, DistPoly] = field(default_factory=dict)

    def get(self, *key: int) -> DistPoly:
        return self.entries.get(key, DistPoly())

    def row(self, n: int) -> dict[tuple[int, ...], DistPoly]:
        return {key[1:]: p for key, p in self.entries.items() if key[0] == n}

    def to_json(self) -> dict:
        def label(key):
            if len(key) == 2:
                return f"n={key[0]},k={key[1]}"
            return f"n={key[0]},s={key[1]},t={key[2]}"
        return {
            "kind": self.kind,
            "entries": {label(k): p.to_json() for k, p in sorted(self.entries.items())},
            "finals": {f"n={n}": p.to_json() for n, p in sorted(self.finals.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> RefinedTable:
        def unlabel(text):
            return tuple(int(part.split("=")[1]) for part in text.split(","))
        return cls(
            kind=data["kind"],
            entries={unlabel(k): DistPoly.from_json(v) for k, v in data["entries"].items()},
            finals={unlabel(k)[0]: DistPoly.from_json(v) for k, v in data["finals"].items()},
        )


def _refinement_keys(perms: np.ndarray, kind: str) -> list[np.ndarray]:
    parts = {
        "last_ascent": batch.last_ascent_values,
        "last_descent": batch.last_descent_values,
        "pos_of_1": batch.pos_of_one_values,
    }
    try:
        return [parts[name](perms) for name in kind.split("+")]
    except KeyError:
        raise ValueError(f"unknown refinement {kind!r}; choose from {REFINEMENTS}") from None


def dist_refined_brute(n: int, tau: MarkedPattern, kind: str, *,
                       limit: int | None = None) -> dict[tuple[int, ...], DistPoly]:
    """
    ``P_{n,tau}`` split by a refinement key, with explicit zeros.

    Keys are 1-tuples (``last_ascent``, ``last_descent``, ``pos_of_1``) or
    pairs (``last_*+pos_of_1``).  Ascent/descent slots range over 0..n with 0
    meaning the monotone permutation; ``pos_of_1`` ranges over 1..n.  The
    values sum to :func:`dist_brute`.
    """
    _check_limit(n, limit)
    if kind not in REFINEMENTS:
        raise ValueError(f"unknown refinement {kind!r}; choose from {REFINEMENTS}")
    perms = batch.perm_array(n)
    stats = _pmp_stat(perms, tau)
    keys = _refinement_keys(perms, kind)
    ranges = [range(1, n + 1) if name == "pos_of_1" else range(0, n + 1)
              for name in kind.split("+")]
    out: dict[tuple[int, ...], DistPoly] = {}
    flat = np.zeros(perms.shape[0], dtype=np.int64)
    for key_arr in keys:
        flat = flat * (n + 2) + key_arr
    width = int(stats.max()) + 1 if stats.size else 1
    for key in itertools.product(*ranges):
        code = 0
        for part in key:
            code = code * (n + 2) + part
        sel = stats[flat == code]
        out[key] = DistPoly(np.bincount(sel, minlength=width).tolist())
    return out


@dataclass
class Classification:
    """Patterns grouped by equal distributions for every n up to ``n_max``."""

    k: int
    n_max: int
    modulo_symmetry: bool
    classes: list[tuple[MarkedPattern, ...]]
    witness: dict[MarkedPattern, tuple[DistPoly, ...]]

    @property
    def status(self) -> str:
        return f"proven-equal-up-to-{self.n_max}"

    def class_of(self, tau: MarkedPattern) -> tuple[MarkedPattern, ...]:
        return next(c for c in self.classes if tau in c)


def classify(k: int, n_max: int = BRUTE_DEFAULT_N, modulo_symmetry: bool = True, *,
             limit: int | None = None, jobs: int = 1) -> Classification:
    """
    Group S_k^* (or one representative per symmetry orbit) by the sequence of
    distributions ``P_{1,tau}, ..., P_{n_max,tau}``.

    Equal sequences are numerical evidence of pmp-Wilf equivalence, not a proof.
    """
    if not 1 <= k <= 4:
        raise ValueError(f"classify supports pattern lengths 1..4, got {k}")
    lim = limit if limit is not None else BRUTE_DEFAULT_N
    _check_limit(n_max, lim)
    pats = orbit_representatives(k) if modulo_symmetry else all_marked_patterns(k)
    witness = {t: tuple(dist_brute(n, t, limit=lim, jobs=jobs) for n in range(1, n_max + 1))
               for t in pats}
    groups: dict[tuple[DistPoly, ...], list[MarkedPattern]] = {}
    for t in pats:
        groups.setdefault(witness[t], []).append(t)
    classes = sorted(tuple(sorted(g)) for g in groups.values())
    return Classification(k, n_max, modulo_symmetry, classes, witness)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def avoider_count(n: int, p: tuple[int, ...]) -> int:
    """Number of sigma in S_n avoiding the classical pattern ``p`` (direct scan)."""
    return sum(1 for sigma in enumerate_perms(n) if avoids(sigma, p))


def special_constant_term(n: int, tau: MarkedPattern, **kw) -> int:
    """Constant term of ``P_{n,tau}``: the number of ``pi(tau)``-avoiders."""
    return dist_brute(n, tau, **kw)[0]


def special_leading(n: int, tau: MarkedPattern, **kw) -> tuple[int, int]:
    """(degree, leading coefficient) of ``P_{n,tau}``."""
    p = dist_brute(n, tau, **kw)
    return p.degree, p.leading


def expected_leading(n: int, k: int) -> tuple[int, int]:
    """Predicted (degree, leading coefficient): ``(n-k+1, (n-k+1)!)``, or ``(0, n!)`` if n < k."""
    if n < k:
        return 0, math.factorial(n)
    return n - k + 1, math.factorial(n - k + 1)


def sum_inversions_132(n: int) -> int:
    """Total number of inversions over the 132-avoiders in S_n."""
    return sum(inversions(s) for s in enumerate_perms(n) if avoids(s, (1, 3, 2)))
