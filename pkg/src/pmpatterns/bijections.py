"""
Constructive bijections behind the length-3 equivalences.

``theta_a``   S_n -> S_n, carries pmp_[1]23 to pmp_[1]32 and last ascent to last descent.
``theta_b``   S_n -> S_n, carries pmp_1[2]3 to pmp_13[2] and fixes the position of 1.
``phi``       marked 132-avoiders of size n -> {sigma in S_{n+1} : pmp_[1]32(sigma) = 1}.

Both thetas are defined by insertion histories.  We recover the history of
the input by peeling values off (1 for ``theta_a``; 1 or 2 for ``theta_b``)
and replay it on the image side.
"""

from __future__ import annotations

import functools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .patterns import MarkedPattern, match_positions
from .perms import Perm, avoids, check_permutation, enumerate_perms, last_ascent, reduce

__all__ = [
    "MarkedAvoider", "insert_value", "delete_position", "theta_a", "theta_b",
    "ims_enumerate", "phi", "phi_inverse", "parse_marked_avoider",
]

_UN132 = MarkedPattern((1, 3, 2), 1)


def insert_value(sigma: Sequence[int], i: int, j: int) -> Perm:
    """
    Raise every entry >= ``i`` by one, then insert ``i`` so it lands at position ``j``.

    >>> insert_value((2, 1, 4, 3), 3, 2)
    (2, 3, 1, 5, 4)
    """
    n = len(sigma)
    if not 1 <= i <= n + 1:
        raise ValueError(f"value {i} outside 1..{n + 1}")
    if not 1 <= j <= n + 1:
        raise ValueError(f"position {j} outside 1..{n + 1}")
    bumped = [v + 1 if v >= i else v for v in sigma]
    return tuple(bumped[:j - 1] + [i] + bumped[j - 1:])


def delete_position(sigma: Sequence[int], j: int) -> Perm:
    """Remove the entry at position ``j`` and reduce."""
    return reduce(list(sigma[:j - 1]) + list(sigma[j:]))


@functools.lru_cache(maxsize=None)
def _theta_a(sigma: Perm) -> Perm:
    n = len(sigma)
    if n == 1:
        return (1,)
    r = sigma.index(1) + 1
    prev = delete_position(sigma, r)
    k = last_ascent(prev) or 0
    if r <= k:
        r2 = r
    elif r <= n - 1:
        r2 = r + 1
    else:
        r2 = k + 1
    return insert_value(_theta_a(prev), 1, r2)


def theta_a(sigma: Sequence[int]) -> Perm:
    """
    Bijection with ``pmp_[1]23(sigma) == pmp_[1]32(theta_a(sigma))``.

    >>> theta_a((1, 3, 4, 2))
    (1, 4, 2, 3)
    """
    sigma = check_permutation(sigma)
    if not sigma:
        raise ValueError("theta_a is defined for n >= 1")
    return _theta_a(sigma)


@functools.lru_cache(maxsize=None)
def _theta_b(sigma: Perm) -> Perm:
    n = len(sigma)
    if n == 1:
        return (1,)
    p1, p2 = sigma.index(1) + 1, sigma.index(2) + 1
    if p2 < p1:
        # last step inserted a new 1 right of the old 1 (now 2); mirror it in place
        prev = delete_position(sigma, p1)
        return insert_value(_theta_b(prev), 1, p1)
    # last step inserted 2 right of 1
    prev = delete_position(sigma, p2)
    k = p1
    r2 = p2 + 1 if p2 <= n - 1 else k + 1
    return insert_value(_theta_b(prev), 2, r2)


def theta_b(sigma: Sequence[int]) -> Perm:
    """
    Bijection with ``pmp_1[2]3(sigma) == pmp_13[2](theta_b(sigma))``, fixing the position of 1.

    >>> theta_b((2, 1, 4, 3))
    (2, 1, 3, 4)
    """
    sigma = check_permutation(sigma)
    if not sigma:
        raise ValueError("theta_b is defined for n >= 1")
    return _theta_b(sigma)


@dataclass(frozen=True)
class MarkedAvoider:
    """A 132-avoider with the inverted pair at positions ``star1 < star2`` starred."""

    base: Perm
    star1: int
    star2: int

    def __post_init__(self):
        object.__setattr__(self, "base", check_permutation(self.base))
        n = len(self.base)
        if not 1 <= self.star1 < self.star2 <= n:
            raise ValueError(f"stars must satisfy 1 <= star1 < star2 <= {n}")
        if self.base[self.star1 - 1] < self.base[self.star2 - 1]:
            raise ValueError("starred entries must form an inversion")
        if not avoids(self.base, (1, 3, 2)):
            raise ValueError(f"{self.base} contains 132")

    def __str__(self) -> str:
        sep = "," if len(self.base) >= 10 else ""
        return sep.join(f"{v}*" if i in (self.star1, self.star2) else str(v)
                        for i, v in enumerate(self.base, start=1))


def parse_marked_avoider(text: str) -> MarkedAvoider:
    """Parse ``"6745*82*13"``: a trailing ``*`` after each of the two starred entries."""
    text = text.strip()
    tokens = text.split(",") if "," in text else _split_digits(text)
    base, stars = [], []
    for pos, tok in enumerate(tokens, start=1):
        tok = tok.strip()
        if tok.endswith("*"):
            stars.append(pos)
            tok = tok[:-1]
        base.append(int(tok))
    if len(stars) != 2:
        raise ValueError(f"expected exactly two starred entries in {text!r}")
    return MarkedAvoider(tuple(base), stars[0], stars[1])


def _split_digits(text: str) -> list[str]:
    out: list[str] = []
    for ch in text:
        if ch == "*":
            if not out:
                raise ValueError(f"misplaced star in {text!r}")
            out[-1] += "*"
        else:
            out.append(ch)
    return out


def ims_enumerate(n: int) -> Iterator[MarkedAvoider]:
    """Every 132-avoider of size n with one inverted pair starred."""
    for sigma in enumerate_perms(n):
        if not avoids(sigma, (1, 3, 2)):
            continue
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                if sigma[a - 1] > sigma[b - 1]:
                    yield MarkedAvoider(sigma, a, b)


def phi(m: MarkedAvoider) -> Perm:
    """Insert the value under the second star at the position of the first star."""
    return insert_value(m.base, m.base[m.star2 - 1], m.star1)


def phi_inverse(sigma: Sequence[int]) -> MarkedAvoider:
    """
    Undo :func:`phi` on a permutation with exactly one ``[1]32``-match.

    The match sits at a unique position t; deleting sigma_t and reducing gives
    the avoider, with stars on the images of sigma_{t+1} and sigma_t + 1.
    """
    sigma = check_permutation(sigma)
    hits = match_positions(sigma, _UN132)
    if len(hits) != 1:
        raise ValueError(f"{sigma} has pmp_[1]32 = {len(hits)}, need exactly 1")
    (t,) = hits
    v = sigma[t - 1]
    later = sigma.index(v + 1) + 1 if v + 1 in sigma else 0
    assert t < len(sigma) and sigma[t] > v and later > t and sigma[t] != v + 1, \
        "structure of the unique match violated"
    return MarkedAvoider(delete_position(sigma, t), t, later - 1)

