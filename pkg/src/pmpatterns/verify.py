"""
Exhaustive verification suites.

Each suite checks a family of identities on all of S_n for n up to ``n_max``
and returns a :class:`Report`; a failing check carries the first
counterexample found.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable

import numpy as np

from . import batch
from .bijections import ims_enumerate, phi, phi_inverse, theta_a, theta_b
from .distributions import (
    avoider_count, catalan, dist_brute, dist_refined_brute, expected_leading,
    sum_inversions_132,
)
from .ferrers import (
    PATTERN_12, PATTERN_21, all_fillable_boards, decompose, dominant_cells, dominant_from_nd,
    filling_distribution, phi_board, product_poly, verify_lengthn, verify_multipattern,
)
from .patterns import (
    MmpSpec, all_marked_patterns, match_positions, mmp_to_gamma,
    orbit_representatives, parse_pattern, pmp,
)
from .perms import Symmetry, enumerate_perms, format_perm, last_ascent, last_descent
from .recursions import ENGINES
from .report import Report

__all__ = ["SUITES", "run_suite", "LENGTHN_TAILS"]

UN123 = parse_pattern("[1]23")
UN132 = parse_pattern("[1]32")

LENGTHN_TAILS: tuple[tuple[int, ...], ...] = ((3,), (3, 4), (4, 3),
                                              *itertools.permutations((3, 4, 5)))


def _row(perms: np.ndarray, row: int) -> str:
    return format_perm(tuple(int(v) for v in perms[row]))


def suite_recursions(n_max: int, jobs: int = 1) -> Report:
    rep = Report(f"recursions n<={n_max}")
    for name, (builder, text, kind) in ENGINES.items():
        tau = parse_pattern(text)
        table = builder(n_max)
        bad = None
        for n in range(1, n_max + 1):
            brute = dist_refined_brute(n, tau, kind, limit=max(n_max, 8))
            for key, poly in brute.items():
                # the single-statistic engines leave the monotone key 0 to the "1 +" term
                if len(key) == 1 and kind != "pos_of_1" and key[0] == 0:
                    continue
                if table.get(n, *key) != poly:
                    bad = {"engine": name, "n": n, "key": list(key),
                           "recursion": str(table.get(n, *key)), "brute": str(poly)}
                    break
            if bad is None and table.finals.get(n) != dist_brute(n, tau, limit=max(n_max, 8), jobs=jobs):
                bad = {"engine": name, "n": n, "key": "final"}
            if bad:
                break
        rep.add(f"{name} ({text}) matches brute force cell by cell", bad is None,
                counterexample=bad)
    t1, t2 = ENGINES["len4_t1"][0](n_max), ENGINES["len4_t2"][0](n_max)
    bad_n = next((n for n in range(1, n_max + 1) if t1.finals[n] != t2.finals[n]), None)
    rep.add("len4_t1 and len4_t2 finals agree", bad_n is None,
            counterexample=None if bad_n is None else {"n": bad_n})
    return rep


def _check_bijection(rep: Report, name: str, fn: Callable, n_max: int,
                     invariant: Callable[[tuple, tuple], bool]) -> None:
    for n in range(1, n_max + 1):
        perms = list(enumerate_perms(n))
        images = [fn(s) for s in perms]
        if len(set(images)) != len(perms):
            rep.add(f"{name} is a bijection", False, counterexample={"n": n})
            return
        for s, im in zip(perms, images):
            if not invariant(s, im):
                rep.add(f"{name} preserves its statistics", False,
                        counterexample={"sigma": format_perm(s), "image": format_perm(im)})
                return
    rep.add(f"{name} is a statistic-preserving bijection", True, f"n <= {n_max}")


def suite_bijections(n_max: int, jobs: int = 1) -> Report:
    rep = Report(f"bijections n<={n_max}")
    un13_2 = parse_pattern("13[2]")
    one_un23 = parse_pattern("1[2]3")
    _check_bijection(rep, "theta_a", theta_a, n_max, lambda s, im: (
        pmp(s, UN123) == pmp(im, UN132) and last_ascent(s) == last_descent(im)))
    _check_bijection(rep, "theta_b", theta_b, n_max, lambda s, im: (
        pmp(s, one_un23) == pmp(im, un13_2) and s.index(1) == im.index(1)))

    bad = None
    for n in range(1, n_max + 1):
        for m in ims_enumerate(n):
            sigma = phi(m)
            if len(match_positions(sigma, UN132)) != 1 or phi_inverse(sigma) != m:
                bad = {"marked": str(m), "image": format_perm(sigma)}
                break
        if bad:
            break
    rep.add("phi_inverse(phi(m)) == m on marked 132-avoiders", bad is None, f"n <= {n_max}", bad)

    bad = None
    for n in range(1, n_max + 1):
        perms = batch.perm_array(n)
        ones = np.flatnonzero(batch.popcount(batch.position_masks(perms, UN132)) == 1)
        count = sum(1 for _ in ims_enumerate(n - 1)) if n >= 1 else 0
        if count != len(ones):
            bad = {"n": n, "marked": count, "qualifying": int(len(ones))}
            break
        for row in ones:
            sigma = tuple(int(v) for v in perms[row])
            if phi(phi_inverse(sigma)) != sigma:
                bad = {"sigma": format_perm(sigma)}
                break
        if bad:
            break
    rep.add("phi(phi_inverse(sigma)) == sigma when pmp_[1]32(sigma) == 1", bad is None,
            f"n <= {n_max}", bad)
    return rep


def suite_ferrers(n_max: int, jobs: int = 1) -> Report:
    rep = Report(f"ferrers n<={n_max}")
    bad = None
    for tau in ((1, 2), (2, 1), (1, 2, 3)):
        for n in range(1, n_max + 1):
            for sigma in enumerate_perms(n):
                q, board, f = decompose(sigma, tau)
                cells = dominant_cells(sigma, tau)
                closed = all((i - 1, j) in cells or i == 1 for i, j in cells) and \
                    all((i, j - 1) in cells or j == 1 for i, j in cells)
                if not closed or dominant_from_nd(q, tau) != cells or not board.is_fillable \
                        or phi_board(f, q, tau) != sigma:
                    bad = {"sigma": format_perm(sigma), "tau": format_perm(tau)}
                    break
            if bad:
                break
        if bad:
            break
    rep.add("dominant region is Ferrers-shaped, recoverable from Q, and sigma round-trips",
            bad is None, f"tau in 12, 21, 123; n <= {n_max}", bad)

    bad = None
    for k in range(0, n_max + 1):
        for board in all_fillable_boards(k):
            expected = product_poly(board)
            if filling_distribution(board, PATTERN_12) != expected or \
                    filling_distribution(board, PATTERN_21) != expected:
                bad = {"board": str(board)}
                break
        if bad:
            break
    rep.add("product formula for 1[2] and [2]1 on every fillable board", bad is None,
            f"k <= {n_max}", bad)

    for tail in LENGTHN_TAILS:
        sub = Report("")
        for n in range(1, n_max + 1):
            sub.extend(verify_lengthn(tail, n, jobs=jobs, limit=max(n_max, 8)))
        fail = sub.first_failure
        rep.add(f"lengthn tail={''.join(map(str, tail))}", fail is None, f"n <= {n_max}",
                None if fail is None else {"check": fail.name, **(fail.counterexample or {})})
    return rep


def suite_symmetry(n_max: int, jobs: int = 1) -> Report:
    rep = Report(f"symmetry n<={n_max}")
    bad = None
    for n in range(1, n_max + 1):
        perms = batch.perm_array(n)
        images = {t: batch.transform_block(perms, t) for t in Symmetry}
        for k in range(1, min(4, n) + 1):
            for tau in all_marked_patterns(k):
                base = batch.popcount(batch.position_masks(perms, tau))
                for t in Symmetry:
                    moved = batch.popcount(batch.position_masks(images[t], tau.transform(t)))
                    if not np.array_equal(base, moved):
                        row = int(np.flatnonzero(base != moved)[0])
                        bad = {"sigma": _row(perms, row), "tau": str(tau),
                               "symmetry": t.value}
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add("pmp_tau(sigma) == pmp_t(tau)(t(sigma)) for all eight symmetries", bad is None,
            f"k <= 4, n <= {n_max}", bad)
    sizes = {k: len(orbit_representatives(k)) for k in (1, 2, 3, 4)}
    rep.add("orbit counts of S_k^* are 1, 1, 4, 16", sizes == {1: 1, 2: 1, 3: 4, 4: 16}, str(sizes))
    group_ok = all(t.compose(t.inverse) is Symmetry.IDENTITY for t in Symmetry) and \
        len({a.compose(b) for a in Symmetry for b in Symmetry}) == 8
    rep.add("symmetries form a group of order 8", group_ok)
    return rep


def suite_special(n_max: int, jobs: int = 1) -> Report:
    rep = Report(f"special n<={n_max}")
    lim = max(n_max + 1, 8)
    bad = next((n for n in range(1, n_max + 1)
                if dist_brute(n, UN123, limit=lim, jobs=jobs)[0] != catalan(n)), None)
    rep.add("constant term of P_n([1]23) is the Catalan number", bad is None, f"n <= {n_max}",
            None if bad is None else {"n": bad})

    bad = None
    for k in (3, 4):
        for tau in orbit_representatives(k):
            for n in range(1, min(n_max, 7) + 1):
                if dist_brute(n, tau, limit=lim, jobs=jobs)[0] != avoider_count(n, tau.pattern):
                    bad = {"tau": str(tau), "n": n}
                    break
            if bad:
                break
        if bad:
            break
    rep.add("constant term counts avoiders of the underlying pattern", bad is None,
            f"n <= {min(n_max, 7)}", bad)

    bad = None
    for k in (3, 4):
        for tau in orbit_representatives(k):
            for n in range(1, n_max + 1):
                p = dist_brute(n, tau, limit=lim, jobs=jobs)
                if (p.degree, p.leading) != expected_leading(n, k):
                    bad = {"tau": str(tau), "n": n, "got": str(p)}
                    break
            if bad:
                break
        if bad:
            break
    rep.add("leading term is (n-k+1)! x^(n-k+1)", bad is None, f"n <= {n_max}", bad)

    bad = next((n for n in range(1, n_max) if
                dist_brute(n + 1, UN132, limit=lim, jobs=jobs)[1] != sum_inversions_132(n)), None)
    rep.add("x-coefficient of P_{n+1}([1]32) sums inversions over 132-avoiders", bad is None,
            f"n <= {n_max - 1}", None if bad is None else {"n": bad})
    return rep


def suite_multipattern(n_max: int, jobs: int = 1) -> Report:
    rep = Report(f"multipattern n<={n_max}")
    tail_sets = [[(3, 4)], [(3, 4), (4, 3)], list(itertools.permutations((3, 4, 5)))[:3],
                 list(itertools.permutations((3, 4, 5)))]
    for tails in tail_sets:
        sub = Report("")
        for n in range(1, n_max + 1):
            sub.extend(verify_multipattern(tails, n, jobs=jobs, limit=max(n_max, 8)))
        fail = sub.first_failure
        label = ",".join("".join(map(str, t)) for t in tails)
        rep.add(f"Gamma distributions agree for tails {label}", fail is None, f"n <= {n_max}",
                None if fail is None else fail.counterexample)

    bad = None
    specs = [MmpSpec(*s) for s in itertools.product(range(4), repeat=4) if 0 < sum(s) <= 3]
    for n in range(1, n_max + 1):
        perms = batch.perm_array(n)
        for spec in specs:
            direct = batch.mmp_values(perms, spec)
            via = batch.popcount(batch.gamma_masks(perms, mmp_to_gamma(spec)))
            if not np.array_equal(direct, via):
                row = int(np.flatnonzero(direct != via)[0])
                bad = {"sigma": _row(perms, row), "spec": str(spec)}
                break
        if bad:
            break
    rep.add("mmp count equals Gamma count of its pattern set", bad is None,
            f"a+b+c+d <= 3, n <= {n_max}", bad)
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "recursions": suite_recursions,
    "bijections": suite_bijections,
    "ferrers": suite_ferrers,
    "symmetry": suite_symmetry,
    "special": suite_special,
    "multipattern": suite_multipattern,
}


def run_suite(name: str, n_max: int, jobs: int = 1) -> Report:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return suite(n_max, jobs)
