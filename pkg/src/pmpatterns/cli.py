"""
Command-line interface.

Patterns are typed with the marked entry in brackets: ``1[2]3`` is 123
marked at its middle entry.  A set of patterns is written ``{1[2]34,1[2]43}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from .bijections import parse_marked_avoider, phi, phi_inverse, theta_a, theta_b
from .distributions import BRUTE_DEFAULT_N, classify, dist_brute, dist_gamma, dist_mmp
from .ferrers import (
    PATTERN_12, PATTERN_21, decompose, enumerate_fillings, filling_distribution, parse_board,
    product_poly, verify_lengthn,
)
from .patterns import mmp_count, parse_mmp, parse_pattern, parse_pattern_set, pmp
from .perms import HARD_CAP, format_perm, last_ascent, last_descent, max_n, parse_perm
from .poly import DistPoly
from .report import Report
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser", "render_polys"]

# sizes at which each suite finishes in seconds on one core
VERIFY_DEFAULT_N = {"recursions": 7, "bijections": 7, "ferrers": 6,
                    "symmetry": 7, "special": 8, "multipattern": 7}

EPILOG = f"""\
pattern grammar: digits with one bracketed entry marking the underlined
position, e.g. [1]23, 1[2]3, 13[4]2.  Pattern sets: {{1[2]34,1[2]43}}.
Brute force stops at n = {BRUTE_DEFAULT_N} unless --limit-override raises it
(hard cap {HARD_CAP}; the PMP_MAX_N environment variable moves the cap).
Exit status: 0 when every requested check passes, 1 when a check fails,
2 on bad input.
"""


def render_polys(label: str, polys: dict[int, DistPoly], fmt: str) -> str:
    """Render ``{n: polynomial}`` as text lines, JSON, or padded CSV."""
    if fmt == "json":
        return json.dumps({"pattern": label,
                           "polynomials": {str(n): p.to_json() for n, p in sorted(polys.items())}},
                          indent=2)
    if fmt == "csv":
        width = max((p.degree + 1 for p in polys.values()), default=1)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n"] + [f"coeff{i}" for i in range(width)])
        for n, p in sorted(polys.items()):
            writer.writerow([n] + [p[i] for i in range(width)])
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"n={n}: {p}" for n, p in sorted(polys.items()))


def _limit(args) -> int:
    return args.limit_override if args.limit_override is not None else BRUTE_DEFAULT_N


def _n_range(args) -> range:
    lo = args.n if args.only else 1
    return range(lo, args.n + 1)


def cmd_dist(args) -> int:
    text = args.pattern.strip()
    if text.startswith("{"):
        gamma = parse_pattern_set(text)
        polys = {n: dist_gamma(n, gamma, limit=_limit(args), jobs=args.jobs) for n in _n_range(args)}
        label = str(gamma)
    else:
        tau = parse_pattern(text)
        polys = {n: dist_brute(n, tau, limit=_limit(args), jobs=args.jobs) for n in _n_range(args)}
        label = str(tau)
    print(render_polys(label, polys, args.format))
    return 0


def cmd_classify(args) -> int:
    if args.k not in (1, 2, 3, 4):
        raise ValueError(f"classify supports k in 1..4, got {args.k}")
    n = args.n if args.n is not None else BRUTE_DEFAULT_N
    res = classify(args.k, n, modulo_symmetry=not args.all, limit=args.limit_override, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps({
            "k": res.k, "n_max": res.n_max, "modulo_symmetry": res.modulo_symmetry,
            "status": res.status,
            "classes": [[str(t) for t in c] for c in res.classes],
            "witness": {str(c[0]): {str(n + 1): p.to_json() for n, p in enumerate(res.witness[c[0]])}
                        for c in res.classes},
        }, indent=2))
        return 0
    print(f"{len(res.classes)} classes for k={res.k} ({res.status}"
          f"{', one pattern per symmetry orbit' if res.modulo_symmetry else ''})")
    for c in res.classes:
        print("  {" + ", ".join(map(str, c)) + "}  " + f"P_{n} = {res.witness[c[0]][-1]}")
    return 0


def cmd_verify(args) -> int:
    n = args.n if args.n is not None else VERIFY_DEFAULT_N[args.suite]
    report = run_suite(args.suite, n, jobs=args.jobs)
    _print_report(report, args.format)
    return 0 if report.passed else 1


def _print_report(report: Report, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render())


def cmd_mmp(args) -> int:
    spec = parse_mmp(args.spec)
    if args.dist is not None:
        polys = {n: dist_mmp(n, spec, limit=_limit(args), jobs=args.jobs)
                 for n in range(1, args.dist + 1)}
        print(render_polys(str(spec), polys, args.format))
        return 0
    if args.sigma is None:
        raise ValueError("give a permutation or --dist N")
    sigma = parse_perm(args.sigma)
    count = mmp_count(sigma, spec)
    if args.format == "json":
        print(json.dumps({"spec": str(spec), "sigma": format_perm(sigma), "mmp": count}))
    else:
        print(count)
    return 0


def cmd_theta(args, fn, pats, stat_names) -> int:
    sigma = parse_perm(args.sigma)
    image = fn(sigma)
    p_in, p_out = (parse_pattern(p) for p in pats)
    if args.format == "json":
        print(json.dumps({"sigma": format_perm(sigma), "image": format_perm(image),
                          f"pmp_{p_in}": pmp(sigma, p_in), f"pmp_{p_out}": pmp(image, p_out)}))
    else:
        print(format_perm(image))
        print(f"pmp_{p_in}(sigma) = {pmp(sigma, p_in)}, pmp_{p_out}(image) = {pmp(image, p_out)}; "
              f"{stat_names(sigma, image)}")
    return 0


def cmd_theta_a(args) -> int:
    return cmd_theta(args, theta_a, ("[1]23", "[1]32"),
                     lambda s, im: f"last ascent {last_ascent(s)}, last descent {last_descent(im)}")


def cmd_theta_b(args) -> int:
    return cmd_theta(args, theta_b, ("1[2]3", "13[2]"),
                     lambda s, im: f"1 at position {s.index(1) + 1} in both")


def cmd_phi(args) -> int:
    if args.inverse:
        m = phi_inverse(parse_perm(args.value))
        out = str(m)
    else:
        out = format_perm(phi(parse_marked_avoider(args.value)))
    print(json.dumps({"result": out}) if args.format == "json" else out)
    return 0


def cmd_ferrers(args) -> int:
    if args.action == "board":
        board = parse_board(args.value)
        prod = product_poly(board)
        f12, f21 = filling_distribution(board, PATTERN_12), filling_distribution(board, PATTERN_21)
        count = sum(1 for _ in enumerate_fillings(board))
        ok = prod == f12 == f21 and count == prod(1)
        if args.format == "json":
            print(json.dumps({"board": str(board), "fillings": count, "product": prod.to_json(),
                              "sum_1[2]": f12.to_json(), "sum_[2]1": f21.to_json(), "passed": ok}))
        else:
            print(f"board {board}: {count} fillings")
            print(f"  product formula  {prod}")
            print(f"  sum over 1[2]    {f12}")
            print(f"  sum over [2]1    {f21}")
        return 0 if ok else 1
    if args.action == "decompose":
        sigma = parse_perm(args.value)
        tau = parse_perm(args.tau)
        q, board, f = decompose(sigma, tau)
        cells = sorted(q.cells, reverse=True)
        if args.format == "json":
            print(json.dumps({"sigma": format_perm(sigma), "tau": format_perm(tau),
                              "Q": [list(c) for c in cells], "board": str(board),
                              "filling": f.to_json(), "filling_perm": format_perm(f.as_permutation())}))
        else:
            print("Q (row, column): " + " ".join(f"({r},{c})" for r, c in cells))
            print(f"board: {board}")
            print(f"filling by column: {format_perm(f.as_permutation())}")
        return 0
    tail = tuple(int(ch) for ch in args.value.replace(",", ""))
    n = args.n if args.n is not None else BRUTE_DEFAULT_N
    report = Report(f"lengthn tail={args.value} n<={n}")
    for m in range(1, n + 1):
        report.extend(verify_lengthn(tail, m, limit=_limit(args), jobs=args.jobs))
    _print_report(report, args.format)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for brute force")
    common.add_argument("--limit-override", type=int, default=None, metavar="N",
                        help=f"allow brute force up to N (default {BRUTE_DEFAULT_N})")

    parser = argparse.ArgumentParser(prog="pmp", description="Positional marked patterns in permutations.",
                                     epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("dist", parents=[common], help="distribution polynomials P_n for n = 1..N")
    p.add_argument("pattern", help="marked pattern like 1[2]3, or a set {1[2]34,1[2]43}")
    p.add_argument("--n", type=int, default=BRUTE_DEFAULT_N)
    p.add_argument("--only", action="store_true", help="print only n = N")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("classify", parents=[common], help="group marked patterns of length k")
    p.add_argument("k", type=int)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--all", action="store_true", help="list every pattern, not one per symmetry orbit")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mmp", parents=[common], help="quadrant marked mesh statistic")
    p.add_argument("spec", help="a,b,c,d or mmp(a,b,c,d)")
    p.add_argument("sigma", nargs="?")
    p.add_argument("--dist", type=int, metavar="N", help="distribution over S_1..S_N instead")
    p.set_defaults(func=cmd_mmp)

    p = sub.add_parser("theta-a", parents=[common], help="bijection carrying pmp_[1]23 to pmp_[1]32")
    p.add_argument("sigma")
    p.set_defaults(func=cmd_theta_a)

    p = sub.add_parser("theta-b", parents=[common], help="bijection carrying pmp_1[2]3 to pmp_13[2]")
    p.add_argument("sigma")
    p.set_defaults(func=cmd_theta_b)

    p = sub.add_parser("phi", parents=[common],
                       help="marked 132-avoider (e.g. 6745*82*13) to a permutation with one [1]32-match")
    p.add_argument("value")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("ferrers", parents=[common], help="Ferrers-board reduction")
    p.add_argument("action", choices=("board", "decompose", "lengthn"))
    p.add_argument("value", help="board like 5,5,3,3,1; a permutation; or a tail like 34")
    p.add_argument("--tau", default="12", help="suffix pattern for decompose (default 12)")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_ferrers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "jobs", 1) < 1:
            raise ValueError("--jobs must be at least 1")
        for attr in ("n", "dist", "limit_override"):
            val = getattr(args, attr, None)
            if val is not None and val > max_n():
                raise ValueError(f"--{attr.replace('_', '-')} {val} exceeds the hard cap {max_n()}")
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
