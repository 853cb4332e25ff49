"""Command line interface.

Subcommands: compute, scan, polytope, oracle.  Exit codes: 0 success,
1 bad input (polynomial or flags), 2 verification mismatch, 3 oracle
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .base_p import render_positional
from .engine import Binomial, FptResult, fpt, fpt_limit
from .oracle import BudgetExceeded, NuQuery, nu_monomial, nu_naive, nu_semigroup, verify
from .parsing import ParseError, parse, parse_monomial
from .polytope import build, maximal_point, point_to_json, vertices
from .primes import is_prime, primes_between
from .svg import polytope_figure

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise _CliError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="binomial-fpt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="threshold of one binomial at one prime")
    p_compute.add_argument("poly")
    p_compute.add_argument("--prime", type=int, required=True)
    p_compute.add_argument("--json", action="store_true")
    p_compute.add_argument(
        "--verify",
        type=int,
        metavar="E",
        help="cross-check nu at level E against the oracles",
    )

    p_scan = sub.add_parser("scan", help="threshold across a range of primes")
    p_scan.add_argument("poly")
    p_scan.add_argument("--primes", required=True, metavar="LO..HI")
    p_scan.add_argument("--mod", type=int)
    p_scan.add_argument("--residue", type=int)
    p_scan.add_argument("--json", action="store_true")

    p_poly = sub.add_parser("polytope", help="splitting polytope data or figure")
    p_poly.add_argument("poly")
    p_poly.add_argument("--svg", metavar="PATH")
    p_poly.add_argument("--prime", type=int)
    p_poly.add_argument("--level", type=int)
    p_poly.add_argument("--json", action="store_true")

    p_oracle = sub.add_parser("oracle", help="brute-force nu computation")
    p_oracle.add_argument("poly")
    p_oracle.add_argument("--prime", type=int, required=True)
    p_oracle.add_argument("--level", type=int, required=True)
    p_oracle.add_argument(
        "--method", choices=["semigroup", "naive", "both"], default="both"
    )
    p_oracle.add_argument("--json", action="store_true")
    return parser


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise _CliError(f"{p} is not prime")


def _print_result(g: Binomial, p: int, result: FptResult, limit: Fraction) -> None:
    print(f"fpt = {result.value}")
    print(f"    = {render_positional(result.value, p)}")
    print(f"case: {result.case.value}")
    if result.eta is not None:
        print(f"eta = ({result.eta.s1}, {result.eta.s2}), |eta| = {result.eta_sum}")
    if result.carry_free is not None:
        print("L = inf" if result.carry_free else f"L = {result.L}, d = {result.d}")
    if result.epsilon is not None:
        print(f"epsilon = {result.epsilon}")
    if result.monomial_fpt is not None:
        print(f"monomial part: {result.monomial_fpt}")
    print(f"characteristic-zero limit (log canonical threshold): {limit}")


def _cmd_compute(args) -> int:
    _require_prime(args.prime)
    g = parse(args.poly, args.prime)
    result = fpt(g, args.prime)
    limit = fpt_limit(g)
    report = None
    if args.verify is not None:
        if args.verify < 1:
            raise _CliError("--verify level must be at least 1")
        report = verify(NuQuery(g, args.prime, args.verify), result)
    if args.json:
        print(json.dumps(jsonio.result_to_json(g, args.prime, result, limit, report)))
    else:
        _print_result(g, args.prime, result, limit)
        if report is not None:
            naive = "skipped" if report.naive_nu is None else str(report.naive_nu)
            print(
                f"verify e={args.verify}: predicted nu = {report.predicted_nu}, "
                f"semigroup = {report.semigroup_nu}, naive = {naive} -> "
                + ("match" if report.match else "MISMATCH")
            )
    if report is not None and not report.match:
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_scan(args) -> int:
    try:
        lo_text, hi_text = args.primes.split("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise _CliError("--primes expects LO..HI") from None
    if (args.mod is None) != (args.residue is None):
        raise _CliError("--mod and --residue go together")
    g = parse(args.poly)
    primes = primes_between(lo, hi)
    if args.mod is not None:
        if args.mod < 1:
            raise _CliError("--mod must be positive")
        primes = [p for p in primes if p % args.mod == args.residue % args.mod]
    if not primes:
        raise _CliError("empty prime range")
    limit = fpt_limit(g)
    rows = [(p, fpt(g, p)) for p in primes]
    if args.json:
        congruence = None if args.mod is None else (args.mod, args.residue)
        print(json.dumps(jsonio.scan_to_json(g, lo, hi, congruence, limit, rows)))
        return EXIT_OK
    width = max(len(str(p)) for p, _ in rows)
    for p, result in rows:
        print(f"p = {p:>{width}}  fpt = {result.value}  [{result.case.value}]")
    hits = sum(1 for _, r in rows if r.value == limit)
    print(
        f"limit {limit} attained at {hits} of {len(rows)} primes "
        f"(characteristic-zero limit / log canonical threshold)"
    )
    return EXIT_OK


def _cmd_polytope(args) -> int:
    g = parse(args.poly)
    if args.prime is not None:
        _require_prime(args.prime)
    matrix = build(g.a, g.b)
    if args.svg:
        figure = polytope_figure(g, args.prime, args.level)
        with open(args.svg, "w", encoding="utf-8") as handle:
            handle.write(figure)
        print(f"wrote {args.svg}")
    if args.json or not args.svg:
        verts = vertices(matrix)
        mp = maximal_point(matrix)
        data = {
            "rows": [[a, b] for a, b in matrix.rows],
            "vertices": [point_to_json(v) for v in verts],
            "maximal_point": None if mp is None else point_to_json(mp.point),
            "eta_sum": None if mp is None else str(mp.sum),
        }
        print(json.dumps(data))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    _require_prime(args.prime)
    if args.level < 1:
        raise _CliError("--level must be at least 1")
    semigroup = naive = None
    if len([t for t in args.poly.split("+") if t.strip()]) == 1:
        _, exponents = parse_monomial(args.poly)
        nu = nu_monomial(exponents, args.prime, args.level)
        if args.method in ("semigroup", "both"):
            semigroup = nu
        if args.method in ("naive", "both"):
            naive = nu
        g = None
    else:
        g = parse(args.poly, args.prime)
        query = NuQuery(g, args.prime, args.level)
        if args.method in ("semigroup", "both"):
            semigroup = nu_semigroup(query)
        if args.method in ("naive", "both"):
            naive = nu_naive(query)
    if args.json:
        source = args.poly.strip() if g is None else None
        print(
            json.dumps(
                jsonio.oracle_to_json(g, args.prime, args.level, semigroup, naive, source)
            )
        )
    else:
        if semigroup is not None:
            print(f"semigroup nu = {semigroup}")
        if naive is not None:
            print(f"naive nu = {naive}")
        if semigroup is not None and naive is not None:
            print("agreement" if semigroup == naive else "MISMATCH")
    if semigroup is not None and naive is not None and semigroup != naive:
        return EXIT_MISMATCH
    return EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "scan": _cmd_scan,
    "polytope": _cmd_polytope,
    "oracle": _cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (_CliError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main(None))
