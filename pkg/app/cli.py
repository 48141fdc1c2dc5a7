"""Command-line harness: ``python -m app.cli check even --k 3``.

Exit status is 0 when every verdict agrees with its theorem, 1 when any
disagrees and 2 when the input is rejected.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv

from .artin import normal_form, parse_word
from .config import configure_logging, get_settings
from .errors import ArtinToolkitError
from .graph_spec import parse_graph_spec
from .models import ClaimsReport, ConjectureReport, CorollaryReport, VerdictTable
from .surface import curve_graph_from_coxeter, surface_of
from .verifier import RelationVerifier

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="app.cli",
                                     description="Verify Artin relations among Dehn twists of curve chains")
    parser.add_argument("--json", action="store_true", help="print the full report as JSON")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="run a theorem's verdict table")
    theorems = check.add_subparsers(dest="theorem", required=True)

    even = theorems.add_parser("even", help="x = T_0, y = T_1..T_k; period 2k+4")
    even.add_argument("--k", type=int, required=True)
    even.add_argument("--nmax", type=int)
    even.add_argument("--allow-degenerate", action="store_true",
                      help="run k=1 as a negative control")

    odd = theorems.add_parser("odd", help="x = A_1..A_k, y = B_1..B_k; period 2k+1")
    odd.add_argument("--k", type=int, required=True)
    odd.add_argument("--nmax", type=int)

    fold = theorems.add_parser("fold", help="LCM-homomorphism images; period k (A) or 2k-2 (D)")
    fold.add_argument("--family", choices=["A", "D"], required=True)
    fold.add_argument("--k", type=int, required=True)
    fold.add_argument("--nmax", type=int)

    conjecture = theorems.add_parser("conjecture", help="every ordering of T_1..T_k")
    conjecture.add_argument("--k", type=int, required=True)
    conjecture.add_argument("--nmax", type=int)
    conjecture.add_argument("--allow-unverified", action="store_true")

    corollary = theorems.add_parser("corollary", help="(a^3 b)^3 = (b a^3)^3 in A+(A_2)")

    claims = theorems.add_parser("claims", help="reduced equations of the inductive proofs")
    claims.add_argument("--parity", choices=["even", "odd"], required=True)
    claims.add_argument("--k", type=int, required=True)

    surface = commands.add_parser("surface", help="genus and boundary of the curves' neighborhood")
    surface.add_argument("--graph", required=True)

    nf = commands.add_parser("nf", help="left-greedy normal form of a positive word")
    nf.add_argument("--graph", required=True)
    nf.add_argument("--word", required=True)

    # allow --json after the subcommand as well
    for sub in (even, odd, fold, conjecture, claims, surface, nf, corollary):
        sub.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return parser


def _print_table(table: VerdictTable) -> None:
    sigma = f" sigma={table.sigma}" if table.sigma is not None else ""
    print(f"{table.theorem.value} k={table.k}{sigma} period={table.period} x=[{table.x}] y=[{table.y}]")
    for row in table.rows:
        mark = "ok" if row.agree else "MISMATCH"
        print(f"  n={row.n:3d} holds={row.relation_holds!s:5} expected={row.expected!s:5} {mark}")
    for failure in table.cross_check_failures:
        print(f"  cross-check: {failure}")
    if table.lcm_report is not None:
        print(f"  lcm-homomorphism h={table.lcm_report.h} passed={table.lcm_report.passed}")
    print(f"  passed={table.passed} ({table.wall_time:.2f}s)")


def _print_report(report) -> None:
    if isinstance(report, VerdictTable):
        _print_table(report)
    elif isinstance(report, ConjectureReport):
        for table in report.tables:
            _print_table(table)
        print(f"{report.permutations_checked} orderings checked, all_pass={report.all_pass}")
    elif isinstance(report, ClaimsReport):
        for row in report.base_rows + report.rows:
            mark = "ok" if row.agree else "MISMATCH"
            print(f"  {row.claim} i={row.index} l={row.length}: relation={row.relation_holds} "
                  f"reduced={row.reduced_holds} [{row.reduced_equation}] {mark}")
        print(f"claims {report.parity} k={report.k} all_agree={report.all_agree}")
    elif isinstance(report, CorollaryReport):
        print(f"(a^3 b)^3 = (b a^3)^3: {report.relation_length_6}")
        for r, holds in report.shorter_relations.items():
            print(f"(a^3 b)^{r} = (b a^3)^{r}: {holds}")
        print(f"D4 relation: {report.d4_relation}, capped images match: {report.capped_images_match}")
        print(f"passed={report.passed}")


def run_check(args, verifier: RelationVerifier):
    if args.theorem == "even":
        return verifier.check_even_chain(args.k, args.nmax, allow_degenerate=args.allow_degenerate)
    if args.theorem == "odd":
        return verifier.check_odd_chain(args.k, args.nmax)
    if args.theorem == "fold":
        return verifier.check_fold(args.family, args.k, args.nmax)
    if args.theorem == "conjecture":
        return verifier.check_conjecture(args.k, args.nmax, allow_unverified=args.allow_unverified)
    if args.theorem == "claims":
        return verifier.check_claims(args.parity, args.k)
    return verifier.check_corollary()


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
        configure_logging(settings.log_level)

        if args.command == "surface":
            g = parse_graph_spec(args.graph)
            surface = surface_of(curve_graph_from_coxeter(g))
            output = {"graph": g.to_spec(), **surface.model_dump()}
            print(json.dumps(output, indent=2) if args.json
                  else f"{g.name}: genus={surface.genus} boundary={surface.boundary} chi={surface.chi}")
            return 0

        if args.command == "nf":
            g = parse_graph_spec(args.graph)
            form = normal_form(parse_word(g, args.word))
            factors = [" ".join(map(str, f)) for f in form.factor_words()]
            if args.json:
                print(json.dumps({"graph": g.name, "infimum": form.infimum, "factors": factors}, indent=2))
            else:
                print(" | ".join(f"({f})" for f in factors) or "(identity)")
            return 0

        report = run_check(args, RelationVerifier(settings))
    except ArtinToolkitError as e:
        logger.debug("Rejected input", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 2

    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        _print_report(report)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
