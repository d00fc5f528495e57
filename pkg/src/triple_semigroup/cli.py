"""Unified CLI entry point for triple-semigroup."""

import argparse
import sys

from dotenv import load_dotenv
from rich.markup import escape

from .core.console import configure_logging, console, err_console
from .core.errors import SemigroupError
from .core.generators import validate

EXIT_OK = 0
EXIT_USAGE = 2


def _emit(report, as_json):
    if as_json:
        print(report.to_json())
    else:
        from .runners.compute import render_report

        render_report(report, console)


def cmd_compute(args):
    from .runners.compute import triple_report

    gens = validate(args.generators)
    if gens.m != 3:
        raise SemigroupError(f"compute expects three generators, got {gens.m}")
    _emit(triple_report(gens, with_checks=not args.no_checks), args.json)
    return EXIT_OK


def cmd_pair(args):
    from .runners.compute import pair_report

    gens = validate(args.generators)
    if gens.m != 2:
        raise SemigroupError(f"pair expects two generators, got {gens.m}")
    _emit(pair_report(gens, with_matrix=args.matrix), args.json)
    return EXIT_OK


def cmd_xi(args):
    from .invariants.johnson import diagonal_bound
    from .runners.sweep import main as sweep_main

    gens = validate(args.generators)
    if gens.m != 3:
        raise SemigroupError(f"xi expects three generators, got {gens.m}")
    b_max = args.b_max if args.b_max is not None else diagonal_bound(gens, args.k)
    return sweep_main(gens, args.k, args.b_min, b_max, args.csv, args.numeric)


def cmd_verify(args):
    from .runners.verify import main as verify_main

    if args.generators and args.random is not None:
        raise SemigroupError("give either a triple or --random N, not both")
    if args.generators:
        gens = validate(args.generators)
        if gens.m != 3:
            raise SemigroupError(f"verify expects three generators, got {gens.m}")
        return verify_main(gens=gens)
    if args.random is None:
        raise SemigroupError("give a triple or --random N")
    return verify_main(random=args.random, max_d=args.max_d, seed=args.seed)


def cmd_batch(args):
    from .runners.batch import main as batch_main

    return batch_main(args.file, jobs=args.jobs)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tsg", description="Invariants of three-generated numerical semigroups"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="F, G, J, Q and the Johnson matrix of a triple")
    compute.add_argument("generators", nargs=3, type=int, metavar="d")
    compute.add_argument("--json", action="store_true", help="Print the report as JSON")
    compute.add_argument("--no-checks", action="store_true", help="Skip the oracle checks")

    pair = sub.add_parser("pair", help="Sylvester F and G of a coprime pair")
    pair.add_argument("generators", nargs=2, type=int, metavar="d")
    pair.add_argument("--json", action="store_true", help="Print the report as JSON")
    pair.add_argument("--matrix", action="store_true", help="Include the sigma(p, q) grid")

    xi = sub.add_parser("xi", help="CSV sweep of Xi_k over b")
    xi.add_argument("generators", nargs=3, type=int, metavar="d")
    xi.add_argument("--k", type=int, required=True, choices=(1, 2, 3), help="Axis")
    xi.add_argument("--b-min", type=int, default=1)
    xi.add_argument("--b-max", type=int, default=None, help="Defaults to the a_kk bound")
    xi.add_argument("--csv", metavar="PATH", help="Write here instead of stdout")
    xi.add_argument("--numeric", action="store_true", help="Add a contour-quadrature column")

    verify = sub.add_parser("verify", help="Check the formulas against the brute-force oracle")
    verify.add_argument("generators", nargs="*", type=int, metavar="d")
    verify.add_argument("--random", type=int, metavar="N", help="Verify N random triples")
    verify.add_argument("--max-d", type=int, default=150, help="Largest generator to draw")
    verify.add_argument("--seed", type=int, default=0)

    batch = sub.add_parser("batch", help="One JSON report per line of a file")
    batch.add_argument("file")
    batch.add_argument("--jobs", type=int, default=None, help="Worker processes (TSG_JOBS)")
    return parser


def main(argv=None):
    load_dotenv()

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    configure_logging(args.verbose)

    handlers = {
        "compute": cmd_compute,
        "pair": cmd_pair,
        "xi": cmd_xi,
        "verify": cmd_verify,
        "batch": cmd_batch,
    }
    try:
        return handlers[args.command](args)
    except (SemigroupError, OSError) as e:
        err_console.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main() or 0)
