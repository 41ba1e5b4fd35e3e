"""Command-line surface.

Exit codes: 0 success, 1 parse error, 2 precondition violation (e.g. an
ideal that is not quasi-equigenerated), 3 resource cap exceeded.  Output
is assembled fully before printing, so fatal errors never leave partial
reports behind.
"""

import argparse
import os
import sys
from pathlib import Path

from .errors import ParseError, PreconditionError, ResourceCapError
from .formats import dump_json, parse_graph, parse_ideal
from .reports import graph_report, ideal_report, matroid_report, render_table
from .verify import run_verify

EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_RESOURCE = 3


def _common_flags(parser):
    parser.add_argument(
        "--format", choices=["json", "table"], default="json",
        help="output format (json is the stable machine format)",
    )
    parser.add_argument(
        "--no-timing", action="store_true", help="omit timing metadata"
    )
    parser.add_argument(
        "--cap", type=int, default=None,
        help="resource guard on enumerations (default 10^6; FREIMAN_CAP overrides)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="freiman",
        description=(
            "Decide Freiman ideals by exact sumset arithmetic and classify "
            "Freiman graphs and cycle matroids."
        ),
    )
    sub = parser.add_subparsers(dest="topic", required=True)

    ideal = sub.add_parser("ideal", help="monomial-ideal commands")
    ideal_sub = ideal.add_subparsers(dest="action", required=True)
    analyze = ideal_sub.add_parser("analyze", help="fiber-cone analysis of an ideal")
    analyze.add_argument("file", help="ideal file (monomial list or JSON vectors)")
    analyze.add_argument(
        "--max-power", type=int, default=4, metavar="K",
        help="compute the generator series up to I^K (default 4)",
    )
    _common_flags(analyze)

    graph = sub.add_parser("graph", help="edge-ideal commands")
    graph_sub = graph.add_subparsers(dest="action", required=True)
    gclassify = graph_sub.add_parser("classify", help="Freiman-graph classification")
    gclassify.add_argument("file", help="graph file (JSON or 'p n m' edge list)")
    _common_flags(gclassify)

    matroid = sub.add_parser("matroid", help="cycle-matroid commands")
    matroid_sub = matroid.add_subparsers(dest="action", required=True)
    mclassify = matroid_sub.add_parser("classify", help="Freiman-matroid classification")
    mclassify.add_argument("file", help="graph file (JSON or 'p n m' edge list)")
    mclassify.add_argument(
        "--hvector", action="store_true",
        help="also compute the base-ring h-polynomial and regularity",
    )
    _common_flags(mclassify)

    verify = sub.add_parser(
        "verify", help="cross-validate classifiers against the numeric oracle"
    )
    verify.add_argument("--max-vertices", type=int, default=6, metavar="N")
    verify.add_argument("--max-edges", type=int, default=6, metavar="M",
                        help="edge bound for the matroid rows")
    verify.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    verify.add_argument("--count", type=int, default=200, metavar="C",
                        help="number of random graphs (random mode)")
    verify.add_argument("--seed", type=int, default=0, metavar="S")
    verify.add_argument("--up-to-iso", action="store_true",
                        help="skip non-canonical labelings in exhaustive mode")
    verify.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: up to 4)")
    verify.add_argument("--dump-dir", default=".", metavar="DIR",
                        help="where counterexample files are written")
    _common_flags(verify)

    return parser


def _resolve_cap(args):
    if args.cap is not None:
        return args.cap
    env = os.environ.get("FREIMAN_CAP")
    return int(env) if env else None


def _read_file(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}")


def _emit(report, fmt):
    text = dump_json(report) if fmt == "json" else render_table(report)
    sys.stdout.write(text)


def _dispatch(args):
    cap = _resolve_cap(args)
    if args.topic == "ideal":
        ideal = parse_ideal(_read_file(args.file))
        if args.max_power < 2:
            raise PreconditionError("--max-power must be at least 2")
        report = ideal_report(
            ideal, args.max_power, cap=cap, no_timing=args.no_timing
        )
    elif args.topic == "graph":
        g = parse_graph(_read_file(args.file))
        report = graph_report(g, cap=cap, no_timing=args.no_timing)
    elif args.topic == "matroid":
        g = parse_graph(_read_file(args.file))
        report = matroid_report(
            g, with_hvector=args.hvector, cap=cap, no_timing=args.no_timing
        )
    else:
        report = run_verify(
            mode=args.mode,
            max_vertices=args.max_vertices,
            max_edges=args.max_edges,
            count=args.count,
            seed=args.seed,
            cap=cap,
            up_to_iso=args.up_to_iso,
            jobs=args.jobs,
            no_timing=args.no_timing,
        )
        _write_counterexamples(report, args.dump_dir)
    _emit(report, args.format)
    return 0


def _write_counterexamples(report, dump_dir):
    for i, entry in enumerate(report.get("counterexamples", [])):
        path = Path(dump_dir) / f"counterexample-{entry['row']}-{i}.json"
        path.write_text(dump_json(entry["graph"]))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
