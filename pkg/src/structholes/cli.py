"""Command-line interface: ``structholes {compute,validate,generate,bench}``.

Exit codes: 0 success, 1 validation discrepancy, 2 input error,
3 measure-domain error.
"""

from __future__ import annotations

import argparse
import logging
import sys

import numpy as np

from . import __version__, bench, matrix, oracle
from .errors import InputError, MeasureDomainError, StructHolesError
from .graph import coerce_binary_undirected
from .io import ResultDocument, read_graph, write_edge_list, write_matrix_market, write_report
from .report import MEASURES, PAPER, VARIANTS

PROG = "structholes"
EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3
TOLERANCE = 1e-12

log = logging.getLogger(PROG)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_INPUT, f"{PROG}: error: {message}\n")


def _add_input(p):
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--format", choices=("edgelist", "mtx"), default="edgelist")
    p.add_argument("--directed", action="store_true", help="treat edge-list lines as arcs")
    p.add_argument("--coerce-binary", action="store_true", help="binarize and symmetrize the graph first")


def _add_common(p):
    p.add_argument("--threads", type=int, default=1, help="row-parallel matrix products")
    p.add_argument("--log-level", default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Structural-hole measures via sparse matrix algebra.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute one measure for every node (or edge)")
    _add_input(p)
    p.add_argument("--measure", required=True, choices=MEASURES)
    p.add_argument("--variant", choices=VARIANTS, default=PAPER)
    p.add_argument("--full-local-constraint", action="store_true", help="report every ordered pair, not just edges")
    p.add_argument("--output", help="output file (default: stdout)")
    p.add_argument("--output-format", choices=("csv", "json"), default="csv")
    _add_common(p)

    p = sub.add_parser("validate", help="compare matrix and loop implementations on a graph")
    _add_input(p)
    _add_common(p)

    p = sub.add_parser("generate", help="write a seeded random graph")
    p.add_argument("--model", choices=bench.MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", type=float, required=True, help="m (barabasi-albert) or p (erdos-renyi)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="output file (default: stdout)")
    p.add_argument("--output-format", choices=("edgelist", "mtx"), default="edgelist")
    p.add_argument("--log-level", default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    p = sub.add_parser("bench", help="time matrix vs naive implementations")
    p.add_argument("--models", nargs="+", choices=bench.MODELS, default=list(bench.MODELS))
    p.add_argument("--sizes", nargs="+", type=int, default=list(bench.DEFAULT_SIZES))
    p.add_argument("--ba-m", type=int, default=5)
    p.add_argument("--er-p", type=float, default=0.01)
    p.add_argument("--measures", nargs="*", default=["effective-size", "constraint"])
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="timing CSV (default: stdout)")
    _add_common(p)
    return parser


def _load(args):
    g = read_graph(args.input, args.format, directed=args.directed)
    if args.coerce_binary and not g.is_binary_undirected:
        log.warning("coercing %s graph to binary undirected", "directed" if g.directed else "weighted")
        g = coerce_binary_undirected(g)
    return g


def cmd_compute(args) -> int:
    g = _load(args)
    if args.measure == "effective-size":
        report = matrix.effective_size(g, threads=args.threads)
    elif args.measure == "redundancy":
        report = matrix.redundancy(g, threads=args.threads)
    elif args.measure == "constraint":
        report = matrix.constraint(g, args.variant, threads=args.threads)
    else:
        lc = matrix.local_constraint(g, args.variant, threads=args.threads)
        report = lc.full() if args.full_local_constraint else lc.on_edges()
    for w in report.warnings:
        log.warning(w)
    write_report(ResultDocument.from_report(report, g), args.output_format, args.output)
    return EXIT_OK


def _gap(a, b):
    if not np.array_equal(np.isnan(a), np.isnan(b)):
        return float("inf")
    ok = ~np.isnan(a)
    return float(np.max(np.abs(a[ok] - b[ok]), initial=0.0))


def cmd_validate(args) -> int:
    g = _load(args)
    checks = []
    if g.is_binary_undirected:
        checks.append(("redundancy", "-", matrix.redundancy(g, args.threads), oracle.oracle_redundancy(g)))
        checks.append(("effective-size", "-", matrix.effective_size(g, args.threads), oracle.oracle_effective_size(g)))
    else:
        print("redundancy/effective-size skipped: graph is not binary undirected", file=sys.stderr)
    for v in VARIANTS:
        checks.append(
            ("local-constraint", v, matrix.local_constraint(g, v, args.threads).on_edges(), oracle.oracle_local_constraint(g, v).on_edges())
        )
        checks.append(("constraint", v, matrix.constraint(g, v, args.threads), oracle.oracle_constraint(g, v)))
    worst = 0.0
    for name, variant, fast, ref in checks:
        gap = _gap(fast.values, ref.values) if fast.keys == ref.keys else float("inf")
        worst = max(worst, gap)
        status = "ok" if gap <= TOLERANCE else "MISMATCH"
        print(f"{name}\t{variant}\t{gap:.3e}\t{status}")
    return EXIT_OK if worst <= TOLERANCE else EXIT_MISMATCH


def cmd_generate(args) -> int:
    g = bench.generate(bench.GeneratorSpec(args.model, args.n, args.param, args.seed))
    target = args.output or sys.stdout
    if args.output_format == "mtx":
        write_matrix_market(g, target)
    else:
        write_edge_list(g, target)
    return EXIT_OK


def cmd_bench(args) -> int:
    specs = []
    for model in args.models:
        param = args.ba_m if model == "barabasi-albert" else args.er_p
        specs += [bench.GeneratorSpec(model, n, param, args.seed) for n in args.sizes]
    records = bench.run_benchmark(specs, args.measures, reps=args.reps, threads=args.threads)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            bench.write_timings(records, fh)
    else:
        bench.write_timings(records, sys.stdout)
    for rec in records:
        print(f"{rec.spec.model}\tn={rec.spec.n}\t{rec.measure}\t{rec.impl}\tmedian={rec.median:.4f}s", file=sys.stderr)
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "validate": cmd_validate, "generate": cmd_generate, "bench": cmd_bench}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=args.log_level, format=f"{PROG}: %(levelname)s: %(message)s", force=True)
    try:
        return COMMANDS[args.command](args)
    except (InputError, OSError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MeasureDomainError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except StructHolesError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
