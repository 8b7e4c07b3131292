"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 precondition error, 3 budget exceeded,
4 a verification ran and failed (sharpness mismatch or theorem counterexample).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections.abc import Iterable, Sequence

from .config import FORMATS, RunConfig
from .corpus import exhaustive_graphs, random_connected_graphs
from .errors import BudgetExceeded, InputError, KExtendError, PreconditionError
from .graph6 import parse_graph6, to_graph6
from .spectral import q_spectral_radius
from .sweep import evaluate, sweep
from .theorem import extremal_graph, threshold, verify_sharpness

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3, 4


def _read_lines(source: str) -> list[str]:
    """Graph6 lines from a file, stdin ("-"), or a literal graph6 string."""
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        with open(source, encoding="ascii", errors="replace") as fh:
            text = fh.read()
    else:
        text = source
    return [ln.strip() for ln in text.splitlines()]


def _parsed(source: str) -> Iterable[tuple[int, str, object]]:
    """(line number, text, Graph or the InputError it raised) per non-blank line."""
    for lineno, line in enumerate(_read_lines(source), start=1):
        if not line:
            continue
        try:
            yield lineno, line, parse_graph6(line)
        except InputError as exc:
            yield lineno, line, exc


def _dump(payload: dict | list, fmt: str, out) -> None:
    records = payload.get("records") if isinstance(payload, dict) else payload
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    elif fmt == "csv":
        rows = records if records is not None else [payload]
        cols = sorted({k for r in rows for k in r})
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v
                        for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        rows = records if records is not None else [payload]
        for r in rows:
            out.write("  ".join(f"{k}={v}" for k, v in r.items() if not isinstance(v, (dict, list))) + "\n")
        if isinstance(payload, dict) and "summary" in payload:
            out.write("summary: " + json.dumps(payload["summary"], sort_keys=True) + "\n")


def cmd_q(args, config: RunConfig) -> tuple[dict, int]:
    records, code = [], EXIT_OK
    for lineno, line, G in _parsed(args.input):
        if isinstance(G, Exception):
            records.append({"line": lineno, "graph6": line, "error": str(G)})
            code = EXIT_INPUT
            continue
        if G.n == 0:
            records.append({"line": lineno, "graph6": line, "error": "empty graph"})
            code = EXIT_INPUT
            continue
        res = q_spectral_radius(G, tol=config.eigen_tolerance)
        records.append({"line": lineno, "graph6": line, "n": G.n, "edges": G.num_edges,
                        "q": res.value, "residual": res.residual,
                        "iterations": res.iterations, "method": res.method})
    return {"records": records}, code


def cmd_theta(args, config: RunConfig) -> tuple[dict, int]:
    return threshold(args.k, args.n, tol=config.root_tolerance).to_dict(), EXIT_OK


def cmd_certify(args, config: RunConfig) -> tuple[dict, int]:
    records, code = [], EXIT_OK
    for lineno, line, G in _parsed(args.input):
        if isinstance(G, Exception):
            records.append({"line": lineno, "graph6": line, "error": str(G)})
            code = EXIT_INPUT
            continue
        rec = evaluate(to_graph6(G), args.k, config, exact="all" if args.exact else "none")
        rec["graph6"] = line
        rec["line"] = lineno
        records.append(rec)
        if rec["counterexample"] and code == EXIT_OK:
            code = EXIT_VERIFY
    return {"records": records}, code


def cmd_extremal(args, config: RunConfig) -> tuple[dict, int]:
    G = extremal_graph(args.k, args.n)
    blocks = [len(b) for b in G.blocks]
    payload = {"k": args.k, "n": args.n, "graph6": to_graph6(G), "blocks": blocks}
    code = EXIT_OK
    if args.verify:
        report = verify_sharpness(args.k, args.n, eigen_tol=config.eigen_tolerance,
                                  max_n=config.max_n, budget=config.matching_budget)
        payload["sharpness"] = report.to_dict()
        payload["result"] = "PASS" if report.passed else "FAIL"
        code = EXIT_OK if report.passed else EXIT_VERIFY
    return payload, code


def cmd_sharpness(args, config: RunConfig) -> tuple[dict, int]:
    ns = args.n or list(range(2 * args.k + 4, 2 * args.k + 17, 2))
    reports = [verify_sharpness(args.k, n, eigen_tol=config.eigen_tolerance, max_n=config.max_n,
                                budget=config.matching_budget) for n in ns]
    records = [r.to_dict() for r in reports]
    passed = all(r.passed for r in reports)
    return {"records": records, "summary": {"cases": len(records), "passed": passed}}, (
        EXIT_OK if passed else EXIT_VERIFY
    )


def cmd_sweep(args, config: RunConfig) -> tuple[dict, int]:
    if args.exhaustive:
        graphs = exhaustive_graphs(args.n)
    else:
        graphs = list(random_connected_graphs(args.n, args.random, config.seed))
    ks = [args.k] if args.k is not None else None
    report = sweep(graphs, ks=ks, config=config, exact="all" if args.exact else "certified")
    payload = report.to_dict()
    payload["corpus"] = {"n": args.n, "kind": "exhaustive" if args.exhaustive else "random",
                         "count": len(graphs), "seed": None if args.exhaustive else config.seed}
    return payload, EXIT_VERIFY if report.counterexamples else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, dest="output_format")
    common.add_argument("--workers", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--epsilon", type=float, dest="decision_epsilon",
                        help="margin required to certify q(G) > threshold")
    common.add_argument("--tolerance", type=float, dest="eigen_tolerance",
                        help="relative eigen-residual tolerance")
    common.add_argument("--root-tolerance", type=float, dest="root_tolerance")
    common.add_argument("--max-n", type=int, dest="max_n",
                        help="subset scans are capped at 2**MAX_N candidate sets")
    common.add_argument("--matching-budget", type=int, dest="matching_budget")

    parser = argparse.ArgumentParser(prog="kextend", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("q", parents=[common], help="signless Laplacian spectral radius")
    p.add_argument("input", help="graph6 file, '-' for stdin, or a graph6 string")
    p.set_defaults(func=cmd_q)

    p = sub.add_parser("theta", parents=[common], help="threshold for (k, n)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("certify", parents=[common], help="apply the spectral condition")
    p.add_argument("input")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="also run both exact deciders")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("extremal", parents=[common], help="extremal graph for (k, n)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("sharpness", parents=[common], help="verify sharpness over a range of n")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, nargs="*", help="orders (default: 2k+4 .. 2k+16, even)")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("sweep", parents=[common], help="search a corpus for counterexamples")
    p.add_argument("-k", type=int, help="default: every valid k")
    p.add_argument("-n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--exact", action="store_true", help="run exact deciders on every graph")
    p.set_defaults(func=cmd_sweep)
    return parser


_CONFIG_KEYS = ("output_format", "workers", "seed", "decision_epsilon", "eigen_tolerance",
                "root_tolerance", "max_n", "matching_budget")


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    fmt = args.output_format or "json"
    try:
        config = RunConfig.from_env().with_overrides(**{k: getattr(args, k) for k in _CONFIG_KEYS})
        fmt = config.output_format
        payload, code = args.func(args, config)
    except PreconditionError as exc:
        payload, code = {"error": str(exc), "clause": exc.clause}, EXIT_PRECONDITION
    except BudgetExceeded as exc:
        payload, code = {"error": str(exc)}, EXIT_BUDGET
    except KExtendError as exc:
        payload, code = {"error": str(exc)}, exc.exit_code
    _dump(payload, fmt, out)
    if "error" in payload:
        print(f"kextend: {payload['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
