"""Command-line entry point: `balanced <command> ...`.

Machine output is one JSON object per line on stdout; summaries are rich
tables on stderr. Exit code 0 means every internal cross-check passed,
1 a failed check or verdict, 2 invalid input.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import List

from rich.console import Console
from rich.table import Table

from src.balance.coloring import Coloring, is_3_balanced, order_precheck, stats
from src.balance.solver import SolveStatus, solve_2_balanced, solve_3_balanced
from src.circulant.rootsum import search_vanishing_sums_pappus, search_vanishing_sums_petersen
from src.circulant.witness import verify_family_system
from src.classify.corpus import classify_corpus, load_corpus
from src.classify.scan import family_scan
from src.core.config import get_settings
from src.core.errors import BalancedError, CrossCheckFailed
from src.core.logging import configure_logging, logger
from src.cubic.dataset import dataset_from_colored_graph
from src.cubic.edge_coloring import induced_edge_coloring, matchings_from_edge_coloring
from src.cubic.forbidden import forbidden_scan
from src.families.generators import family_graph
from src.graph.graph import Graph
from src.graph.graph6 import emit_graph6, parse_graph6, write_graph6_file

console = Console(stderr=True)


def emit(record: dict) -> None:
    print(json.dumps(record), flush=True)


def read_graph(arg: str) -> Graph:
    text = sys.stdin.readline() if arg == "-" else arg
    return parse_graph6(text)


def read_coloring(arg: str) -> Coloring:
    path = Path(arg)
    text = path.read_text(encoding="utf-8") if path.exists() else arg
    return Coloring.from_json(text)


# commands

def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    solver = solve_2_balanced if args.two else solve_3_balanced
    result = solver(g, budget=args.budget)
    emit({
        "graph6": emit_graph6(g),
        "status": result.status.value,
        "coloring": list(result.coloring) if result.coloring is not None else None,
        "nodes": result.nodes,
    })
    return 1 if result.status is SolveStatus.BUDGET else 0


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    c = read_coloring(args.coloring)
    ok = is_3_balanced(g, c)
    record = {"graph6": emit_graph6(g), "balanced": ok, "precheck": repr(order_precheck(g))}
    if ok:
        record["stats"] = stats(g, c).model_dump()
    emit(record)
    return 0 if ok else 1


def cmd_family(args) -> int:
    g, coloring = family_graph(args.name, args.params)
    record = {"family": args.name, "params": args.params, "graph6": emit_graph6(g), "n": g.n}
    if coloring is not None:
        record["coloring"] = list(coloring)
        record["verified"] = is_3_balanced(g, coloring)
    if args.out:
        write_graph6_file(args.out, [g])
    emit(record)
    return 0 if record.get("verified", True) else 1


def cmd_scan(args) -> int:
    lo, hi = args.range if args.range else (None, None)
    rows = family_scan(args.family, lo, hi, budget=args.budget, strict=False)
    for row in rows:
        emit(row.model_dump())

    table = Table(title=f"{args.family} scan")
    for col in ("params", "status", "predicted", "agree"):
        table.add_column(col)
    for row in rows:
        if row.solvable or not row.agree:
            table.add_row(str(row.params), row.status, str(row.predicted), str(row.agree))
    console.print(table)
    disagreements = sum(not r.agree for r in rows)
    console.print(f"{len(rows)} parameter sets, {disagreements} disagreements")
    return 1 if disagreements else 0


def default_records_path(args) -> Path:
    stem = f"cubic{args.n}" if args.n is not None else Path(args.input).stem
    return Path(get_settings().app.output_dir) / f"{stem}.jsonl"


def cmd_classify(args) -> int:
    graphs = load_corpus(n=args.n, path=args.input)
    records, summary = classify_corpus(graphs, budget=args.budget, workers=args.workers)
    for r in records:
        emit(r.model_dump())
    if args.out is not None:
        out = Path(args.out or default_records_path(args))
        out.parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w", encoding="utf-8") as f:
            for r in records:
                f.write(r.model_dump_json() + "\n")

    table = Table(title="classification")
    table.add_column("measure")
    table.add_column("count", justify="right")
    for name, value in summary.model_dump().items():
        if name != "pattern_counts":
            table.add_row(name, str(value))
    for name, value in summary.pattern_counts.items():
        table.add_row(f"pattern {name}", str(value))
    console.print(table)

    ok = summary.budget == 0 and summary.unexplained == 0 and all(r.confirmed for r in records)
    return 0 if ok else 1


def cmd_cubic_analyze(args) -> int:
    g = read_graph(args.graph)
    result = solve_3_balanced(g, budget=args.budget)
    scan = forbidden_scan(g)
    record = {
        "graph6": emit_graph6(g),
        "status": result.status.value,
        "forbidden": scan.patterns,
        "bridge": scan.has_bridge,
    }
    if result.found:
        ec = induced_edge_coloring(g, result.coloring)
        record["coloring"] = list(result.coloring)
        record["matchings"] = [sorted(map(list, m)) for m in matchings_from_edge_coloring(g, ec)]
        record["dataset"] = dataset_from_colored_graph(g, result.coloring).to_dict()
    emit(record)
    return 1 if result.status is SolveStatus.BUDGET else 0


def cmd_circulant_verify(args) -> int:
    n = 3 ** args.a
    m = args.m if args.m is not None else 3 * n * (2 if args.family == "pappus" else 1)
    report = verify_family_system(args.family, args.a, args.j, m)
    emit(report.to_dict())
    return 0 if report.nonsingular and report.solution_is_constant and report.eigen_ok else 1


def cmd_circulant_search(args) -> int:
    if args.order == "petersen":
        found = search_vanishing_sums_petersen(rational_only=args.rational_only)
    else:
        found = search_vanishing_sums_pappus(rational_only=args.rational_only)
    emit({"search": args.order, "rational_only": args.rational_only, "solutions": [list(s) for s in found]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="balanced", description="Neighborhood 3-balanced colorings")
    parser.add_argument("--log-level", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a balanced coloring of a graph6 graph")
    p.add_argument("graph", help="graph6 string or - for stdin")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--two", action="store_true", help="2-balanced with +1/-1 labels")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring")
    p.add_argument("graph")
    p.add_argument("coloring", help="JSON array or a file holding one")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="generate a named graph or family member")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", default=None, help="also write the graph to this graph6 file")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("scan", help="solver scan of a family against its predicted verdicts")
    p.add_argument("family", choices=["petersen", "pappus", "mobius"])
    p.add_argument("--range", nargs=2, type=int, metavar=("LO", "HI"))
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("classify", help="classify all cubic graphs of an order or a graph6 corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int)
    src.add_argument("--in", dest="input")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", nargs="?", const="", default=None,
                   help="JSON lines output file; bare --out writes under app.output_dir")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cubic", help="cubic graph tools")
    cubic_sub = p.add_subparsers(dest="cubic_command", required=True)
    q = cubic_sub.add_parser("analyze")
    q.add_argument("graph")
    q.add_argument("--budget", type=int, default=None)
    q.set_defaults(func=cmd_cubic_analyze)

    p = sub.add_parser("circulant", help="circulant systems and root-of-unity searches")
    circ_sub = p.add_subparsers(dest="circulant_command", required=True)
    q = circ_sub.add_parser("verify")
    q.add_argument("--family", choices=["petersen", "pappus"], required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--m", type=int, default=None)
    q.set_defaults(func=cmd_circulant_verify)
    q = circ_sub.add_parser("search")
    q.add_argument("order", choices=["petersen", "pappus"])
    q.add_argument("--rational-only", action="store_true")
    q.set_defaults(func=cmd_circulant_search)

    return parser


def main(argv: List[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    configure_logging(settings.logging.config, args.log_level or settings.logging.level, settings.logging.file)
    try:
        return args.func(args)
    except CrossCheckFailed as exc:
        logger.error(f"cross-check failed: {exc}")
        return 1
    except BalancedError as exc:
        logger.error(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
