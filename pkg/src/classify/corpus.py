"""Classification of graph corpora: precheck, forbidden-pattern scan, exact solver.

The solver decides every graph. Precheck, pattern scan and the Tait test are
advisory; any contradiction with the solver is a cross-check failure, and
every "no" is repeated with the reversed color order.
"""
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, Iterable, List, Literal, Optional, Tuple

from pydantic import BaseModel
from tqdm import tqdm

from src.balance.coloring import is_3_balanced, order_precheck
from src.balance.solver import SolveStatus, solve_3_balanced
from src.classify.enumerate import enumerate_cubic
from src.core.config import get_settings
from src.core.errors import CrossCheckFailed
from src.core.logging import logger
from src.cubic.edge_coloring import is_tait_colorable
from src.cubic.forbidden import forbidden_scan
from src.graph.canonical import MAX_ORDER, canonical_form
from src.graph.graph import Graph, bridges
from src.graph.graph6 import emit_graph6, parse_graph6, read_graph6_file

REVERSED_ORDER = (2, 1, 0)


class ClassificationRecord(BaseModel):
    graph6: str
    n: int
    balanced: Literal["yes", "no", "budget"]
    witness: Optional[List[int]] = None
    precheck: Optional[str] = None
    forbidden: List[str] = []
    bridge: bool = False
    tait: Optional[bool] = None
    nodes: int = 0
    confirmed: bool = False
    key: str = ""

    @property
    def explanations(self) -> List[str]:
        reasons = []
        if self.bridge:
            reasons.append("bridge")
        if self.forbidden:
            reasons.append("pattern")
        if self.tait is False:
            reasons.append("non-tait")
        return reasons


class CorpusSummary(BaseModel):
    total: int = 0
    balanced: int = 0
    unbalanced: int = 0
    budget: int = 0
    bridge: int = 0
    pattern: int = 0
    non_tait: int = 0
    only_non_tait: int = 0
    unexplained: int = 0
    pattern_counts: Dict[str, int] = {}


def classify_graph(g: Graph, budget: int | None = None) -> ClassificationRecord:
    pre = order_precheck(g)
    if g.is_cubic():
        scan = forbidden_scan(g)
        forbidden, has_bridge = scan.patterns, scan.has_bridge
        tait = is_tait_colorable(g)
    else:
        forbidden, has_bridge, tait = [], bool(bridges(g)), None

    result = solve_3_balanced(g, budget=budget)
    nodes = result.nodes
    confirmed = False
    if result.status is SolveStatus.FOUND:
        balanced = "yes"
        witness = list(result.coloring)
        confirmed = is_3_balanced(g, witness)
        if not pre or forbidden or (g.is_cubic() and (has_bridge or tait is False)):
            raise CrossCheckFailed(f"{emit_graph6(g)}: balanced although a necessary condition fails")
    elif result.status is SolveStatus.NONE:
        balanced, witness = "no", None
        again = solve_3_balanced(g, budget=budget, color_order=REVERSED_ORDER)
        nodes += again.nodes
        if again.status is SolveStatus.FOUND:
            raise CrossCheckFailed(f"{emit_graph6(g)}: reversed color order found a coloring")
        confirmed = again.status is SolveStatus.NONE
    else:
        balanced, witness = "budget", None

    key = canonical_form(g).decode("ascii") if g.n <= MAX_ORDER else emit_graph6(g)
    return ClassificationRecord(
        graph6=emit_graph6(g),
        n=g.n,
        balanced=balanced,
        witness=witness,
        precheck=pre.reason,
        forbidden=forbidden,
        bridge=has_bridge,
        tait=tait,
        nodes=nodes,
        confirmed=confirmed,
        key=key,
    )


def _classify_graph6(args: Tuple[str, int | None]) -> ClassificationRecord:
    text, budget = args
    return classify_graph(parse_graph6(text), budget)


def summarize(records: Iterable[ClassificationRecord]) -> CorpusSummary:
    s = CorpusSummary()
    counts: Dict[str, int] = {}
    for r in records:
        s.total += 1
        if r.balanced == "yes":
            s.balanced += 1
            continue
        if r.balanced == "budget":
            s.budget += 1
            continue
        s.unbalanced += 1
        reasons = r.explanations
        s.bridge += "bridge" in reasons
        s.pattern += "pattern" in reasons
        s.non_tait += "non-tait" in reasons
        s.only_non_tait += reasons == ["non-tait"]
        s.unexplained += not reasons and r.precheck is None
        for name in r.forbidden:
            counts[name] = counts.get(name, 0) + 1
    s.pattern_counts = dict(sorted(counts.items()))
    return s


def classify_corpus(graphs: Iterable[Graph], budget: int | None = None, workers: int | None = None,
                    progress: bool | None = None) -> Tuple[List[ClassificationRecord], CorpusSummary]:
    """Records sorted by canonical key, plus the summary."""
    settings = get_settings()
    workers = workers or settings.classify.workers
    progress = settings.classify.progress if progress is None else progress
    jobs = [(emit_graph6(g), budget) for g in graphs]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            stream = pool.map(_classify_graph6, jobs, chunksize=4)
            records = list(tqdm(stream, total=len(jobs), desc="classify", disable=not progress))
    else:
        records = [_classify_graph6(job) for job in tqdm(jobs, desc="classify", disable=not progress)]

    records.sort(key=lambda r: (r.n, r.key))
    summary = summarize(records)
    logger.info(
        f"classified {summary.total} graphs: {summary.balanced} balanced, "
        f"{summary.unbalanced} unbalanced, {summary.budget} over budget"
    )
    return records, summary


def load_corpus(n: int | None = None, path: str | Path | None = None) -> List[Graph]:
    """Generated cubic graphs on n vertices, or the graphs of a graph6 file."""
    if path is not None:
        return read_graph6_file(path)
    if n is None:
        raise ValueError("give either n or a graph6 file")
    return list(enumerate_cubic(n))
