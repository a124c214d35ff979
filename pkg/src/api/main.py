from typing import List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from src.balance.coloring import is_3_balanced, order_precheck
from src.balance.solver import solve_3_balanced
from src.core.errors import BalancedError
from src.core.logging import logger
from src.cubic.dataset import dataset_from_colored_graph
from src.cubic.forbidden import forbidden_scan
from src.families.generators import family_graph
from src.graph.graph6 import emit_graph6, parse_graph6

app = FastAPI(
    title="Balanced Coloring API",
    description="Decide and construct neighborhood 3-balanced colorings",
    version="1.0.0"
)


class GraphRequest(BaseModel):
    graph6: str
    budget: Optional[int] = None


class VerifyRequest(BaseModel):
    graph6: str
    coloring: List[int]


class SolveResponse(BaseModel):
    graph6: str
    status: str
    coloring: Optional[List[int]] = None
    nodes: int


class VerifyResponse(BaseModel):
    balanced: bool
    precheck: str


class FamilyResponse(BaseModel):
    graph6: str
    n: int
    coloring: Optional[List[int]] = None


class AnalyzeResponse(BaseModel):
    graph6: str
    status: str
    coloring: Optional[List[int]] = None
    forbidden: List[str] = []
    bridge: bool
    dataset: Optional[dict] = None


def _fail(exc: BalancedError):
    logger.info(f"rejected request: {exc}")
    raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/solve", response_model=SolveResponse)
def solve(req: GraphRequest):
    try:
        g = parse_graph6(req.graph6)
        result = solve_3_balanced(g, budget=req.budget)
    except BalancedError as exc:
        _fail(exc)
    coloring = list(result.coloring) if result.coloring is not None else None
    return {"graph6": emit_graph6(g), "status": result.status.value, "coloring": coloring, "nodes": result.nodes}


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    try:
        g = parse_graph6(req.graph6)
        ok = is_3_balanced(g, req.coloring)
    except BalancedError as exc:
        _fail(exc)
    return {"balanced": ok, "precheck": repr(order_precheck(g))}


@app.get("/family/{name}", response_model=FamilyResponse)
def family(name: str, params: str = ""):
    try:
        values = [int(p) for p in params.split(",") if p]
        g, coloring = family_graph(name, values)
    except (BalancedError, TypeError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return {"graph6": emit_graph6(g), "n": g.n, "coloring": list(coloring) if coloring else None}


@app.post("/cubic/analyze", response_model=AnalyzeResponse)
def analyze(req: GraphRequest):
    try:
        g = parse_graph6(req.graph6)
        scan = forbidden_scan(g)
        result = solve_3_balanced(g, budget=req.budget)
        dataset = dataset_from_colored_graph(g, result.coloring).to_dict() if result.found else None
    except BalancedError as exc:
        _fail(exc)
    return {
        "graph6": emit_graph6(g),
        "status": result.status.value,
        "coloring": list(result.coloring) if result.found else None,
        "forbidden": scan.patterns,
        "bridge": scan.has_bridge,
        "dataset": dataset,
    }
