"""Exhaustive solver scans over parametric families against their closed-form verdicts."""
from typing import Callable, Dict, Iterator, List, Tuple

from pydantic import BaseModel
from tqdm import tqdm

from src.balance.solver import SolveStatus, solve_3_balanced
from src.core.config import get_settings
from src.core.errors import BadParams, CrossCheckFailed
from src.core.logging import logger
from src.families.generators import (
    PappusParams,
    PetersenParams,
    gen_pappus,
    gen_petersen,
    mobius_ladder,
)
from src.graph.graph import Graph

DEFAULT_RANGES: Dict[str, Tuple[int, int]] = {
    "petersen": (5, 30),
    "pappus": (4, 24),
    "mobius": (4, 30),
}


class ScanRow(BaseModel):
    family: str
    params: List[int]
    status: str
    solvable: bool
    predicted: bool
    agree: bool


def _petersen_cases(lo: int, hi: int) -> Iterator[Tuple[List[int], Graph, bool]]:
    for m in range(max(lo, 3), hi + 1):
        for j in range(1, (m + 1) // 2):
            yield [m, j], gen_petersen(PetersenParams(m, j)), m % 3 == 0 and j % 3 != 0


def _pappus_cases(lo: int, hi: int) -> Iterator[Tuple[List[int], Graph, bool]]:
    for m in range(max(lo, 4), hi + 1):
        if m % 2:
            continue
        for j in range(1, (m + 1) // 2):
            for k in range(1, m // 2 + 1):
                predicted = m % 6 == 0 and j % 3 != 0 and 2 * k == m
                yield [m, j, k], gen_pappus(PappusParams(m, j, k)), predicted


def _mobius_cases(lo: int, hi: int) -> Iterator[Tuple[List[int], Graph, bool]]:
    for n in range(max(lo, 4), hi + 1):
        if n % 2 == 0:
            yield [n], mobius_ladder(n), n % 6 == 0


CASES: Dict[str, Callable[[int, int], Iterator[Tuple[List[int], Graph, bool]]]] = {
    "petersen": _petersen_cases,
    "pappus": _pappus_cases,
    "mobius": _mobius_cases,
}


def family_scan(family: str, lo: int | None = None, hi: int | None = None, budget: int | None = None,
                strict: bool = True, progress: bool | None = None) -> List[ScanRow]:
    """Solver verdict against the predicted one for every parameter set in range.

    With strict, any disagreement or exhausted budget raises CrossCheckFailed
    once the whole table is built.
    """
    if family not in CASES:
        raise BadParams(f"unknown family {family!r}, expected one of {sorted(CASES)}")
    d_lo, d_hi = DEFAULT_RANGES[family]
    lo = d_lo if lo is None else lo
    hi = d_hi if hi is None else hi
    progress = get_settings().classify.progress if progress is None else progress

    cases = list(CASES[family](lo, hi))
    rows: List[ScanRow] = []
    for params, g, predicted in tqdm(cases, desc=f"scan {family}", disable=not progress):
        result = solve_3_balanced(g, budget=budget)
        solvable = result.status is SolveStatus.FOUND
        rows.append(ScanRow(
            family=family,
            params=params,
            status=result.status.value,
            solvable=solvable,
            predicted=predicted,
            agree=result.status is not SolveStatus.BUDGET and solvable == predicted,
        ))

    bad = [r for r in rows if not r.agree]
    logger.info(f"{family} scan over {len(rows)} parameter sets: {len(rows) - len(bad)} agree")
    if strict and bad:
        raise CrossCheckFailed(f"{family} scan disagrees at {[r.params for r in bad]}")
    return rows
