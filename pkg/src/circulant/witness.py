"""Residue-class counts of one color on the Petersen and Pappus families.

For a 3-balanced coloring, every ring vertex has exactly one neighbor of each
color, so the counts of color alpha0 per residue class mod n satisfy
M (x, y) = (m/n) 1 on G(m, j) and L (x, y, z) = (m/n) 1 on P(m, j, m/2).
"""
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

from src.balance.coloring import Coloring
from src.circulant.matrices import (
    IntMatrix,
    assemble_l,
    CirculantSpec,
    assemble_m,
    build_blocks,
    det_nonzero,
    eigen_check,
    solve_all_ones,
)
from src.core.errors import BadSpec, LayoutUnknown, LengthMismatch, Singular
from src.core.logging import logger
from src.families.generators import PappusParams, PetersenParams, gen_pappus, gen_petersen
from src.graph.graph import Graph


class ResidueWitness(NamedTuple):
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    z: Tuple[int, ...] | None
    rhs: Fraction
    lhs: Tuple[int, ...]

    @property
    def holds(self) -> bool:
        return all(v == self.rhs for v in self.lhs)


def _counts(c: Sequence[int], start: int, m: int, n: int, alpha0: int) -> Tuple[int, ...]:
    counts = [0] * n
    for i in range(m):
        if c[start + i] == alpha0:
            counts[i % n] += 1
    return tuple(counts)


def residue_count_witness(g: Graph, c: Coloring | Sequence[int], n: int, alpha0: int,
                          params: PetersenParams | PappusParams) -> ResidueWitness:
    if len(c) != g.n:
        raise LengthMismatch(f"coloring has {len(c)} labels for {g.n} vertices")
    if isinstance(params, PappusParams):
        expected = gen_pappus(params)
    elif isinstance(params, PetersenParams):
        expected = gen_petersen(params)
    else:
        raise LayoutUnknown(f"no vertex layout known for {params!r}")
    if g != expected:
        raise LayoutUnknown("graph does not follow the generator's vertex layout")

    m, j = params.m, params.j
    if n < 1 or m % n:
        raise BadSpec(f"modulus {n} must divide m = {m}")

    x = _counts(c, 0, m, n, alpha0)
    y = _counts(c, m, m, n, alpha0)
    if isinstance(params, PappusParams):
        if 2 * params.k != m:
            raise BadSpec("the residue system needs the cubic case k = m/2")
        z = _counts(c, 2 * m, m, n, alpha0)
        mat = assemble_l(*build_blocks(n, j, m))
        vec = x + y + z
    else:
        z = None
        mat = assemble_m(*build_blocks(n, j))
        vec = x + y
    lhs = tuple(int(sum(mat[r, s] * vec[s] for s in range(len(vec)))) for r in range(len(vec)))
    return ResidueWitness(x, y, z, Fraction(m, n), lhs)


class CirculantReport(NamedTuple):
    family: str
    n: int
    j: int
    m: int
    determinant: int
    solution: List[Fraction] | None
    constant: Fraction
    eigen_ok: bool = True

    @property
    def nonsingular(self) -> bool:
        return self.determinant != 0

    @property
    def solution_is_constant(self) -> bool:
        return self.solution is not None and all(v == self.constant for v in self.solution)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "j": self.j,
            "m": self.m,
            "determinant": str(self.determinant),
            "nonsingular": self.nonsingular,
            "solution": [str(v) for v in self.solution] if self.solution is not None else None,
            "solution_is_constant": self.solution_is_constant,
            "eigen_ok": self.eigen_ok,
        }


def verify_family_system(family: str, a: int, j: int, m: int) -> CirculantReport:
    """Determinant of M (petersen) or L (pappus) at n = 3^a, and the solution of mat x = (m/n) 1."""
    if a < 1:
        raise BadSpec(f"exponent a must be at least 1, got {a}")
    n = 3 ** a
    if family == "petersen":
        mat: IntMatrix = assemble_m(*build_blocks(n, j))
    elif family == "pappus":
        mat = assemble_l(*build_blocks(n, j, m))
    else:
        raise BadSpec(f"unknown family {family!r}")

    ok, det = det_nonzero(mat)
    solution = None
    if ok:
        try:
            solution = solve_all_ones(mat, Fraction(m, n))
        except Singular:
            solution = None
    blocks = [CirculantSpec.a_block(n), CirculantSpec.b_block(n, j)]
    if family == "pappus":
        blocks.append(CirculantSpec.c_block(n, m))
    eigen_ok = all(eigen_check(spec) for spec in blocks)
    logger.info(f"{family} system n={n} j={j} m={m}: det={det}, eigenvectors {'ok' if eigen_ok else 'off'}")
    return CirculantReport(family, n, j, m, det, solution, Fraction(m, 3 * n), eigen_ok)
