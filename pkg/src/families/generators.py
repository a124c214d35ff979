"""Named graphs and parametric families with their explicit colorings.

Vertex layouts (indices mod m throughout):
  generalized Petersen G(m, j): v_i -> i, u_i -> m + i
  generalized Pappus P(m, j, k): v_i -> i, u_i -> m + i, w_i -> 2m + i
  Moebius ladder M_n: cycle 0..n-1, chords i -- i + n/2
"""
from math import gcd
from typing import Dict, Callable, List, NamedTuple, Set

from src.balance.coloring import Coloring
from src.core.errors import BadParams, NotApplicable
from src.graph.graph import EdgeId, Graph, edge_id, from_edges, from_lcf


class PetersenParams(NamedTuple):
    m: int
    j: int

    def validate(self) -> None:
        if self.m < 3:
            raise BadParams(f"G(m, j) needs m >= 3, got m={self.m}")
        if not 1 <= self.j < self.m / 2:
            raise BadParams(f"G(m, j) needs 1 <= j < m/2, got j={self.j} for m={self.m}")


class PappusParams(NamedTuple):
    m: int
    j: int
    k: int

    def validate(self) -> None:
        if self.m < 4:
            raise BadParams(f"P(m, j, k) needs m >= 4, got m={self.m}")
        if not 1 <= self.j < self.m / 2:
            raise BadParams(f"P(m, j, k) needs 1 <= j < m/2, got j={self.j}")
        if not 1 <= self.k <= self.m / 2:
            raise BadParams(f"P(m, j, k) needs 1 <= k <= m/2, got k={self.k}")


# parametric families

def gen_petersen(p: PetersenParams) -> Graph:
    p.validate()
    m, j = p
    edges: Set[EdgeId] = set()
    for i in range(m):
        edges.add(edge_id(i, (i + 1) % m))
        edges.add(edge_id(i, m + i))
        edges.add(edge_id(m + i, m + (i + j) % m))
    return from_edges(2 * m, sorted(edges))


def petersen_interior_cycles(p: PetersenParams) -> List[List[int]]:
    """The inner u-vertices split into gcd(m, j) cycles of length m/gcd(m, j)."""
    p.validate()
    m, j = p
    d = gcd(m, j)
    return [[m + (s + t * j) % m for t in range(m // d)] for s in range(d)]


def petersen_coloring(p: PetersenParams) -> Coloring:
    p.validate()
    m, j = p
    if m % 3 or j % 3 == 0:
        raise NotApplicable(f"l(v_i) = l(u_i) = i needs 3 | m and 3 does not divide j, got G({m}, {j})")
    return Coloring([i % 3 for i in range(m)] * 2)


def gen_pappus(p: PappusParams) -> Graph:
    """Cubic iff k = m/2; otherwise every w-vertex has degree 4."""
    p.validate()
    m, j, k = p
    edges: Set[EdgeId] = set()
    for i in range(m):
        edges.add(edge_id(i, (i + 1) % m))
        edges.add(edge_id(i, m + i))
        edges.add(edge_id(m + i, 2 * m + (i + j) % m))
        edges.add(edge_id(m + i, 2 * m + (i - j) % m))
        edges.add(edge_id(2 * m + i, 2 * m + (i + k) % m))
    return from_edges(3 * m, sorted(edges))


def pappus_coloring(p: PappusParams) -> Coloring:
    p.validate()
    m, j, k = p
    if m % 6 or j % 3 == 0 or 2 * k != m:
        raise NotApplicable(
            f"l(v_i) = l(u_i) = l(w_i) = i needs 6 | m, 3 not dividing j and k = m/2, got P({m}, {j}, {k})"
        )
    return Coloring([i % 3 for i in range(m)] * 3)


def mobius_ladder(n: int) -> Graph:
    if n < 4 or n % 2:
        raise BadParams(f"Moebius ladder needs an even n >= 4, got {n}")
    edges = {edge_id(i, (i + 1) % n) for i in range(n)}
    edges |= {edge_id(i, i + n // 2) for i in range(n // 2)}
    return from_edges(n, sorted(edges))


def mobius_coloring(n: int) -> Coloring:
    mobius_ladder(n)
    if n % 6:
        raise NotApplicable(f"l(v_i) = i mod 3 on M_n needs 6 | n, got n={n}")
    return Coloring(i % 3 for i in range(n))


# small named graphs

def empty(n: int) -> Graph:
    return from_edges(n, [])


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams(f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def k4() -> Graph:
    return complete(4)


def k33() -> Graph:
    return complete_bipartite(3, 3)


def k33_coloring() -> Coloring:
    return Coloring([0, 1, 2, 0, 1, 2])


def triangular_prism() -> Graph:
    return gen_petersen(PetersenParams(3, 1))


def triangular_prism_coloring() -> Coloring:
    return petersen_coloring(PetersenParams(3, 1))


def cube() -> Graph:
    return gen_petersen(PetersenParams(4, 1))


def hexagonal_prism() -> Graph:
    """Outer cycle 0..5, inner cycle 6..11, spokes i -- i + 6."""
    return gen_petersen(PetersenParams(6, 1))


def hexagonal_prism_coloring() -> Coloring:
    return Coloring([1, 0, 2, 1, 0, 2] * 2)


def petersen() -> Graph:
    return gen_petersen(PetersenParams(5, 2))


def pappus() -> Graph:
    return gen_pappus(PappusParams(6, 1, 3))


def tietze() -> Graph:
    """Petersen graph with vertex v_0 replaced by a triangle; 12 vertices, a snark."""
    base = petersen()
    keep = [v for v in range(base.n) if v != 0]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in base.edges() if 0 not in (u, v)]
    triangle = [9, 10, 11]
    edges += [(9, 10), (10, 11), (9, 11)]
    for t, w in zip(triangle, base.neighbors(0)):
        edges.append((t, index[w]))
    return from_edges(12, edges)


def heawood() -> Graph:
    return from_lcf(14, [5, -5], 7)


def tutte_8_cage() -> Graph:
    return from_lcf(30, [-13, -9, 7, -7, 9, 13], 5)


_GLUED_PRISMS_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 5), (2, 4),
    (0, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 0), (0, 8), (6, 10), (9, 7),
]


def glued_prisms() -> Graph:
    """Two triangular prisms sharing vertex 0; 3-balanced but not regular."""
    return from_edges(11, _GLUED_PRISMS_EDGES)


def glued_prisms_coloring() -> Coloring:
    """Color classes of sizes 3, 4, 4."""
    return Coloring([0, 1, 1, 0, 2, 2, 1, 1, 0, 2, 2])


NAMED_GRAPHS: Dict[str, Callable[[], Graph]] = {
    "k4": k4,
    "k33": k33,
    "triangular_prism": triangular_prism,
    "cube": cube,
    "hexagonal_prism": hexagonal_prism,
    "petersen": petersen,
    "tietze": tietze,
    "heawood": heawood,
    "tutte_8_cage": tutte_8_cage,
    "pappus": pappus,
    "glued_prisms": glued_prisms,
}

NAMED_COLORINGS: Dict[str, Callable[[], Coloring]] = {
    "k33": k33_coloring,
    "triangular_prism": triangular_prism_coloring,
    "hexagonal_prism": hexagonal_prism_coloring,
    "pappus": lambda: pappus_coloring(PappusParams(6, 1, 3)),
    "glued_prisms": glued_prisms_coloring,
}


def family_graph(name: str, params: List[int]) -> tuple[Graph, Coloring | None]:
    """Graph and, where one is defined for these parameters, its explicit coloring."""
    name = name.lower()
    if name == "petersen" and params:
        p = PetersenParams(*params)
        g = gen_petersen(p)
        return g, _optional(petersen_coloring, p)
    if name == "pappus" and params:
        q = PappusParams(*params)
        g = gen_pappus(q)
        return g, _optional(pappus_coloring, q)
    if name == "mobius":
        (n,) = params
        return mobius_ladder(n), _optional(mobius_coloring, n)
    if name == "cycle":
        return cycle(*params), None
    if name == "complete":
        return complete(*params), None
    if name == "complete_bipartite":
        return complete_bipartite(*params), None
    if name in NAMED_GRAPHS and not params:
        coloring = NAMED_COLORINGS.get(name)
        return NAMED_GRAPHS[name](), coloring() if coloring else None
    raise BadParams(f"unknown family {name!r} with parameters {params}")


def _optional(fn, arg):
    try:
        return fn(arg)
    except NotApplicable:
        return None
