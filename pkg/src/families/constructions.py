"""Graph constructions that preserve 3-balance, with their coloring combinators."""
from enum import Enum
from typing import List, Sequence, Set, Tuple

from src.balance.coloring import Coloring, SignedColoring, is_2_balanced, is_3_balanced
from src.core.errors import BadParams, EdgeOverlap, HypothesisViolated, LengthMismatch, NotApplicable
from src.graph.graph import EdgeId, Graph, edge_id, from_edges


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    TENSOR = "tensor"
    STRONG = "strong"
    LEXICOGRAPHIC = "lexicographic"


# join along a base graph

def join_along(base: Graph, parts: Sequence[Graph]) -> Tuple[Graph, List[int]]:
    """Disjoint union of parts plus all edges between parts of adjacent base vertices.

    Part i occupies vertices offsets[i] .. offsets[i] + parts[i].n - 1.
    """
    if len(parts) != base.n:
        raise LengthMismatch(f"{len(parts)} parts for a base graph on {base.n} vertices")
    offsets, total = [], 0
    for part in parts:
        offsets.append(total)
        total += part.n

    edges: List[EdgeId] = []
    for i, part in enumerate(parts):
        edges.extend((u + offsets[i], v + offsets[i]) for u, v in part.edges())
    for a, b in base.edges():
        for x in range(parts[a].n):
            for y in range(parts[b].n):
                edges.append((offsets[a] + x, offsets[b] + y))
    return from_edges(total, edges), offsets


def join(g1: Graph, g2: Graph) -> Graph:
    base = from_edges(2, [(0, 1)])
    return join_along(base, [g1, g2])[0]


def thirds_coloring(n: int) -> Coloring:
    """One third of the vertices in each color."""
    if n % 3:
        raise NotApplicable(f"cannot split {n} vertices into equal thirds")
    return Coloring(v % 3 for v in range(n))


def _equidistributed(c: Sequence[int]) -> bool:
    counts = [0, 0, 0]
    for x in c:
        counts[x] += 1
    return counts[0] == counts[1] == counts[2]


def join_coloring(base: Graph, colorings: Sequence[Coloring]) -> Coloring:
    """Concatenate part colorings; parts of non-isolated base vertices must be equidistributed."""
    if len(colorings) != base.n:
        raise LengthMismatch(f"{len(colorings)} colorings for a base graph on {base.n} vertices")
    for v in range(base.n):
        if base.degree(v) and not _equidistributed(colorings[v]):
            raise HypothesisViolated(f"part {v} is joined to others but its colors are not equidistributed")
    return Coloring(x for c in colorings for x in c)


# gluing at a vertex

def glue_at_vertex(graphs: Sequence[Graph], shared: Sequence[int]) -> Tuple[Graph, List[List[int]]]:
    """Identify shared[i] of every graph into a single vertex 0.

    maps[i][v] is the glued index of vertex v of graphs[i].
    """
    if len(graphs) != len(shared) or not graphs:
        raise BadParams("need one shared vertex per graph and at least one graph")
    maps: List[List[int]] = []
    total = 1
    for g, s in zip(graphs, shared):
        if not 0 <= s < g.n:
            raise BadParams(f"shared vertex {s} outside 0..{g.n - 1}")
        mapping = []
        for v in range(g.n):
            if v == s:
                mapping.append(0)
            else:
                mapping.append(total)
                total += 1
        maps.append(mapping)

    edges = [
        (mapping[u], mapping[v])
        for g, mapping in zip(graphs, maps)
        for u, v in g.edges()
    ]
    return from_edges(total, edges), maps


def glue_coloring(maps: Sequence[Sequence[int]], colorings: Sequence[Coloring],
                  shared: Sequence[int]) -> Coloring:
    """Shift each part's coloring so the shared vertex gets color 0, then merge."""
    total = 1 + sum(len(m) - 1 for m in maps)
    labels = [0] * total
    for mapping, c, s in zip(maps, colorings, shared):
        shift = -c[s]
        for v, target in enumerate(mapping):
            labels[target] = (c[v] + shift) % 3
    return Coloring(labels)


# products

def product(g1: Graph, g2: Graph, kind: ProductKind | str) -> Graph:
    """Vertex (u, v) is numbered u * g2.n + v."""
    kind = ProductKind(kind)
    n2 = g2.n

    def idx(u: int, v: int) -> int:
        return u * n2 + v

    edges: Set[EdgeId] = set()
    if kind in (ProductKind.CARTESIAN, ProductKind.STRONG):
        for u in range(g1.n):
            for a, b in g2.edges():
                edges.add(edge_id(idx(u, a), idx(u, b)))
        for v in range(n2):
            for a, b in g1.edges():
                edges.add(edge_id(idx(a, v), idx(b, v)))
    if kind in (ProductKind.TENSOR, ProductKind.STRONG):
        for a, b in g1.edges():
            for c, d in g2.edges():
                edges.add(edge_id(idx(a, c), idx(b, d)))
                edges.add(edge_id(idx(a, d), idx(b, c)))
    if kind is ProductKind.LEXICOGRAPHIC:
        for u in range(g1.n):
            for a, b in g2.edges():
                edges.add(edge_id(idx(u, a), idx(u, b)))
        for a, b in g1.edges():
            for x in range(n2):
                for y in range(n2):
                    edges.add(edge_id(idx(a, x), idx(b, y)))
    return from_edges(g1.n * n2, sorted(edges))


def product_coloring(c1: Coloring, c2: Coloring | SignedColoring, kind: ProductKind | str,
                     g1: Graph | None = None, g2: Graph | None = None) -> Coloring:
    """Coloring of product(g1, g2, kind).

    cartesian, tensor, strong: l(u, v) = l1(u) + l2(v).
    tensor with a signed right factor: l(u, v) = l1(u) if s(v) = +1 else -l1(u).
    lexicographic: l(u, v) = l2(v).
    Hypotheses are checked when the factor graphs are passed.
    """
    kind = ProductKind(kind)
    n1, n2 = len(c1), len(c2)

    if isinstance(c2, SignedColoring):
        if kind is not ProductKind.TENSOR:
            raise HypothesisViolated("signed right factor is only defined for the tensor product")
        if g1 is not None and not (is_3_balanced(g1, c1) and _regular_multiple(g1, 3)):
            raise HypothesisViolated("left factor must be 3r-regular with a 3-balanced coloring")
        if g2 is not None and not (is_2_balanced(g2, c2) and _regular_multiple(g2, 2)):
            raise HypothesisViolated("right factor must be 2r-regular with a 2-balanced coloring")
        return Coloring(
            c1[u] if c2[v] == 1 else (-c1[u]) % 3 for u in range(n1) for v in range(n2)
        )

    if kind is ProductKind.LEXICOGRAPHIC:
        if g2 is not None and not (is_3_balanced(g2, c2) and _regular_multiple(g2, 3)):
            raise HypothesisViolated("right factor must be 3r-regular with a 3-balanced coloring")
        return Coloring(c2[v] for _ in range(n1) for v in range(n2))

    if g1 is not None and not is_3_balanced(g1, c1):
        raise HypothesisViolated("left factor coloring is not 3-balanced")
    if g2 is not None and not is_3_balanced(g2, c2):
        raise HypothesisViolated("right factor coloring is not 3-balanced")
    return Coloring((c1[u] + c2[v]) % 3 for u in range(n1) for v in range(n2))


def _regular_multiple(g: Graph, q: int) -> bool:
    r = g.regularity()
    return r is not None and r % q == 0


# edge-disjoint unions

def edge_disjoint_union(graphs: Sequence[Graph]) -> Graph:
    if not graphs:
        raise BadParams("need at least one graph")
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise BadParams("all graphs must share one vertex set")
    seen: Set[EdgeId] = set()
    for g in graphs:
        common = seen.intersection(g.edges())
        if common:
            raise EdgeOverlap(f"edges {sorted(common)} appear in more than one graph")
        seen.update(g.edges())
    return from_edges(n, sorted(seen))


def edge_disjoint_union_check(graphs: Sequence[Graph], c: Coloring) -> bool:
    """Verifier result on the union of pairwise edge-disjoint graphs."""
    return is_3_balanced(edge_disjoint_union(graphs), c)
