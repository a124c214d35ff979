"""Induced edge colorings of cubic graphs, Tait colorings and alternating cycle sums.

For a vertex coloring l the induced edge label is l(uv) = l(u) + l(v) in Z3.
Along a cycle v0 v1 ... v(k-1) v0 with edge labels x_1..x_k the alternating
sum x_1 - x_2 + x_3 - ... telescopes to (1 + (-1)^(k-1)) l(v0): zero on even
cycles and 2 l(v0) on odd ones.
"""
import json
from typing import Dict, Iterator, List, Mapping, Sequence, Set, Tuple

from src.balance.coloring import Coloring
from src.core.errors import (
    BadParams,
    CharacterizationFails,
    LengthMismatch,
    NotCubic,
    NotTait,
    NotThreeMatchings,
    SizeLimitExceeded,
)
from src.core.logging import logger
from src.graph.graph import EdgeId, Graph, bfs_order, connected_components, edge_id

CYCLE_LIMIT = 14


class EdgeColoring:
    """Total map from the edges of a graph to Z3."""

    __slots__ = ("labels",)

    def __init__(self, labels: Mapping[Tuple[int, int], int]):
        self.labels: Dict[EdgeId, int] = {edge_id(u, v): int(x) % 3 for (u, v), x in labels.items()}

    def __getitem__(self, e: Tuple[int, int]) -> int:
        return self.labels[edge_id(*e)]

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[EdgeId]:
        return iter(sorted(self.labels))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.labels == other.labels

    def __repr__(self) -> str:
        return f"EdgeColoring({len(self.labels)} edges)"

    def items(self):
        return sorted(self.labels.items())

    def to_json(self) -> str:
        return json.dumps([[u, v, x] for (u, v), x in self.items()])

    @classmethod
    def from_json(cls, text: str) -> "EdgeColoring":
        return cls({(u, v): x for u, v, x in json.loads(text)})


def _require_cubic(g: Graph) -> None:
    if not g.is_cubic():
        raise NotCubic(f"graph with degrees {sorted(set(g.degrees()))} is not cubic")


def _require_total(g: Graph, ec: EdgeColoring) -> None:
    if len(ec) != g.edge_count or any(e not in ec.labels for e in g.edges()):
        raise LengthMismatch("edge coloring does not cover exactly the graph's edges")


def induced_edge_coloring(g: Graph, c: Coloring | Sequence[int]) -> EdgeColoring:
    _require_cubic(g)
    if len(c) != g.n:
        raise LengthMismatch(f"coloring has {len(c)} labels for {g.n} vertices")
    return EdgeColoring({(u, v): (c[u] + c[v]) % 3 for u, v in g.edges()})


def is_tait(g: Graph, ec: EdgeColoring) -> bool:
    """Proper Z3 edge coloring: the three edges at every vertex differ."""
    _require_cubic(g)
    _require_total(g, ec)
    return all(len({ec[(v, w)] for w in g.adj[v]}) == 3 for v in range(g.n))


def tait_coloring(g: Graph) -> EdgeColoring | None:
    """Some Tait coloring, or None when the graph has chromatic index 4."""
    _require_cubic(g)
    order: List[EdgeId] = []
    seen: Set[EdgeId] = set()
    for v in bfs_order(g, 0):
        for w in g.adj[v]:
            e = edge_id(v, w)
            if e not in seen:
                seen.add(e)
                order.append(e)

    used = [0] * g.n
    labels: Dict[EdgeId, int] = {}
    # the three edges at vertex 0 come first; fixing them to 0, 1, 2 loses nothing
    fixed = {order[i]: i for i in range(3)}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        u, v = order[i]
        choices = [fixed[order[i]]] if order[i] in fixed else range(3)
        for x in choices:
            bit = 1 << x
            if used[u] & bit or used[v] & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            labels[order[i]] = x
            if extend(i + 1):
                return True
            used[u] ^= bit
            used[v] ^= bit
            del labels[order[i]]
        return False

    if extend(0):
        return EdgeColoring(labels)
    return None


def is_tait_colorable(g: Graph) -> bool:
    return tait_coloring(g) is not None


def matchings_from_edge_coloring(g: Graph, ec: EdgeColoring) -> Tuple[Set[EdgeId], Set[EdgeId], Set[EdgeId]]:
    """Color classes of a Tait coloring; each is a perfect matching."""
    if not is_tait(g, ec):
        raise NotTait("edge coloring is not a Tait coloring")
    classes: Tuple[Set[EdgeId], ...] = (set(), set(), set())
    for e, x in ec.items():
        classes[x].add(e)
    return classes


def alternating_cycle_cover(g: Graph, ec: EdgeColoring, colors: Tuple[int, int]) -> List[List[int]]:
    """Vertex-disjoint cycles alternating between two edge colors, covering every vertex."""
    i, j = colors
    if i == j or {i, j} - {0, 1, 2}:
        raise BadParams(f"need two distinct colors in Z3, got {colors}")
    if not is_tait(g, ec):
        raise NotTait("edge coloring is not a Tait coloring")

    partner = [{ec[(v, w)]: w for w in g.adj[v]} for v in range(g.n)]
    seen = [False] * g.n
    cycles = []
    for start in range(g.n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        v, x = partner[start][i], j
        while v != start:
            seen[v] = True
            cyc.append(v)
            v, x = partner[v][x], (i if x == j else j)
        cycles.append(cyc)
    return cycles


def cycle_edges(cycle: Sequence[int]) -> List[EdgeId]:
    k = len(cycle)
    return [edge_id(cycle[t], cycle[(t + 1) % k]) for t in range(k)]


def alternating_sum(cycle: Sequence[int], ec: EdgeColoring) -> int:
    """x_1 - x_2 + x_3 - ... mod 3 where x_t labels the edge v(t-1) v(t), indices mod k."""
    total = 0
    for t, e in enumerate(cycle_edges(cycle)):
        total += ec[e] if t % 2 == 0 else -ec[e]
    return total % 3


def enumerate_cycles(g: Graph) -> List[List[int]]:
    """Every cycle once: least vertex first, second vertex below the last."""
    if g.n > CYCLE_LIMIT:
        raise SizeLimitExceeded(f"cycle enumeration is limited to n <= {CYCLE_LIMIT}")
    cycles: List[List[int]] = []
    for s in range(g.n):
        path = [s]
        on_path = 1 << s

        def extend(v: int) -> None:
            nonlocal on_path
            for w in g.adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(list(path))
                elif w > s and not on_path >> w & 1:
                    path.append(w)
                    on_path |= 1 << w
                    extend(w)
                    on_path ^= 1 << w
                    path.pop()

        extend(s)
    return cycles


def _rotations(cycle: List[int]) -> Iterator[Tuple[int, List[int]]]:
    """(base vertex, cycle starting at it) for each vertex and both orientations."""
    k = len(cycle)
    for t in range(k):
        forward = cycle[t:] + cycle[:t]
        yield forward[0], forward
        yield forward[0], [forward[0]] + forward[:0:-1]


def sum_profile(g: Graph, ec: EdgeColoring) -> Dict[int, Dict[str, Set[int]]]:
    """Per vertex, the alternating sums over the even and over the odd cycles through it."""
    profile = {v: {"even": set(), "odd": set()} for v in range(g.n)}
    for cyc in enumerate_cycles(g):
        parity = "even" if len(cyc) % 2 == 0 else "odd"
        for base, rotated in _rotations(cyc):
            profile[base][parity].add(alternating_sum(rotated, ec))
    return profile


def check_sum_characterization(g: Graph, ec: EdgeColoring) -> bool:
    """Every even cycle sums to 0 and, per vertex, all odd cycles through it share one sum."""
    if not is_tait(g, ec):
        raise NotThreeMatchings("edge coloring does not split into three disjoint perfect matchings")
    for v, sums in sum_profile(g, ec).items():
        if sums["even"] - {0}:
            return False
        if len(sums["odd"]) > 1:
            return False
    return True


def _odd_closed_walk(g: Graph, root: int) -> List[int] | None:
    """Shortest odd closed walk through root, via BFS on the bipartite double cover."""
    parent: Dict[Tuple[int, int], Tuple[int, int] | None] = {(root, 0): None}
    queue = [(root, 0)]
    for state in queue:
        v, side = state
        for w in g.adj[v]:
            nxt = (w, 1 - side)
            if nxt in parent:
                continue
            parent[nxt] = state
            if nxt == (root, 1):
                walk = []
                cur: Tuple[int, int] | None = nxt
                while cur is not None:
                    walk.append(cur[0])
                    cur = parent[cur]
                walk.reverse()
                return walk[:-1]
            queue.append(nxt)
    return None


def reconstruct_vertex_coloring(g: Graph, ec: EdgeColoring) -> Coloring:
    """Vertex coloring whose induced edge coloring is ec.

    Per component, the least vertex v0 is seeded from an odd closed walk through
    it (l(v0) = -S, since S = 2 l(v0)), or with 0 on bipartite components;
    then l(w) = x(vw) - l(v) spreads breadth-first.
    """
    _require_cubic(g)
    _require_total(g, ec)
    labels = [-1] * g.n
    for comp in connected_components(g):
        root = comp[0]
        walk = _odd_closed_walk(g, root)
        labels[root] = (-alternating_sum(walk, ec)) % 3 if walk else 0
        queue = [root]
        for v in queue:
            for w in g.adj[v]:
                if labels[w] == -1:
                    labels[w] = (ec[(v, w)] - labels[v]) % 3
                    queue.append(w)

    for u, v in g.edges():
        if (labels[u] + labels[v]) % 3 != ec[(u, v)]:
            logger.debug(f"reconstruction inconsistent on edge ({u}, {v})")
            raise CharacterizationFails(f"edge ({u}, {v}) is not the sum of its endpoint colors")
    return Coloring(labels)
