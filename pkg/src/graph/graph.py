from typing import Iterable, List, Sequence, Set, Tuple

from src.core.errors import DuplicateEdge, LoopEdge, VertexOutOfRange

EdgeId = Tuple[int, int]


def edge_id(u: int, v: int) -> EdgeId:
    """Canonical endpoint order, smaller endpoint first."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Holds a sorted neighbor tuple per vertex and a neighbor bitset per vertex
    (python ints, so there is no size cap on the bitsets).
    """

    __slots__ = ("n", "adj", "_masks", "_edges")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        masks = []
        for a in self.adj:
            m = 0
            for w in a:
                m |= 1 << w
            masks.append(m)
        self._masks: Tuple[int, ...] = tuple(masks)
        self._edges: Tuple[EdgeId, ...] = tuple(
            (u, v) for u in range(n) for v in self.adj[u] if u < v
        )

    # queries

    def edges(self) -> Tuple[EdgeId, ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adj[v]

    def mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def regularity(self) -> int | None:
        """Common degree r when the graph is r-regular, else None."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        if not degs:
            return 0
        return None

    def is_regular(self) -> bool:
        return self.regularity() is not None

    def is_cubic(self) -> bool:
        return self.n > 0 and self.regularity() == 3

    # derived graphs

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which vertex v becomes perm[v]."""
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self._edges])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return from_edges(len(vertices), edges)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        edges = list(self._edges) + [(u + shift, v + shift) for u, v in other.edges()]
        return from_edges(self.n + other.n, edges)

    def without_edge(self, e: EdgeId) -> "Graph":
        return from_edges(self.n, [f for f in self._edges if f != edge_id(*e)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a simple graph; loops, repeated edges and bad endpoints are rejected."""
    adj: List[Set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def from_lcf(n: int, shifts: Sequence[int], repeats: int = 1) -> Graph:
    """Hamiltonian cubic graph in LCF notation [shifts]^repeats."""
    pattern = list(shifts) * repeats
    edges = {edge_id(i, (i + 1) % n) for i in range(n)}
    for i in range(n):
        edges.add(edge_id(i, (i + pattern[i % len(pattern)]) % n))
    return from_edges(n, sorted(edges))


def connected_components(g: Graph) -> List[List[int]]:
    """Vertex classes of the components, each sorted, ordered by least vertex."""
    seen = [False] * g.n
    components = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(sorted(comp))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def bridges(g: Graph) -> Set[EdgeId]:
    """Cut edges via one iterative DFS with low-link values."""
    disc = [-1] * g.n
    low = [0] * g.n
    found: Set[EdgeId] = set()
    timer = 0

    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frame: (vertex, parent, neighbor iterator)
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    found.add(edge_id(parent, v))
    return found


def bfs_order(g: Graph, start: int) -> List[int]:
    """Breadth-first order from start, then the remaining components."""
    order: List[int] = []
    seen = [False] * g.n
    starts = [start] + [v for v in range(g.n) if v != start]
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        order.extend(queue)
    return order
