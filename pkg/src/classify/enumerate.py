"""Connected cubic graphs on n vertices, one per isomorphism class.

Generation grows a graph from vertex 0 joined to 1, 2, 3. At each step one
touched vertex of degree below 3 receives all its missing neighbors: other
touched open vertices, or the lowest-numbered untouched ones (untouched
vertices are interchangeable). Partial graphs are deduplicated by the
canonical form of their touched part, so isomorphic states expand once.
"""
from itertools import combinations
from typing import Iterator, List, Set

from src.core.config import get_settings
from src.core.errors import BadN
from src.core.logging import logger
from src.graph.canonical import canonical_form, canonical_graph
from src.graph.graph import Graph, from_edges

STRATEGIES = ("max-degree", "first-open")


class CubicEnumerator:
    def __init__(self, n: int, strategy: str = "max-degree"):
        limit = get_settings().classify.max_order
        if n % 2 or not 4 <= n <= limit:
            raise BadN(f"cubic enumeration needs an even n in 4..{limit}, got {n}")
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
        self.n = n
        self.strategy = strategy
        self.adj: List[Set[int]] = [set() for _ in range(n)]
        self.seen: Set[bytes] = set()
        self.states = 0

    def _graph(self) -> Graph:
        return from_edges(self.n, [(u, v) for u in range(self.n) for v in self.adj[u] if u < v])

    def _state_key(self) -> bytes:
        touched = [v for v in range(self.n) if self.adj[v]]
        return canonical_form(self._graph().induced(touched))

    def _pick(self, open_touched: List[int]) -> int:
        if self.strategy == "first-open":
            return open_touched[0]
        return max(open_touched, key=lambda v: (len(self.adj[v]), -v))

    def _connect(self, x: int, partners) -> None:
        for w in partners:
            self.adj[x].add(w)
            self.adj[w].add(x)

    def _disconnect(self, x: int, partners) -> None:
        for w in partners:
            self.adj[x].discard(w)
            self.adj[w].discard(x)

    def _expand(self) -> Iterator[Graph]:
        key = self._state_key()
        if key in self.seen:
            return
        self.seen.add(key)
        self.states += 1

        open_touched = [v for v in range(self.n) if 0 < len(self.adj[v]) < 3]
        untouched = [v for v in range(self.n) if not self.adj[v]]
        if not open_touched:
            # closed touched part with vertices left over would be disconnected
            if not untouched:
                yield canonical_graph(self._graph())
            return

        x = self._pick(open_touched)
        need = 3 - len(self.adj[x])
        candidates = [w for w in open_touched if w != x and w not in self.adj[x]]
        for fresh in range(min(need, len(untouched)) + 1):
            for combo in combinations(candidates, need - fresh):
                partners = list(combo) + untouched[:fresh]
                self._connect(x, partners)
                yield from self._expand()
                self._disconnect(x, partners)

    def run(self) -> Iterator[Graph]:
        self._connect(0, [1, 2, 3])
        try:
            yield from self._expand()
        finally:
            self._disconnect(0, [1, 2, 3])
        logger.info(f"enumerated cubic graphs on {self.n} vertices from {self.states} partial states")


def enumerate_cubic(n: int, strategy: str = "max-degree") -> Iterator[Graph]:
    """Canonically labeled connected cubic graphs on n vertices."""
    return CubicEnumerator(n, strategy).run()
