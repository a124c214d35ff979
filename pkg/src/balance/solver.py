"""Exact backtracking search for balanced colorings.

One engine serves both problems: with k colors every vertex v must see
exactly deg(v)/k neighbors of each color. The 2-color case maps color 0 to
+1 and color 1 to -1.
"""
from enum import Enum
from itertools import product
from typing import List, NamedTuple, Sequence

from src.balance.coloring import Coloring, SignedColoring, is_2_balanced, is_3_balanced
from src.core.config import get_settings
from src.core.errors import CrossCheckFailed, SizeLimitExceeded
from src.core.logging import logger
from src.graph.graph import Graph, bfs_order

BRUTE_FORCE_MAX = 12


class SolveStatus(str, Enum):
    FOUND = "found"
    NONE = "none"
    BUDGET = "budget"


class SolveResult(NamedTuple):
    status: SolveStatus
    coloring: Coloring | SignedColoring | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status is SolveStatus.FOUND


class _Contradiction(Exception):
    pass


class _BudgetExhausted(Exception):
    pass


class _State:
    __slots__ = ("color", "domain", "count", "class_deg")

    def __init__(self, color, domain, count, class_deg):
        self.color: List[int] = color
        self.domain: List[int] = domain
        self.count: List[List[int]] = count
        self.class_deg: List[int] = class_deg

    def copy(self) -> "_State":
        return _State(
            self.color[:], self.domain[:], [c[:] for c in self.count], self.class_deg[:]
        )


class BalancedSearch:
    """Backtracking with quota propagation.

    Propagation rules, applied to a worklist of centers whose neighborhoods
    changed:
      - a color whose quota is met at v is removed from v's uncolored neighbors;
      - if exactly as many uncolored neighbors can still take a color as v
        needs, they all take it; fewer is a contradiction;
      - singleton domains are assigned;
      - every color class carries total degree exactly 2|E|/k.
    """

    def __init__(self, g: Graph, k: int = 3, budget: int | None = None,
                 color_order: Sequence[int] | None = None):
        self.g = g
        self.k = k
        self.budget = budget if budget is not None else get_settings().solver.budget
        order = list(color_order) if color_order is not None else list(range(k))
        if sorted(order) != list(range(k)):
            raise ValueError(f"color order {order} is not a permutation of 0..{k - 1}")
        self.color_order = order
        self.deg = g.degrees()
        self.quota = [d // k for d in self.deg]
        self.class_target = 2 * g.edge_count // k
        self.full = (1 << k) - 1
        self.nodes = 0
        if g.n:
            start = max(range(g.n), key=lambda v: (self.deg[v], -v))
            self.rank = [0] * g.n
            for i, v in enumerate(bfs_order(g, start)):
                self.rank[v] = i
        else:
            self.rank = []

    # propagation

    def _assign(self, s: _State, v: int, c: int, dirty: List[int]) -> None:
        if s.color[v] != -1:
            if s.color[v] != c:
                raise _Contradiction
            return
        if not s.domain[v] >> c & 1:
            raise _Contradiction
        s.color[v] = c
        s.domain[v] = 1 << c
        s.class_deg[c] += self.deg[v]
        if s.class_deg[c] > self.class_target:
            raise _Contradiction
        for u in self.g.adj[v]:
            s.count[u][c] += 1
            if s.count[u][c] > self.quota[u]:
                raise _Contradiction
            dirty.append(u)

    def _restrict(self, s: _State, w: int, mask: int, dirty: List[int]) -> None:
        new = s.domain[w] & mask
        if new == s.domain[w]:
            return
        if not new:
            raise _Contradiction
        s.domain[w] = new
        dirty.extend(self.g.adj[w])
        if new & (new - 1) == 0:
            self._assign(s, w, new.bit_length() - 1, dirty)

    def _propagate(self, s: _State, dirty: List[int]) -> None:
        adj = self.g.adj
        while dirty:
            u = dirty.pop()
            for c in range(self.k):
                need = self.quota[u] - s.count[u][c]
                open_ = [w for w in adj[u] if s.color[w] == -1 and s.domain[w] >> c & 1]
                if need == 0:
                    for w in open_:
                        self._restrict(s, w, self.full ^ (1 << c), dirty)
                elif len(open_) < need:
                    raise _Contradiction
                elif len(open_) == need:
                    for w in open_:
                        self._assign(s, w, c, dirty)

        for c in range(self.k):
            reachable = s.class_deg[c] + sum(
                self.deg[w] for w in range(self.g.n)
                if s.color[w] == -1 and s.domain[w] >> c & 1
            )
            if reachable < self.class_target:
                raise _Contradiction

    # search

    def _branch_vertex(self, s: _State) -> int:
        best, best_key = -1, None
        for v in range(self.g.n):
            if s.color[v] != -1:
                continue
            key = (s.domain[v].bit_count(), self.rank[v])
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def _values(self, s: _State, v: int) -> List[int]:
        first = self.color_order[0]
        assigned = [c for c in s.color if c != -1]
        if not assigned:
            allowed = {first}
        elif self.k == 3 and all(c == first for c in assigned):
            allowed = {first, self.color_order[1]}
        else:
            allowed = set(range(self.k))
        return [c for c in self.color_order if c in allowed and s.domain[v] >> c & 1]

    def _search(self, s: _State) -> List[int] | None:
        v = self._branch_vertex(s)
        if v == -1:
            return s.color
        for c in self._values(s, v):
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExhausted
            child = s.copy()
            try:
                dirty: List[int] = []
                self._assign(child, v, c, dirty)
                self._propagate(child, dirty)
            except _Contradiction:
                continue
            found = self._search(child)
            if found is not None:
                return found
        return None

    def run(self) -> SolveResult:
        if any(d % self.k for d in self.deg):
            return SolveResult(SolveStatus.NONE, None, 0)
        s = _State(
            [-1] * self.g.n,
            [self.full] * self.g.n,
            [[0] * self.k for _ in range(self.g.n)],
            [0] * self.k,
        )
        try:
            self._propagate(s, list(range(self.g.n)))
            labels = self._search(s)
        except _Contradiction:
            labels = None
        except _BudgetExhausted:
            return SolveResult(SolveStatus.BUDGET, None, self.nodes)
        if labels is None:
            return SolveResult(SolveStatus.NONE, None, self.nodes)
        return SolveResult(SolveStatus.FOUND, self._wrap(labels), self.nodes)

    def _wrap(self, labels: List[int]) -> Coloring | SignedColoring:
        if self.k == 2:
            return SignedColoring(1 if c == 0 else -1 for c in labels)
        return Coloring(labels)


def solve_3_balanced(g: Graph, budget: int | None = None,
                     color_order: Sequence[int] | None = None) -> SolveResult:
    """Color order defaults to solver.color_order from the settings."""
    if color_order is None:
        color_order = get_settings().solver.color_order
    search = BalancedSearch(g, k=3, budget=budget, color_order=color_order)
    result = search.run()
    if result.found and not is_3_balanced(g, result.coloring):
        raise CrossCheckFailed("solver produced an unbalanced coloring")
    logger.debug(f"solve_3_balanced n={g.n} m={g.edge_count}: {result.status.value} after {result.nodes} nodes")
    return result


def solve_2_balanced(g: Graph, budget: int | None = None,
                     color_order: Sequence[int] | None = None) -> SolveResult:
    search = BalancedSearch(g, k=2, budget=budget, color_order=color_order)
    result = search.run()
    if result.found and not is_2_balanced(g, result.coloring):
        raise CrossCheckFailed("solver produced an unbalanced signed coloring")
    logger.debug(f"solve_2_balanced n={g.n} m={g.edge_count}: {result.status.value} after {result.nodes} nodes")
    return result


def brute_force_3_balanced(g: Graph) -> Coloring | None:
    """First 3-balanced coloring in lexicographic order, by trying all 3^n."""
    if g.n > BRUTE_FORCE_MAX:
        raise SizeLimitExceeded(f"brute force limited to n <= {BRUTE_FORCE_MAX}")
    for labels in product(range(3), repeat=g.n):
        if is_3_balanced(g, labels):
            return Coloring(labels)
    return None
