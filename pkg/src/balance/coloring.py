import json
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from pydantic import BaseModel

from src.core.errors import InvalidLabel, LengthMismatch
from src.graph.graph import Graph

COLORS = (0, 1, 2)


class Coloring:
    """Vertex labels in Z3, one per vertex."""

    __slots__ = ("labels",)

    def __init__(self, labels: Iterable[int]):
        labels = tuple(int(x) for x in labels)
        for x in labels:
            if x not in COLORS:
                raise InvalidLabel(f"label {x} is not in Z3")
        self.labels: Tuple[int, ...] = labels

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Coloring):
            return self.labels == other.labels
        if isinstance(other, (tuple, list)):
            return self.labels == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Coloring({list(self.labels)})"

    def transform(self, eps: int, shift: int) -> "Coloring":
        """The coloring eps*l + shift, eps in {1, -1}."""
        return Coloring((eps * x + shift) % 3 for x in self.labels)

    def to_json(self) -> str:
        return json.dumps(list(self.labels))

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        return cls(json.loads(text))


class SignedColoring:
    """Labels in {+1, -1} for 2-balanced work."""

    __slots__ = ("labels",)

    def __init__(self, labels: Iterable[int]):
        labels = tuple(int(x) for x in labels)
        for x in labels:
            if x not in (1, -1):
                raise InvalidLabel(f"signed label must be +1 or -1, got {x}")
        self.labels: Tuple[int, ...] = labels

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SignedColoring):
            return self.labels == other.labels
        if isinstance(other, (tuple, list)):
            return self.labels == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"SignedColoring({list(self.labels)})"

    def to_json(self) -> str:
        return json.dumps(list(self.labels))

    @classmethod
    def from_json(cls, text: str) -> "SignedColoring":
        return cls(json.loads(text))


class ColorClassStats(BaseModel):
    """|V_i| for each color and |E_ij| for each unordered color pair ("01", "22", ...)."""

    vertex_class_sizes: Tuple[int, int, int]
    edge_class_sizes: Dict[str, int]

    def e(self, i: int, j: int) -> int:
        a, b = min(i, j), max(i, j)
        return self.edge_class_sizes[f"{a}{b}"]


class PrecheckResult:
    """Pass, or Fail with the first violated necessary condition."""

    __slots__ = ("passed", "reason")

    def __init__(self, passed: bool, reason: str | None = None):
        self.passed = passed
        self.reason = reason

    def __bool__(self) -> bool:
        return self.passed

    def __repr__(self) -> str:
        return "Pass" if self.passed else f"Fail({self.reason})"


def _check_length(g: Graph, labels: Sequence[int]) -> None:
    if len(labels) != g.n:
        raise LengthMismatch(f"coloring has {len(labels)} labels for {g.n} vertices")


def is_3_balanced(g: Graph, c: Coloring | Sequence[int]) -> bool:
    _check_length(g, c)
    for v in range(g.n):
        counts = [0, 0, 0]
        for w in g.adj[v]:
            counts[c[w]] += 1
        if not counts[0] == counts[1] == counts[2]:
            return False
    return True


def is_2_balanced(g: Graph, s: SignedColoring | Sequence[int]) -> bool:
    _check_length(g, s)
    return all(sum(s[w] for w in g.adj[v]) == 0 for v in range(g.n))


def order_precheck(g: Graph) -> PrecheckResult:
    """Necessary conditions for a 3-balanced coloring. Pass does not imply one exists."""
    for v in range(g.n):
        if g.degree(v) % 3:
            return PrecheckResult(False, f"degree {g.degree(v)} of vertex {v} not divisible by 3")
    if g.edge_count % 9:
        return PrecheckResult(False, f"edge count {g.edge_count} not divisible by 9")
    r = g.regularity()
    if r:
        if r % 3:
            return PrecheckResult(False, f"regular degree {r} not divisible by 3")
        if g.n % 3:
            return PrecheckResult(False, f"{r}-regular with {g.n} vertices, not divisible by 3")
        if (r * g.n) % 2:
            return PrecheckResult(False, f"r*n = {r * g.n} is odd")
    return PrecheckResult(True)


def stats(g: Graph, c: Coloring | Sequence[int]) -> ColorClassStats:
    _check_length(g, c)
    sizes = [0, 0, 0]
    for x in c:
        sizes[x] += 1
    edges = {f"{i}{j}": 0 for i in COLORS for j in COLORS if i <= j}
    for u, v in g.edges():
        a, b = sorted((c[u], c[v]))
        edges[f"{a}{b}"] += 1
    return ColorClassStats(vertex_class_sizes=tuple(sizes), edge_class_sizes=edges)


def class_degree_sums(g: Graph, c: Coloring | Sequence[int]) -> Tuple[int, int, int]:
    """Total degree of each color class; 2|E|/3 apiece when c is 3-balanced."""
    sums = [0, 0, 0]
    for v in range(g.n):
        sums[c[v]] += g.degree(v)
    return tuple(sums)


def transforms(c: Coloring) -> List[Coloring]:
    return [c.transform(eps, shift) for eps in (1, -1) for shift in COLORS]


def normalize_coloring(c: Coloring | Sequence[int]) -> Coloring:
    """Lexicographically least member of the orbit {eps*c + i0}."""
    if not isinstance(c, Coloring):
        c = Coloring(c)
    return min(transforms(c), key=lambda t: t.labels)
