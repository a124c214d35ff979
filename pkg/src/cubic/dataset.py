"""Cubic 3-balanced graphs as datasets of nine bijections between color classes.

A dataset holds three disjoint vertex sets V_0, V_1, V_2 of equal even size
and bijections s_ij: V_i -> V_j with s_ji the inverse of s_ij and s_ii a
fixed-point-free involution. Its graph has edges v -- s_ij(v).
"""
import random
from typing import Dict, List, Sequence, Tuple

from src.balance.coloring import Coloring, is_3_balanced
from src.core.errors import HypothesisViolated, InvalidDataset, LengthMismatch, NotCubic
from src.graph.graph import Graph, from_edges, edge_id

Bijection = Dict[int, int]


class CubicDataset:
    __slots__ = ("vertex_sets", "maps")

    def __init__(self, vertex_sets: Sequence[Sequence[int]], maps: Dict[Tuple[int, int], Bijection]):
        self.vertex_sets: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in vertex_sets)
        self.maps: Dict[Tuple[int, int], Bijection] = {k: dict(v) for k, v in maps.items()}
        self.validate()

    @property
    def class_size(self) -> int:
        return len(self.vertex_sets[0])

    def validate(self) -> None:
        if len(self.vertex_sets) != 3:
            raise InvalidDataset("need exactly three vertex sets")
        sets = [set(s) for s in self.vertex_sets]
        if sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]:
            raise InvalidDataset("vertex sets are not disjoint")
        sizes = {len(s) for s in sets}
        if len(sizes) != 1:
            raise InvalidDataset(f"vertex sets have different sizes {sorted(len(s) for s in sets)}")
        if self.class_size % 2:
            raise InvalidDataset(f"class size {self.class_size} is odd")

        for i in range(3):
            for j in range(3):
                s = self.maps.get((i, j))
                if s is None:
                    raise InvalidDataset(f"missing bijection s_{i}{j}")
                if set(s) != sets[i] or set(s.values()) != sets[j] or len(set(s.values())) != len(s):
                    raise InvalidDataset(f"s_{i}{j} is not a bijection V_{i} -> V_{j}")
        for i in range(3):
            for j in range(3):
                s, t = self.maps[(i, j)], self.maps[(j, i)]
                if any(t[s[v]] != v for v in s):
                    raise InvalidDataset(f"s_{j}{i} is not the inverse of s_{i}{j}")
            if any(self.maps[(i, i)][v] == v for v in sets[i]):
                raise InvalidDataset(f"s_{i}{i} has a fixed point")

    def to_dict(self) -> dict:
        return {
            "vertex_sets": [list(s) for s in self.vertex_sets],
            "maps": {f"{i}{j}": {str(v): w for v, w in sorted(s.items())} for (i, j), s in sorted(self.maps.items())},
        }


def dataset_from_colored_graph(g: Graph, c: Coloring | Sequence[int]) -> CubicDataset:
    """s_ij(v) is the unique neighbor of v in V_j."""
    if not g.is_cubic():
        raise NotCubic("dataset needs a cubic graph")
    if len(c) != g.n:
        raise LengthMismatch(f"coloring has {len(c)} labels for {g.n} vertices")
    if not is_3_balanced(g, c):
        raise HypothesisViolated("coloring is not 3-balanced")

    vertex_sets: List[List[int]] = [[], [], []]
    for v in range(g.n):
        vertex_sets[c[v]].append(v)
    maps: Dict[Tuple[int, int], Bijection] = {(i, j): {} for i in range(3) for j in range(3)}
    for v in range(g.n):
        for w in g.adj[v]:
            maps[(c[v], c[w])][v] = w
    return CubicDataset(vertex_sets, maps)


def graph_from_dataset(d: CubicDataset) -> Tuple[Graph, Coloring]:
    """Vertices renumbered V_0 then V_1 then V_2, each in increasing order."""
    d.validate()
    index: Dict[int, int] = {}
    labels: List[int] = []
    for i, s in enumerate(d.vertex_sets):
        for v in s:
            index[v] = len(labels)
            labels.append(i)
    edges = {
        edge_id(index[v], index[w])
        for s in d.maps.values()
        for v, w in s.items()
    }
    return from_edges(len(labels), sorted(edges)), Coloring(labels)


def _random_bijection(src: Sequence[int], dst: Sequence[int], rng: random.Random) -> Bijection:
    shuffled = list(dst)
    rng.shuffle(shuffled)
    return dict(zip(src, shuffled))


def _random_involution(vertices: Sequence[int], rng: random.Random) -> Bijection:
    shuffled = list(vertices)
    rng.shuffle(shuffled)
    s: Bijection = {}
    for a, b in zip(shuffled[::2], shuffled[1::2]):
        s[a], s[b] = b, a
    return s


def random_dataset(size: int, rng: random.Random | None = None) -> CubicDataset:
    """Uniformly shuffled bijections on V_i = {i*size, ..., (i+1)*size - 1}."""
    if size <= 0 or size % 2:
        raise InvalidDataset(f"class size must be positive and even, got {size}")
    rng = rng or random.Random()
    sets = [list(range(i * size, (i + 1) * size)) for i in range(3)]
    maps: Dict[Tuple[int, int], Bijection] = {}
    for i in range(3):
        maps[(i, i)] = _random_involution(sets[i], rng)
        for j in range(i + 1, 3):
            s = _random_bijection(sets[i], sets[j], rng)
            maps[(i, j)] = s
            maps[(j, i)] = {w: v for v, w in s.items()}
    return CubicDataset(sets, maps)
