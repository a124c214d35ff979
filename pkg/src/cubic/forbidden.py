"""Subgraphs that force a contradiction in any 3-balanced coloring of a cubic host."""
from typing import Dict, List, NamedTuple

from src.core.errors import NotCubic
from src.graph.graph import Graph, bridges, from_edges
from src.graph.subgraph import subgraph_monomorphism_exists


class ForbiddenPattern(NamedTuple):
    name: str
    graph: Graph


def _ring(k: int, offset: int = 0) -> List[tuple]:
    return [(offset + i, offset + (i + 1) % k) for i in range(k)]


# D: K4 minus an edge
_D = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])

# EB: triangles 0 1 2 and 3 4 5 joined through 6
_EB = from_edges(7, _ring(3) + _ring(3, 3) + [(0, 6), (3, 6)])

# F1: square 0 1 2 3, path 2 4 5 6 0 between opposite corners
_F1 = from_edges(7, _ring(4) + [(2, 4), (4, 5), (5, 6), (6, 0)])

# F2: 8-cycle with chords between its 2nd/4th and 1st/5th vertices
_F2 = from_edges(8, _ring(8) + [(1, 3), (0, 4)])

# F3: 7-cycle, path 0 7 8 with 8 also joined to cycle vertices 2 and 5
_F3 = from_edges(9, _ring(7) + [(0, 7), (7, 8), (8, 2), (8, 5)])

# F4: 5-cycle with 5 joined to 6 and 7, 6 to cycle vertices 1 and 3, 7 to 4
_F4 = from_edges(8, _ring(5) + [(5, 6), (5, 7), (6, 1), (6, 3), (7, 4)])

FORBIDDEN_PATTERNS: List[ForbiddenPattern] = [
    ForbiddenPattern("D", _D),
    ForbiddenPattern("EB", _EB),
    ForbiddenPattern("F1", _F1),
    ForbiddenPattern("F2", _F2),
    ForbiddenPattern("F3", _F3),
    ForbiddenPattern("F4", _F4),
]

PATTERNS_BY_NAME: Dict[str, Graph] = {p.name: p.graph for p in FORBIDDEN_PATTERNS}


class ForbiddenScan(NamedTuple):
    patterns: List[str]
    has_bridge: bool

    @property
    def excluded(self) -> bool:
        """True when the scan alone rules out a 3-balanced coloring."""
        return self.has_bridge or bool(self.patterns)


def forbidden_scan(g: Graph) -> ForbiddenScan:
    if not g.is_cubic():
        raise NotCubic("forbidden pattern scan needs a cubic graph")
    found = [p.name for p in FORBIDDEN_PATTERNS if subgraph_monomorphism_exists(p.graph, g)]
    return ForbiddenScan(found, bool(bridges(g)))
