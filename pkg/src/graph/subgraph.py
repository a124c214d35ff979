from typing import Dict, List

from src.graph.graph import Graph, bfs_order


def _pattern_order(pattern: Graph) -> List[int]:
    if pattern.n == 0:
        return []
    start = max(range(pattern.n), key=lambda v: (pattern.degree(v), -v))
    return bfs_order(pattern, start)


def find_subgraph_monomorphism(pattern: Graph, host: Graph) -> Dict[int, int] | None:
    """Injective map carrying every pattern edge onto a host edge (not necessarily induced).

    Pattern vertices are placed in BFS order; candidates are the host vertices
    adjacent to the images of all placed pattern neighbors and of large enough
    degree.
    """
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return None
    # sorted degree sequences must be dominated position by position
    pd = sorted(pattern.degrees(), reverse=True)
    hd = sorted(host.degrees(), reverse=True)
    if any(p > h for p, h in zip(pd, hd)):
        return None

    order = _pattern_order(pattern)
    position = {p: i for i, p in enumerate(order)}
    earlier = [
        [q for q in pattern.neighbors(p) if position[q] < position[p]]
        for p in order
    ]
    full = (1 << host.n) - 1
    image: Dict[int, int] = {}

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        cand = full & ~used
        for q in earlier[i]:
            cand &= host.mask(image[q])
        need = pattern.degree(p)
        while cand:
            low = cand & -cand
            h = low.bit_length() - 1
            cand ^= low
            if host.degree(h) < need:
                continue
            image[p] = h
            if extend(i + 1, used | low):
                return True
            del image[p]
        return False

    if extend(0, 0):
        return dict(image)
    return None


def subgraph_monomorphism_exists(pattern: Graph, host: Graph) -> bool:
    return find_subgraph_monomorphism(pattern, host) is not None
