"""Canonical labeling by partition refinement with individualization.

Cells start grouped by (color, degree) and are refined to an equitable
partition. The first smallest non-singleton cell is individualized; children
with a non-minimal refinement trace are pruned and twin vertices are tried
once. The least adjacency certificate over the remaining leaves wins.
"""
from typing import Dict, List, Sequence, Tuple

from src.core.errors import LengthMismatch, SizeLimitExceeded
from src.graph.graph import Graph
from src.graph.graph6 import emit_graph6

MAX_ORDER = 20

Cells = List[List[int]]


def _refine(g: Graph, cells: Cells, trace: list) -> Cells:
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            new_cells: Cells = []
            for ci, cell in enumerate(cells):
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: Dict[int, List[int]] = {}
                for v in cell:
                    groups.setdefault((g.mask(v) & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                    continue
                keys = sorted(groups)
                trace.append((s, ci, tuple((k, len(groups[k])) for k in keys)))
                new_cells.extend(groups[k] for k in keys)
            if len(new_cells) != len(cells):
                cells = new_cells
                changed = True
                break
    return cells


def _twin_representatives(g: Graph, cell: List[int]) -> List[int]:
    reps: List[int] = []
    for v in sorted(cell):
        for r in reps:
            if g.mask(v) & ~(1 << r) == g.mask(r) & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def _certificate(g: Graph, order: List[int]) -> Tuple[int, ...]:
    label = [0] * g.n
    for i, v in enumerate(order):
        label[v] = i
    rows = []
    for v in order:
        row = 0
        for w in g.adj[v]:
            row |= 1 << label[w]
        rows.append(row)
    return tuple(rows)


def canonical_order(g: Graph, colors: Sequence[int] | None = None) -> List[int]:
    """Vertices listed in canonical order: order[i] receives label i."""
    if g.n > MAX_ORDER:
        raise SizeLimitExceeded(f"canonical form supports n <= {MAX_ORDER}, got {g.n}")
    if colors is not None and len(colors) != g.n:
        raise LengthMismatch(f"{len(colors)} colors for {g.n} vertices")
    if g.n == 0:
        return []

    keyed: Dict[tuple, List[int]] = {}
    for v in range(g.n):
        key = (colors[v] if colors is not None else 0, g.degree(v))
        keyed.setdefault(key, []).append(v)
    cells = _refine(g, [keyed[k] for k in sorted(keyed)], [])

    best: list = [None, None]

    def visit(cells: Cells) -> None:
        if len(cells) == g.n:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return

        size = min(len(c) for c in cells if len(c) > 1)
        t = next(i for i, c in enumerate(cells) if len(c) == size)
        children = []
        for v in _twin_representatives(g, cells[t]):
            split = cells[:t] + [[v], [w for w in cells[t] if w != v]] + cells[t + 1:]
            trace: list = []
            refined = _refine(g, split, trace)
            children.append(((len(refined), tuple(trace)), refined))
        least = min(key for key, _ in children)
        for key, refined in children:
            if key == least:
                visit(refined)

    visit(cells)
    return best[1]


def _relabel(g: Graph, order: List[int]) -> Tuple[Graph, List[int]]:
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm), perm


def canonical_label(g: Graph, colors: Sequence[int] | None = None) -> Tuple[Graph, List[int]]:
    """Canonically relabeled graph and the old-to-new vertex map."""
    return _relabel(g, canonical_order(g, colors))


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    """Equal for two (colored) graphs iff they are isomorphic."""
    order = canonical_order(g, colors)
    relabeled, _ = _relabel(g, order)
    form = emit_graph6(relabeled).encode("ascii")
    if colors is not None:
        form += b":" + bytes(colors[v] % 256 for v in order)
    return form


def canonical_graph(g: Graph) -> Graph:
    return canonical_label(g)[0]


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
