"""graph6 reader and writer.

Upper-triangle bits in column order (j = 1..n-1, i < j), packed into
6-bit groups offset by 63.
"""
from pathlib import Path
from typing import Iterable, Iterator, List

from src.core.errors import Graph6Error, MalformedHeader, TruncatedPayload
from src.graph.graph import Graph, from_edges

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(data: bytes) -> tuple[int, int]:
    """Vertex count and payload offset."""
    if not data:
        raise MalformedHeader("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeader("truncated 8-byte size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise MalformedHeader("truncated 4-byte size header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def emit_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc, nbits = 0, 0
    for j in range(1, g.n):
        row = g.mask(j)
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if any(b < 63 or b > 126 for b in data):
        raise MalformedHeader("graph6 characters must lie in 63..126")

    n, offset = _decode_n(data)
    payload = data[offset:]
    nbits = n * (n - 1) // 2
    needed = (nbits + 5) // 6
    if len(payload) < needed:
        raise TruncatedPayload(f"need {needed} payload bytes for n={n}, got {len(payload)}")
    if len(payload) > needed:
        raise Graph6Error(f"{len(payload) - needed} trailing bytes after payload")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if not line or line == HEADER:
            continue
        yield parse_graph6(line)


def read_graph6_file(path: str | Path) -> List[Graph]:
    with open(path, "r", encoding="ascii") as f:
        return list(iter_graph6_lines(f))


def write_graph6_file(path: str | Path, graphs: Iterable[Graph], header: bool = False) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="ascii") as f:
        if header:
            f.write(HEADER)
        for g in graphs:
            f.write(emit_graph6(g) + "\n")
