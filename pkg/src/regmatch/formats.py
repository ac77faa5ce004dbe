"""graph6 reading/writing and DOT export."""
from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError

_OFFSET = 63


class Graph6Error(GraphError):
    pass


def _encode_order(n: int) -> bytes:
    if n < 0:
        raise Graph6Error(f"negative order {n}")
    if n <= 62:
        return bytes([n + _OFFSET])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + _OFFSET for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + _OFFSET for s in range(30, -1, -6)])
    raise Graph6Error(f"order {n} too large for graph6")


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - _OFFSET, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 36-bit order prefix")
        groups, size = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 18-bit order prefix")
        groups, size = data[1:4], 4
    n = 0
    for c in groups:
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} outside 63..126 in order prefix")
        n = (n << 6) | (c - _OFFSET)
    return n, size


def to_graph6(g: Graph) -> bytes:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    n = g.n
    out = bytearray(_encode_order(n))
    masks = g.masks
    acc = 0
    nbits = 0
    for j in range(1, n):
        mj = masks[j]
        for i in range(j):
            acc = (acc << 1) | (mj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + _OFFSET)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + _OFFSET)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record. Surrounding whitespace is ignored."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte value {c} outside graph6 range 63..126")
    n, head = _decode_order(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[head:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} body bytes for order {n}, got {len(body)}")
    masks = [0] * n
    k = 0
    i, j = 0, 1
    for c in body:
        x = c - _OFFSET
        for shift in range(5, -1, -1):
            bit = x >> shift & 1
            if k < nbits:
                if bit:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error("nonzero padding bits")
            k += 1
    return Graph.from_masks(masks)


def read_graph6_lines(data: bytes) -> list[Graph]:
    """Parse every non-blank line of a graph6 file."""
    return [parse_graph6(line) for line in data.splitlines() if line.strip()]


def to_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    if labels is not None and len(labels) != g.n:
        raise GraphError(f"{len(labels)} labels for {g.n} vertices")
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            text = str(labels[v]).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{text}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
