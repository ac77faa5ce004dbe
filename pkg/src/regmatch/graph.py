"""Immutable simple graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
tests and set algebra are word-level operations. Every public constructor
validates symmetry, loop-freedom and index range.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph operations."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("_n", "_masks", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise GraphError(f"negative order {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._n = n
        self._masks = tuple(masks)
        self._hash: int | None = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from per-vertex neighbour bitmasks, validating them."""
        n = len(masks)
        full = (1 << n) - 1
        for u, mu in enumerate(masks):
            if mu & ~full:
                raise GraphError(f"vertex {u} has a neighbour index >= {n}")
            if mu >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in iter_bits(mu):
                if not masks[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g._n = n
        g._masks = tuple(masks)
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def __len__(self) -> int:
        return self._n

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._masks[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and bool(self._masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._masks]

    @property
    def num_edges(self) -> int:
        total = sum(m.bit_count() for m in self._masks)
        assert total % 2 == 0
        return total // 2

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, mu in enumerate(self._masks):
            for v in iter_bits(mu >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled in ascending vertex order.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        sel = 0
        for v in keep:
            sel |= 1 << v
        masks = []
        for v in keep:
            m = 0
            for w in iter_bits(self._masks[v] & sel):
                m |= 1 << index[w]
            masks.append(m)
        return Graph.from_masks(masks), keep

    def remove_vertices(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        return self.subgraph(v for v in range(self._n) if v not in drop)

    def components(self, within: int | None = None) -> list[list[int]]:
        """Connected components (sorted vertex lists, ordered by least vertex).

        ``within`` optionally restricts to the subgraph induced by a vertex mask.
        """
        remaining = (1 << self._n) - 1 if within is None else within
        comps = []
        while remaining:
            start = remaining & -remaining
            seen = start
            frontier = start
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self._masks[v]
                nxt &= remaining & ~seen
                seen |= nxt
                frontier = nxt
            remaining &= ~seen
            comps.append(list(iter_bits(seen)))
        return comps

    def is_connected(self) -> bool:
        return self._n > 0 and len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._masks)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()!r})"


def _check_edge(g: Graph, e: Edge) -> Edge:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"edge ({u}, {v}) out of range for order {g.n}")
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError("complete graph needs at least one vertex")
    full = (1 << k) - 1
    return Graph.from_masks([full ^ (1 << v) for v in range(k)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {k}")
    return Graph(k, ((i, (i + 1) % k) for i in range(k)))


def path_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(k, ((i, i + 1) for i in range(k - 1)))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def circulant_graph(v: int, jumps: Iterable[int]) -> Graph:
    """Circulant graph on Z_v: ``i ~ i +- j (mod v)`` for each jump ``j``.

    Jumps must be distinct and satisfy ``1 <= j < v/2`` so every jump adds
    exactly two to each degree.
    """
    jumps = list(jumps)
    if v < 3:
        raise GraphError(f"circulant order must be >= 3, got {v}")
    if len(set(jumps)) != len(jumps):
        raise GraphError(f"duplicate jumps in {jumps}")
    for j in jumps:
        if not (1 <= j and 2 * j < v):
            raise GraphError(f"jump {j} outside 1..{(v - 1) // 2} for order {v}")
    return Graph(v, ((i, (i + j) % v) for i in range(v) for j in jumps))


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Blockwise disjoint union in input order."""
    if not parts:
        raise GraphError("disjoint union of an empty list")
    masks: list[int] = []
    offset = 0
    for g in parts:
        masks.extend(m << offset for m in g.masks)
        offset += g.n
    return Graph.from_masks(masks)


def with_edge(g: Graph, e: Edge) -> Graph:
    """Return ``g + e`` as a new graph; ``g`` is left untouched."""
    u, v = _check_edge(g, e)
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    masks = list(g.masks)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph.from_masks(masks)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def non_edges(g: Graph) -> list[Edge]:
    """Missing pairs ``(u, v)``, ``u < v``, in lexicographic order."""
    return complement(g).edges()


def regular_degree(g: Graph) -> int | None:
    """Common degree if ``g`` is regular, else ``None``.

    The order-0 graph has no degree to report and yields ``None``.
    """
    if g.n == 0:
        return None
    degs = g.degrees()
    d = degs[0]
    return d if all(x == d for x in degs) else None


def all_pairs(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))
