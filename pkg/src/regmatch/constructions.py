"""Concrete extremal graphs for the rsat/rex formulas."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .formulas import rex_degree, rsat_matching
from .graph import Graph, GraphError, circulant_graph, complete_graph, disjoint_union, empty_graph
from .matching import is_factor_critical


@dataclass(frozen=True)
class HamiltonDecomposition:
    order: int
    cycles: tuple[tuple[int, ...], ...]

    def cycle_edges(self, j: int) -> set[tuple[int, int]]:
        cyc = self.cycles[j]
        k = len(cyc)
        return {tuple(sorted((cyc[i], cyc[(i + 1) % k]))) for i in range(k)}

    def union(self, count: int) -> Graph:
        """Graph formed by the first ``count`` cycles."""
        edges: set[tuple[int, int]] = set()
        for j in range(count):
            edges |= self.cycle_edges(j)
        return Graph(self.order, edges)


def walecki_hamilton_decomposition(k: int) -> HamiltonDecomposition:
    """Split ``K_{2k+1}`` into ``k`` edge-disjoint Hamilton cycles.

    Vertex ``2k`` is the hub; the rest form Z_{2k}. The base zigzag
    ``0, 1, -1, 2, -2, ..., k`` is rotated by ``j`` for cycle ``j``.
    """
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    mod = 2 * k
    zigzag = [0]
    for i in range(1, k + 1):
        zigzag.append(i)
        if i < k:
            zigzag.append(-i % mod)
    assert len(zigzag) == mod
    cycles = tuple((mod,) + tuple((x + j) % mod for x in zigzag) for j in range(k))
    return HamiltonDecomposition(mod + 1, cycles)


def rsat_extremal(n: int, m: int) -> Graph:
    """``(n - 2m)`` disjoint cliques of order ``2m/(n-2m) + 1``."""
    ans = rsat_matching(n, m)
    if not ans.exists:
        raise ValueError(f"no regular saturated graph for n={n}, m={m}: {ans.reason.value}")
    return disjoint_union([complete_graph(ans.degree + 1)] * (n - 2 * m))


def odd_partition(n: int, m: int) -> list[int]:
    """``n - 2m - 1`` parts of size ``r + 1`` followed by the remainder."""
    r = rex_degree(n, m)
    t = n - 2 * m
    rest = n - (t - 1) * (r + 1)
    assert rest % 2 == 1 and rest >= r + 1
    return [r + 1] * (t - 1) + [rest]


def _check_partition(n: int, m: int, r: int, parts: Sequence[int]) -> None:
    t = n - 2 * m
    if len(parts) != t:
        raise ValueError(f"need {t} parts, got {len(parts)}")
    if sum(parts) != n:
        raise ValueError(f"parts sum to {sum(parts)}, not {n}")
    for p in parts:
        if p % 2 == 0:
            raise ValueError(f"part {p} is even")
        if p < r + 1:
            raise ValueError(f"part {p} smaller than r + 1 = {r + 1}")


def rex_extremal_cycles(n: int, m: int, partition: Sequence[int] | None = None) -> Graph:
    """Per odd part ``2k+1``, the union of the first ``r/2`` Walecki cycles of ``K_{2k+1}``."""
    r = rex_degree(n, m)
    parts = list(partition) if partition is not None else odd_partition(n, m)
    _check_partition(n, m, r, parts)
    if r == 0:
        return empty_graph(n)
    blocks = [walecki_hamilton_decomposition((p - 1) // 2).union(r // 2) for p in parts]
    return disjoint_union(blocks)


def factor_critical_regular(v: int, r: int) -> Graph:
    """Circulant ``C_v(1, ..., r/2)``: an r-regular factor-critical graph of odd order v."""
    if v % 2 == 0 or r % 2 or not 0 < r < v:
        raise ValueError(f"need odd v, even r, 0 < r < v; got v={v}, r={r}")
    g = circulant_graph(v, range(1, r // 2 + 1))
    if not all(d == r for d in g.degrees()) or not is_factor_critical(g):
        raise RuntimeError(f"circulant C_{v}(1..{r // 2}) failed its own postcondition")
    return g


def rex_extremal_clique_form(n: int, m: int) -> Graph:
    """An r-regular factor-critical graph plus ``n - 2m - 1`` copies of ``K_{r+1}``."""
    r = rex_degree(n, m)
    if r == 0:
        return empty_graph(n)
    t = n - 2 * m
    g1 = factor_critical_regular(n - (t - 1) * (r + 1), r)
    return disjoint_union([g1] + [complete_graph(r + 1)] * (t - 1))
