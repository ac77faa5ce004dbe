"""Exhaustive recomputation of rsat/rex by enumerating labelled regular graphs.

Small orders only (n <= 10). The enumeration is plain backtracking: each
vertex, in index order, picks its remaining neighbours among higher
indices. Search checks run on raw bitmask tuples; graphs are only wrapped
as :class:`Graph` when emitted or returned as witnesses.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .certify import first_unsaturated_pair, is_saturated_matching
from .graph import Graph, GraphError, iter_bits
from .matching import greedy_matching_size, max_mate, nu_masks, factor_critical_witness

MAX_ORDER = 10
_CHECK_EVERY = 512


def _raw_regular(n: int, r: int, first: Sequence[int] | None = None,
                 cap: int | None = None, stats: list[int] | None = None
                 ) -> Iterator[tuple[int, ...]]:
    """Neighbour-mask tuples of every labelled r-regular graph on n vertices.

    ``first`` pins vertex 0's neighbourhood (used to split the tree).
    With ``cap`` set, subtrees whose partial graph already holds a matching
    of size ``cap + 1`` are cut: edges are only ever added, so no completion
    can have matching number <= cap. Cuts are counted in ``stats[0]``.
    """
    need = [r] * n
    masks = [0] * n
    mate = [-1] * n
    matched = 0
    size = 0

    def feasible(i: int) -> bool:
        active = 0
        total = 0
        top = 0
        for j in range(i + 1, n):
            x = need[j]
            if x:
                active += 1
                total += x
                if x > top:
                    top = x
        return total % 2 == 0 and top <= active - 1 if active else total == 0

    def rematch(pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
        nonlocal matched, size
        undo = []
        for a, b in pairs:
            undo += [(a, mate[a]), (b, mate[b])]
            mate[a], mate[b] = b, a
            matched |= (1 << a) | (1 << b)
        size += 1
        return undo

    def grow(i: int, bits: int) -> list[tuple[int, int]] | None:
        """Enlarge the partial matching by one using vertex i's new edges."""
        free = bits & ~matched
        p = mate[i]
        if p == -1:
            if free:
                # highest free neighbour keeps low-index vertices available
                return rematch([(i, free.bit_length() - 1)])
            for j in iter_bits(bits):
                q = mate[j]
                spare = masks[q] & ~matched & ~(1 << i)
                if spare:
                    return rematch([(q, spare.bit_length() - 1), (i, j)])
            return None
        spare_p = masks[p] & ~matched
        for j in iter_bits(free):
            spare = spare_p & ~(1 << j)
            if spare:
                return rematch([(p, spare.bit_length() - 1), (i, j)])
        return None

    def first_choice_forced(i: int, cand: list[int]) -> int:
        """Number of candidates that ``grow`` could not use for vertex i."""
        p = mate[i]
        if p == -1:
            return sum(1 for j in cand
                       if matched >> j & 1 and not masks[mate[j]] & ~matched & ~(1 << i))
        spare_p = masks[p] & ~matched
        return sum(1 for j in cand if matched >> j & 1 or not spare_p & ~(1 << j))

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal matched, size
        while i < n and need[i] == 0:
            i += 1
        if i == n:
            yield tuple(masks)
            return
        k = need[i]
        cand = [j for j in range(i + 1, n) if need[j]]
        if len(cand) < k:
            return
        if cap is not None and size == cap and first_choice_forced(i, cand) < k:
            # fewer than k candidates fail to grow the matching, so every choice grows it
            if stats is not None:
                stats[0] += 1
            return
        choices = [tuple(first)] if (i == 0 and first is not None) else combinations(cand, k)
        for combo in choices:
            bits = 0
            for j in combo:
                need[j] -= 1
                masks[j] |= 1 << i
                bits |= 1 << j
            masks[i] |= bits
            need[i] = 0
            saved = matched, size
            undo = grow(i, bits) if cap is not None else None
            if cap is not None and size > cap:
                if stats is not None:
                    stats[0] += 1
            elif feasible(i):
                yield from rec(i + 1)
            if undo:
                for a, old in reversed(undo):
                    mate[a] = old
            matched, size = saved
            need[i] = k
            masks[i] &= ~bits
            for j in combo:
                need[j] += 1
                masks[j] &= ~(1 << i)

    if r == 0:
        yield tuple(masks)
        return
    yield from rec(0)


def _check_args(n: int, r: int) -> None:
    if n > MAX_ORDER:
        raise GraphError(f"exhaustive enumeration capped at n = {MAX_ORDER}, got {n}")
    if not 0 <= r < n:
        raise GraphError(f"degree {r} outside 0..{n - 1}")


def enumerate_regular(n: int, r: int) -> Iterator[Graph]:
    """Every labelled r-regular graph on n vertices, exactly once.

    Yields nothing when ``n * r`` is odd.
    """
    _check_args(n, r)
    if (n * r) % 2:
        return
    for masks in _raw_regular(n, r):
        yield Graph.from_masks(masks)


def count_regular(n: int, r: int) -> int:
    _check_args(n, r)
    if (n * r) % 2:
        return 0
    return sum(1 for _ in _raw_regular(n, r))


# -- per-graph predicates on raw masks ------------------------------------------

def _is_free(masks: tuple[int, ...], m: int) -> bool:
    if greedy_matching_size(masks) > m:
        return False
    return nu_masks(masks) <= m


def _is_saturated(masks: tuple[int, ...], m: int) -> bool:
    if greedy_matching_size(masks) > m:
        return False
    mate = max_mate(masks)
    if sum(1 for x in mate if x != -1) // 2 > m:
        return False
    return first_unsaturated_pair(masks, mate, m) is None


_PREDICATES: dict[str, Callable[[tuple[int, ...], int], bool]] = {
    "rsat": _is_saturated,
    "rex": _is_free,
}


@dataclass
class DegreeScan:
    examined: int = 0
    hits: int = 0
    pruned: int = 0
    complete: bool = True


def _scan_branch(args: tuple) -> tuple[int, int, int, list[tuple[int, ...]], bool]:
    """Scan one subtree. Returns (examined, hits, pruned, kept hit masks, complete)."""
    target, n, r, m, first, stop_at_first, keep, deadline, prune = args
    pred = _PREDICATES[target]
    examined = hits = 0
    stats = [0]
    kept: list[tuple[int, ...]] = []
    for masks in _raw_regular(n, r, first, m if prune else None, stats):
        examined += 1
        if pred(masks, m):
            hits += 1
            if len(kept) < keep:
                kept.append(masks)
            if stop_at_first:
                return examined, hits, stats[0], kept, True
        if deadline is not None and examined % _CHECK_EVERY == 0 and time.monotonic() > deadline:
            return examined, hits, stats[0], kept, False
    return examined, hits, stats[0], kept, True


def _workers() -> int:
    raw = os.environ.get("REGMATCH_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"REGMATCH_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"REGMATCH_THREADS must be a positive integer, got {raw!r}")
    return value


def scan_degree(target: str, n: int, r: int, m: int, *, stop_at_first: bool = True,
                keep: int = 1, deadline: float | None = None,
                workers: int | None = None, prune: bool = True,
                canonical_prefix: bool = False) -> tuple[DegreeScan, list[tuple[int, ...]]]:
    """Apply the rsat/rex predicate to every labelled r-regular graph on n vertices.

    Both predicates require matching number <= m, so with ``prune`` the
    enumeration skips subtrees that already contain an (m+1)-matching;
    ``examined`` then counts only the leaves actually tested.

    ``canonical_prefix`` fixes vertex 0's neighbours to ``1..r``. Every
    r-regular graph has a relabelling of that form, so this is valid for
    existence questions only, never for sweeps that must see every graph.
    With several workers the tree is split on vertex 0's neighbourhood;
    results are merged in branch order so output does not depend on timing.
    """
    _check_args(n, r)
    scan = DegreeScan()
    if (n * r) % 2:
        return scan, []
    workers = _workers() if workers is None else workers
    if r == 0 or workers <= 1 or canonical_prefix:
        first = tuple(range(1, r + 1)) if canonical_prefix and r else None
        jobs = [(target, n, r, m, first, stop_at_first, keep, deadline, prune)]
        workers = 1
        results = map(_scan_branch, jobs)
    else:
        jobs = [(target, n, r, m, first, stop_at_first, keep, deadline, prune)
                for first in combinations(range(1, n), r)]
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_scan_branch, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
    kept: list[tuple[int, ...]] = []
    try:
        for examined, hits, pruned, got, complete in results:
            scan.examined += examined
            scan.hits += hits
            scan.pruned += pruned
            kept.extend(got[: max(0, keep - len(kept))])
            scan.complete &= complete
            if stop_at_first and hits:
                break
    finally:
        if r != 0 and workers > 1:
            pool.shutdown(cancel_futures=True)
    return scan, kept


@dataclass
class SearchOutcome:
    target: str
    n: int
    m: int
    edges: int | None
    degree: int | None
    witness: Graph | None
    examined: int
    pruned: int = 0
    per_degree: dict[int, DegreeScan] = field(default_factory=dict)
    elapsed: float = 0.0
    exhaustive: bool = True

    @property
    def found(self) -> bool:
        return self.edges is not None

    @property
    def status(self) -> str:
        if self.found:
            return "found"
        return "not-exist" if self.exhaustive else "not-found-within-budget"

    def as_dict(self) -> dict:
        from .formats import to_graph6

        return {
            "target": self.target,
            "n": self.n,
            "m": self.m,
            "status": self.status,
            "edges": self.edges,
            "degree": self.degree,
            "exhaustive": self.exhaustive,
            "examined": self.examined,
            "pruned": self.pruned,
            "elapsed": round(self.elapsed, 6),
            "per_degree": {str(r): {"examined": s.examined, "hits": s.hits,
                                    "pruned": s.pruned, "complete": s.complete}
                           for r, s in sorted(self.per_degree.items())},
            "witness_graph6": None if self.witness is None else to_graph6(self.witness).decode(),
        }


def _search(target: str, n: int, m: int, degrees: list[int], budget: float | None,
            workers: int | None, prune: bool, canonical_prefix: bool) -> SearchOutcome:
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    out = SearchOutcome(target, n, m, None, None, None, 0)
    for r in degrees:
        scan, kept = scan_degree(target, n, r, m, deadline=deadline, workers=workers,
                                 prune=prune, canonical_prefix=canonical_prefix)
        out.per_degree[r] = scan
        out.examined += scan.examined
        out.pruned += scan.pruned
        if kept:
            out.edges, out.degree = n * r // 2, r
            out.witness = Graph.from_masks(kept[0])
            break
        if not scan.complete:
            out.exhaustive = False
            break
    out.elapsed = time.monotonic() - start
    return out


def oracle_rsat(n: int, m: int, budget: float | None = None, workers: int | None = None,
                prune: bool = True, canonical_prefix: bool = False) -> SearchOutcome:
    """Minimum size of a regular (m+1)K2-saturated graph on n vertices.

    Degrees are scanned upward, so the first degree with a saturated graph
    gives the minimum. Saturation is taken literally: a complete graph with
    no (m+1)-matching counts, since it has no non-edges.
    """
    if n < 2:
        raise GraphError(f"oracle needs n >= 2, got {n}")
    if n > MAX_ORDER:
        raise GraphError(f"oracle capped at n = {MAX_ORDER}, got {n}")
    degrees = [r for r in range(n) if (n * r) % 2 == 0]
    return _search("rsat", n, m, degrees, budget, workers, prune, canonical_prefix)


def oracle_rex(n: int, m: int, budget: float | None = None, workers: int | None = None,
               prune: bool = True, canonical_prefix: bool = False) -> SearchOutcome:
    """Maximum size of a regular graph on n vertices with matching number <= m."""
    if n > MAX_ORDER:
        raise GraphError(f"oracle capped at n = {MAX_ORDER}, got {n}")
    if m < 1 or n < 2 * m + 2:
        raise GraphError(f"rex oracle needs m >= 1 and n >= 2m + 2, got n={n}, m={m}")
    degrees = [r for r in range(n - 1, -1, -1) if (n * r) % 2 == 0]
    return _search("rex", n, m, degrees, budget, workers, prune, canonical_prefix)


def is_equal_odd_clique_union(g: Graph, count: int) -> bool:
    comps = g.components()
    if len(comps) != count:
        return False
    sizes = {len(c) for c in comps}
    if len(sizes) != 1:
        return False
    size = sizes.pop()
    if size < 3 or size % 2 == 0:
        return False
    return g.num_edges == count * size * (size - 1) // 2


@dataclass
class StructureReport:
    n: int
    m: int
    rsat: SearchOutcome
    rex: SearchOutcome | None
    rsat_minimizers: int = 0
    rsat_counterexamples: list[Graph] = field(default_factory=list)
    rex_maximizers: int = 0
    rex_degree_even: bool | None = None

    @property
    def holds(self) -> bool:
        return not self.rsat_counterexamples and self.rex_degree_even is not False


def check_structure_claims(n: int, m: int, budget: float | None = None) -> StructureReport:
    """Sweep the optimal degree fully and test the extremal-structure claims.

    (a) every minimum regular saturated graph is ``n - 2m`` disjoint equal
    odd cliques, with an empty witness set; (b) every maximum regular free
    graph has even degree.
    """
    rsat = oracle_rsat(n, m, budget)
    rex = oracle_rex(n, m, budget) if n >= 2 * m + 2 else None
    report = StructureReport(n, m, rsat, rex)
    if rsat.found:
        scan, kept = scan_degree("rsat", n, rsat.degree, m, stop_at_first=False, keep=10 ** 9)
        report.rsat_minimizers = len(kept)
        for masks in kept:
            g = Graph.from_masks(masks)
            ok = is_equal_odd_clique_union(g, n - 2 * m) and is_saturated_matching(g, m).saturated
            if ok and not factor_critical_witness(g) == frozenset():
                ok = False
            if not ok:
                report.rsat_counterexamples.append(g)
    if rex is not None:
        scan, _ = scan_degree("rex", n, rex.degree, m, stop_at_first=False, keep=0)
        report.rex_maximizers = scan.hits
        report.rex_degree_even = rex.degree % 2 == 0
    return report
