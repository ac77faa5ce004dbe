"""Maximum matching in general graphs and the structure built on it.

The core is Edmonds' blossom algorithm working directly on neighbour
bitmasks. Vertices are scanned in ascending order and neighbours in
ascending order, so results are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Edge, Graph, GraphError, iter_bits

TUTTE_BERGE_MAX_ORDER = 20


@dataclass(frozen=True)
class Matching:
    n: int
    edges: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def is_valid_for(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if u in seen or v in seen or not g.has_edge(u, v):
                return False
            seen.update((u, v))
        return True


# -- blossom core ----------------------------------------------------------

def _augment_from(root: int, masks: Sequence[int], mate: list[int]) -> bool:
    """Grow an alternating tree from exposed ``root``; augment ``mate`` in place.

    Returns True iff an augmenting path was found (and applied).
    """
    n = len(masks)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = [root]
    head = 0

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while head < len(queue):
        v = queue[head]
        head += 1
        for to in iter_bits(masks[v]):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    w = to
                    while w != -1:
                        pw = parent[w]
                        nxt = mate[pw]
                        mate[w] = pw
                        mate[pw] = w
                        w = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def _greedy(masks: Sequence[int]) -> list[int]:
    mate = [-1] * len(masks)
    free = (1 << len(masks)) - 1
    for v, mv in enumerate(masks):
        if not free >> v & 1:
            continue
        cand = mv & free
        if cand:
            w = (cand & -cand).bit_length() - 1
            mate[v], mate[w] = w, v
            free &= ~((1 << v) | (1 << w))
    return mate


def greedy_matching_size(masks: Sequence[int]) -> int:
    """Size of the ascending-order greedy matching (a lower bound on nu)."""
    return sum(1 for x in _greedy(masks) if x != -1) // 2


def max_mate(masks: Sequence[int], mate: list[int] | None = None) -> list[int]:
    """Mate array of a maximum matching, extending ``mate`` if given.

    One pass over exposed vertices suffices: a vertex with no augmenting
    path never acquires one after later augmentations.
    """
    mate = _greedy(masks) if mate is None else list(mate)
    for v in range(len(masks)):
        if mate[v] == -1 and masks[v]:
            _augment_from(v, masks, mate)
    return mate


def nu_masks(masks: Sequence[int]) -> int:
    return sum(1 for x in max_mate(masks) if x != -1) // 2


def _isolate(masks: Sequence[int], drop: int) -> list[int]:
    """Copy of ``masks`` with every vertex in bitmask ``drop`` made isolated."""
    keep = ~drop
    return [0 if drop >> v & 1 else m & keep for v, m in enumerate(masks)]


def _nu_without_vertex(masks: Sequence[int], mate: Sequence[int], v: int) -> int:
    """nu(G - v) given a maximum matching ``mate`` of G."""
    size = sum(1 for x in mate if x != -1) // 2
    w = mate[v]
    if w == -1:
        return size
    sub = _isolate(masks, 1 << v)
    m2 = list(mate)
    m2[v] = m2[w] = -1
    # any augmenting path in G - v must end at w
    return size if _augment_from(w, sub, m2) else size - 1


def nu_plus_edge(masks: Sequence[int], mate: Sequence[int], u: int, v: int) -> int:
    """nu(G + uv) given a maximum matching ``mate`` of G (uv a non-edge)."""
    size = sum(1 for x in mate if x != -1) // 2
    if mate[u] == -1 and mate[v] == -1:
        return size + 1
    plus = list(masks)
    plus[u] |= 1 << v
    plus[v] |= 1 << u
    # an augmenting path must use uv; an exposed endpoint of uv is a path end
    if mate[u] == -1:
        roots: Iterable[int] = (u,)
    elif mate[v] == -1:
        roots = (v,)
    else:
        roots = [x for x in range(len(masks)) if mate[x] == -1 and plus[x]]
    for r in roots:
        if _augment_from(r, plus, list(mate)):
            return size + 1
    return size


def _mate_to_matching(n: int, mate: Sequence[int]) -> Matching:
    return Matching(n, tuple((v, w) for v, w in enumerate(mate) if v < w))


# -- public API ---------------------------------------------------------------

def maximum_matching(g: Graph) -> Matching:
    mate = max_mate(g.masks)
    m = _mate_to_matching(g.n, mate)
    assert m.is_valid_for(g)
    return m


def matching_number(g: Graph) -> int:
    return nu_masks(g.masks)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def is_factor_critical(g: Graph) -> bool:
    """True iff ``g - v`` has a perfect matching for every vertex ``v``."""
    n = g.n
    if n % 2 == 0:
        return False
    masks = g.masks
    mate = max_mate(masks)
    target = (n - 1) // 2
    if sum(1 for x in mate if x != -1) // 2 != target:
        return False
    return all(_nu_without_vertex(masks, mate, v) == target for v in range(n))


@dataclass(frozen=True)
class GallaiEdmondsDecomposition:
    """Partition ``(D, A, C)``; ``decompose`` also fills ``S`` and ``components``."""

    n: int
    nu: int
    D: frozenset[int]
    A: frozenset[int]
    C: frozenset[int]
    S: frozenset[int] | None = None
    components: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def s(self) -> int | None:
        return None if self.S is None else len(self.S)

    @property
    def q(self) -> int:
        return len(self.components)

    @property
    def orders(self) -> list[int]:
        return [len(c) for c in self.components]


def gallai_edmonds(g: Graph) -> GallaiEdmondsDecomposition:
    """D = vertices missed by some maximum matching, A = N(D) \\ D, C = rest."""
    masks = g.masks
    mate = max_mate(masks)
    nu = sum(1 for x in mate if x != -1) // 2
    D = frozenset(v for v in range(g.n) if _nu_without_vertex(masks, mate, v) == nu)
    dmask = 0
    for v in D:
        dmask |= 1 << v
    nbr = 0
    for v in D:
        nbr |= masks[v]
    A = frozenset(iter_bits(nbr & ~dmask))
    C = frozenset(range(g.n)) - D - A
    return GallaiEdmondsDecomposition(g.n, nu, D, A, C)


@dataclass
class WitnessReport:
    """Outcome of checking a candidate set ``S`` against the structure identities."""

    n: int
    nu: int
    m: int
    S: tuple[int, ...]
    components: list[list[int]]
    non_factor_critical: list[list[int]]
    all_factor_critical: bool
    matching_identity: bool
    order_identity: bool
    component_count_residual: int

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def q(self) -> int:
        return len(self.components)

    @property
    def orders(self) -> list[int]:
        return [len(c) for c in self.components]

    @property
    def ok(self) -> bool:
        return self.all_factor_critical and self.matching_identity and self.order_identity

    def failed_clauses(self) -> list[str]:
        out = []
        if not self.all_factor_critical:
            out.append("factor-critical")
        if not self.matching_identity:
            out.append("matching-identity")
        if not self.order_identity:
            out.append("order-identity")
        return out


def verify_witness(g: Graph, S: Iterable[int], m: int | None = None) -> WitnessReport:
    """Check ``S`` clause by clause; failures are report content, not errors.

    Clauses: every component of ``G - S`` is factor-critical;
    ``nu = |S| + sum((d_i - 1) / 2)``; ``n = |S| + sum(d_i)``. With ``m``
    (default ``nu``) the residual ``q - (n - 2m + |S|)`` is also reported.
    """
    S = tuple(sorted(set(S)))
    for v in S:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    smask = 0
    for v in S:
        smask |= 1 << v
    comps = g.components(within=((1 << g.n) - 1) & ~smask)
    bad = [c for c in comps if not is_factor_critical(g.subgraph(c)[0])]
    nu = matching_number(g)
    if m is None:
        m = nu
    s = len(S)
    two_nu = 2 * s + sum(len(c) - 1 for c in comps)
    return WitnessReport(
        n=g.n,
        nu=nu,
        m=m,
        S=S,
        components=comps,
        non_factor_critical=bad,
        all_factor_critical=not bad,
        matching_identity=two_nu == 2 * nu,
        order_identity=s + sum(len(c) for c in comps) == g.n,
        component_count_residual=len(comps) - (g.n - 2 * m + s),
    )


def _split(g: Graph, vertices: list[int]) -> set[int]:
    """Witness set for the subgraph induced by ``vertices`` (global labels)."""
    h, labels = g.subgraph(vertices)
    ge = gallai_edmonds(h)
    S = {labels[a] for a in ge.A}
    amask = 0
    for a in ge.A:
        amask |= 1 << a
    for comp in h.components(within=((1 << h.n) - 1) & ~amask):
        if len(comp) % 2 == 1 and is_factor_critical(h.subgraph(comp)[0]):
            continue
        # comp lies in C and has a perfect matching: peel its lowest vertex
        glob = [labels[x] for x in comp]
        S.add(glob[0])
        S |= _split(g, glob[1:])
    return S


def factor_critical_witness(g: Graph) -> frozenset[int]:
    """A set S with every component of G - S factor-critical and
    ``nu(G) = |S| + sum((d_i - 1) / 2)``.

    Requires that ``g`` has no perfect matching.
    """
    if has_perfect_matching(g):
        raise GraphError("graph has a perfect matching; no witness is defined")
    S = frozenset(_split(g, list(range(g.n))))
    report = verify_witness(g, S)
    if not report.ok:
        raise RuntimeError(f"witness construction failed clauses {report.failed_clauses()}")
    return S


def decompose(g: Graph) -> GallaiEdmondsDecomposition:
    """Gallai-Edmonds partition plus a witness S when g lacks a perfect matching."""
    ge = gallai_edmonds(g)
    if g.n % 2 == 0 and 2 * ge.nu == g.n:
        return ge
    S = factor_critical_witness(g)
    smask = 0
    for v in S:
        smask |= 1 << v
    comps = tuple(tuple(c) for c in g.components(within=((1 << g.n) - 1) & ~smask))
    return GallaiEdmondsDecomposition(ge.n, ge.nu, ge.D, ge.A, ge.C, S, comps)


def tutte_berge_oracle(g: Graph) -> tuple[int, frozenset[int]]:
    """Deficiency ``max_U (odd(G - U) - |U|)`` by sweeping every vertex subset.

    Independent of the blossom code; returns the first maximiser in
    increasing bitmask order.
    """
    n = g.n
    if n > TUTTE_BERGE_MAX_ORDER:
        raise GraphError(f"subset sweep capped at order {TUTTE_BERGE_MAX_ORDER}, got {n}")
    full = (1 << n) - 1
    best, best_u = -1, 0
    for u in range(1 << n):
        odd = sum(1 for c in g.components(within=full & ~u) if len(c) % 2)
        val = odd - u.bit_count()
        if val > best:
            best, best_u = val, u
    return best, frozenset(iter_bits(best_u))
