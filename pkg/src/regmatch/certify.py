"""Verdicts for freeness, saturation and extremality with respect to ``(m+1)K_2``."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .formulas import rex_matching, rsat_matching
from .graph import Edge, Graph, GraphError, iter_bits, regular_degree
from .matching import matching_number, max_mate, nu_plus_edge


@dataclass(frozen=True)
class SaturationResult:
    saturated: bool
    nu: int
    not_free: bool = False
    witness: Edge | None = None
    witness_nu: int | None = None

    def __bool__(self) -> bool:
        return self.saturated


def is_matching_free(g: Graph, m: int) -> bool:
    return matching_number(g) <= m


def first_unsaturated_pair(masks, mate, m: int) -> tuple[Edge, int] | None:
    """Lexicographically first non-edge whose addition keeps nu <= m."""
    n = len(masks)
    full = (1 << n) - 1
    for u in range(n):
        missing = full & ~masks[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(missing):
            nu = nu_plus_edge(masks, mate, u, v)
            if nu <= m:
                return (u, v), nu
    return None


def is_saturated_matching(g: Graph, m: int) -> SaturationResult:
    """(m+1)K2-saturation: nu(G) <= m and every non-edge raises nu to m + 1.

    A complete graph with ``nu <= m`` has no non-edges and counts as saturated.
    """
    mate = max_mate(g.masks)
    nu = sum(1 for x in mate if x != -1) // 2
    if nu > m:
        return SaturationResult(False, nu, not_free=True)
    hit = first_unsaturated_pair(g.masks, mate, m)
    if hit is not None:
        return SaturationResult(False, nu, witness=hit[0], witness_nu=hit[1])
    return SaturationResult(True, nu)


@dataclass
class Certificate:
    kind: str
    n: int
    m: int
    num_edges: int
    degree: int | None
    matching_number: int
    checks: dict[str, bool] = field(default_factory=dict)
    expected_edges: int | None = None
    detail: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        return d

    def to_text(self) -> str:
        lines = [f"kind={self.kind}", f"verdict={self.verdict}", f"n={self.n}", f"m={self.m}",
                 f"edges={self.num_edges}",
                 f"degree={'none' if self.degree is None else self.degree}",
                 f"nu={self.matching_number}"]
        if self.expected_edges is not None:
            lines.append(f"expected_edges={self.expected_edges}")
        for name, ok in self.checks.items():
            lines.append(f"check.{name}={'pass' if ok else 'fail'}")
        for key, val in self.detail.items():
            lines.append(f"{key}={val}")
        return "\n".join(lines)


def _base(kind: str, g: Graph, m: int, nu: int) -> Certificate:
    return Certificate(kind, g.n, m, g.num_edges, regular_degree(g), nu)


def _attach_saturation(cert: Certificate, sat: SaturationResult) -> None:
    cert.checks["is_saturated"] = sat.saturated
    if sat.witness is not None:
        cert.detail["witness_non_edge"] = list(sat.witness)
        cert.detail["witness_nu"] = sat.witness_nu


def certify_free(g: Graph, m: int) -> Certificate:
    nu = matching_number(g)
    cert = _base("free", g, m, nu)
    cert.checks["is_free"] = nu <= m
    return cert


def certify_saturated(g: Graph, m: int) -> Certificate:
    sat = is_saturated_matching(g, m)
    cert = _base("saturated", g, m, sat.nu)
    cert.checks["is_free"] = sat.nu <= m
    _attach_saturation(cert, sat)
    return cert


def certify_rsat_extremal(g: Graph, n: int, m: int) -> Certificate:
    if g.n != n:
        raise GraphError(f"graph has order {g.n}, expected {n}")
    sat = is_saturated_matching(g, m)
    cert = _base("rsat-extremal", g, m, sat.nu)
    ans = rsat_matching(n, m)
    cert.checks["is_regular"] = cert.degree is not None
    cert.checks["is_free"] = sat.nu <= m
    _attach_saturation(cert, sat)
    if ans.exists:
        cert.expected_edges = ans.edges
        cert.checks["size_matches_formula"] = g.num_edges == ans.edges
    else:
        cert.checks["size_matches_formula"] = False
        cert.detail["formula"] = f"not-exist:{ans.reason.value}"
    return cert


def certify_rex_extremal(g: Graph, n: int, m: int) -> Certificate:
    if g.n != n:
        raise GraphError(f"graph has order {g.n}, expected {n}")
    ans = rex_matching(n, m)
    nu = matching_number(g)
    cert = _base("rex-extremal", g, m, nu)
    cert.expected_edges = ans.edges
    cert.checks["is_regular"] = cert.degree is not None
    cert.checks["is_free"] = nu <= m
    cert.checks["size_matches_formula"] = g.num_edges == ans.edges
    return cert
