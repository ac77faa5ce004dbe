"""Closed forms for the regular saturation and regular Turan numbers of matchings.

``F = (m+1)K_2``: a graph is F-free iff its matching number is at most m.
All arithmetic is exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class NotExistReason(str, Enum):
    ORDER_TOO_SMALL = "order-too-small"
    ORDER_TOO_LARGE = "order-too-large"
    DIVISIBILITY_FAILS = "divisibility-fails"


@dataclass(frozen=True)
class ExtremalAnswer:
    n: int
    m: int
    edges: int | None = None
    degree: int | None = None
    reason: NotExistReason | None = None

    def __post_init__(self) -> None:
        if self.reason is None:
            assert self.edges is not None and self.degree is not None
            assert (self.n * self.degree) % 2 == 0
            assert self.edges == self.n * self.degree // 2
        else:
            assert self.edges is None and self.degree is None

    @property
    def exists(self) -> bool:
        return self.reason is None

    def as_dict(self) -> dict:
        if self.exists:
            return {"n": self.n, "m": self.m, "exists": True,
                    "edges": self.edges, "degree": self.degree}
        return {"n": self.n, "m": self.m, "exists": False, "reason": self.reason.value}


def _check_rex_hypothesis(n: int, m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < 2 * m + 2:
        raise ValueError(f"rex needs n >= 2m + 2, got n={n}, m={m}")


def rsat_matching(n: int, m: int) -> ExtremalAnswer:
    """Minimum size of a regular n-vertex (m+1)K2-saturated graph, or why none exists."""
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    if n < 2 * m + 2:
        return ExtremalAnswer(n, m, reason=NotExistReason.ORDER_TOO_SMALL)
    if n > 3 * m:
        return ExtremalAnswer(n, m, reason=NotExistReason.ORDER_TOO_LARGE)
    t = n - 2 * m
    if m % t:
        return ExtremalAnswer(n, m, reason=NotExistReason.DIVISIBILITY_FAILS)
    degree = 2 * m // t
    assert (n * m) % t == 0
    return ExtremalAnswer(n, m, edges=n * m // t, degree=degree)


def rex_degree(n: int, m: int) -> int:
    """The even member of ``{floor(n/(n-2m)) - 1, floor(n/(n-2m)) - 2}``."""
    _check_rex_hypothesis(n, m)
    f = n // (n - 2 * m)
    r = f - 1 if f % 2 else f - 2
    assert r >= 0 and r % 2 == 0
    return r


def rex_matching(n: int, m: int) -> ExtremalAnswer:
    """Maximum size of a regular n-vertex graph with matching number <= m."""
    r = rex_degree(n, m)
    return ExtremalAnswer(n, m, edges=n * r // 2, degree=r)
