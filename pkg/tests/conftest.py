from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import pytest

from regmatch.graph import Graph


def brute_matching_number(g: Graph) -> int:
    """Exhaustive matching number: branch on the lowest vertex with an edge."""
    edges = g.edges()

    @lru_cache(maxsize=None)
    def best(alive: int) -> int:
        for u, v in edges:
            if alive >> u & 1 and alive >> v & 1:
                break
        else:
            return 0
        # u is the lowest live endpoint of a live edge: either u is unmatched or matched to w
        without = best(alive & ~(1 << u))
        with_ = 0
        for a, b in edges:
            if u in (a, b):
                w = b if a == u else a
                if alive >> w & 1:
                    with_ = max(with_, 1 + best(alive & ~(1 << u) & ~(1 << w)))
        return max(without, with_)

    return best((1 << g.n) - 1)


def brute_regular_count(n: int, r: int) -> int:
    """Count labelled r-regular graphs by filtering all 2^C(n,2) edge subsets."""
    pairs = list(combinations(range(n), 2))
    count = 0
    for bits in range(1 << len(pairs)):
        deg = [0] * n
        for k, (u, v) in enumerate(pairs):
            if bits >> k & 1:
                deg[u] += 1
                deg[v] += 1
        if all(d == r for d in deg):
            count += 1
    return count


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
