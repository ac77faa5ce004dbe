"""Acceptance criteria, one test per criterion.

Each test appends a ``[criterion N] PASS|FAIL ...`` line that the terminal
summary prints. The n = 10 oracle row is an extended, non-gating check:
set ``REGMATCH_EXTENDED=1`` to run it.
"""
import os
import random
import time
from functools import lru_cache

import pytest

from regmatch.certify import certify_rex_extremal, certify_rsat_extremal
from regmatch.constructions import (
    rex_extremal_clique_form,
    rex_extremal_cycles,
    rsat_extremal,
    walecki_hamilton_decomposition,
)
from regmatch.formats import parse_graph6, to_graph6
from regmatch.formulas import rex_matching, rsat_matching
from regmatch.graph import Graph, petersen_graph, regular_degree
from regmatch.matching import (
    factor_critical_witness,
    has_perfect_matching,
    matching_number,
    tutte_berge_oracle,
    verify_witness,
)
from regmatch.oracle import check_structure_claims, count_regular, oracle_rex, oracle_rsat

from conftest import brute_regular_count, random_graph

GRID = [(n, m) for m in range(1, 5) for n in range(2 * m + 2, 10)]


@pytest.fixture
def record(request):
    def emit(number, ok, detail):
        line = f"[criterion {number}] {'PASS' if ok else 'FAIL'} {detail}"
        request.config.acceptance_lines.append(line)
        print(line)
        assert ok, line
    return emit


@lru_cache(maxsize=None)
def oracle_grid(rows):
    start = time.monotonic()
    results = {(n, m): (oracle_rsat(n, m), oracle_rex(n, m)) for n, m in rows}
    return results, time.monotonic() - start


@lru_cache(maxsize=None)
def structure_grid():
    return {(n, m): check_structure_claims(n, m) for n, m in GRID}


@lru_cache(maxsize=None)
def constructed(limit=60):
    out = []
    for n in range(1, limit + 1):
        for m in range(1, n):
            if rsat_matching(n, m).exists:
                out.append(("rsat", n, m, rsat_extremal(n, m)))
            if n >= 2 * m + 2:
                out.append(("rex-cycles", n, m, rex_extremal_cycles(n, m)))
                out.append(("rex-cliques", n, m, rex_extremal_clique_form(n, m)))
    return out


def cross_validation_graphs():
    rng = random.Random(7)
    return [random_graph(rng, rng.randint(1, 12), 0.1 + 0.8 * (k % 9) / 8) for k in range(240)]


def formula_answer(n, m):
    a, b = rsat_matching(n, m), rex_matching(n, m)
    return (a.edges if a.exists else None), b.edges


def test_criterion_1_rsat_formula(record):
    want = {(6, 2): 6, (9, 3): 9, (10, 4): 20, (12, 4): 12}
    bad = [k for k, v in want.items() if rsat_matching(*k).edges != v or not rsat_matching(*k).exists]
    missing = [(7, 2), (8, 2), (8, 3), (11, 4)] + [(n, 1) for n in range(1, 201)]
    bad += [k for k in missing if rsat_matching(*k).exists]
    record(1, not bad, f"rsat closed form: {len(want)} values, {len(missing)} not-exist; mismatches={bad}")


def test_criterion_2_rex_formula(record):
    want = {(6, 2): 6, (7, 2): 0, (8, 3): 8, (10, 4): 20, (11, 4): 11, (12, 5): 24, (4, 1): 0}
    bad = [k for k, v in want.items() if rex_matching(*k).edges != v]
    record(2, not bad, f"rex closed form: {len(want)} values; mismatches={bad}")


def test_criterion_3_oracle_agreement(record):
    results, elapsed = oracle_grid(tuple(GRID))
    bad = []
    for (n, m), (rs, rx) in results.items():
        if not (rs.exhaustive and rx.exhaustive):
            bad.append((n, m, "truncated"))
        if (rs.edges, rx.edges) != formula_answer(n, m):
            bad.append((n, m, rs.edges, rx.edges))
    ok = not bad and elapsed < 300
    record(3, ok, f"oracle vs formulas on {len(results)} pairs (n<=9) in {elapsed:.1f}s "
                  f"(limit 300s); mismatches={bad}")


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("REGMATCH_EXTENDED") != "1",
                    reason="n = 10 row is non-gating; set REGMATCH_EXTENDED=1")
def test_criterion_3_extended_n10(record):
    rows = tuple((10, m) for m in range(1, 5))
    results, elapsed = oracle_grid(rows)
    bad = [(n, m) for (n, m), (rs, rx) in results.items()
           if (rs.edges, rx.edges) != formula_answer(n, m) or not (rs.exhaustive and rx.exhaustive)]
    record("3-ext", not bad and elapsed < 600,
           f"n=10 row: {len(rows)} pairs in {elapsed:.1f}s (budget 600s); mismatches={bad}")


def test_criterion_4_structure(record):
    reports = structure_grid()
    minimizers = sum(r.rsat_minimizers for r in reports.values())
    maximizers = sum(r.rex_maximizers for r in reports.values())
    bad = [k for k, r in reports.items() if not r.holds]
    record(4, not bad, f"structure on {len(reports)} pairs: {minimizers} rsat minimizers all equal "
                       f"odd cliques, {maximizers} rex maximizers even degree; counterexamples={bad}")


def test_criterion_5_constructions(record):
    start = time.monotonic()
    bad = []
    graphs = constructed()
    for kind, n, m, g in graphs:
        if kind == "rsat":
            cert, ans = certify_rsat_extremal(g, n, m), rsat_matching(n, m)
            nu = m
        else:
            cert, ans = certify_rex_extremal(g, n, m), rex_matching(n, m)
            nu = m if ans.degree else 0
        if not (cert.passed and cert.degree == ans.degree and g.num_edges == ans.edges
                and cert.matching_number == nu):
            bad.append((kind, n, m))
    elapsed = time.monotonic() - start
    record(5, not bad and elapsed < 60,
           f"{len(graphs)} constructions (n<=60) certified in {elapsed:.1f}s (limit 60s); failures={bad}")


def test_criterion_6_walecki(record):
    bad = []
    for k in range(1, 21):
        n = 2 * k + 1
        dec = walecki_hamilton_decomposition(k)
        sets = [dec.cycle_edges(j) for j in range(k)]
        union = set().union(*sets)
        spanning = all(sorted(c) == list(range(n)) for c in dec.cycles)
        disjoint = sum(len(s) for s in sets) == len(union)
        if not (len(sets) == k and spanning and disjoint and len(union) == k * n):
            bad.append(k)
    record(6, not bad, f"Walecki k=1..20 edge-disjoint Hamilton cycles covering K_(2k+1); failures={bad}")


def test_criterion_7_cross_validation(record):
    graphs = cross_validation_graphs()
    bad = [i for i, g in enumerate(graphs)
           if matching_number(g) != (g.n - tutte_berge_oracle(g)[0]) // 2]
    petersen = matching_number(petersen_graph())
    record(7, not bad and petersen == 5,
           f"blossom vs Tutte-Berge on {len(graphs)} random graphs (n<=12, p 0.1-0.9); "
           f"nu(Petersen)={petersen}; mismatches={bad}")


def test_criterion_8_witness(record):
    pool: list[Graph] = []
    results, _ = oracle_grid(tuple(GRID))
    for rs, rx in results.values():
        pool += [o.witness for o in (rs, rx) if o.witness is not None]
    pool += [g for _, _, _, g in constructed()]
    pool += cross_validation_graphs()
    pool = [g for g in pool if g.n and not has_perfect_matching(g)]
    encountered = len(pool)
    rng = random.Random(11)
    extra = 0
    while extra < 100:
        g = random_graph(rng, rng.randint(1, 12), rng.uniform(0.05, 0.6))
        if not has_perfect_matching(g):
            pool.append(g)
            extra += 1
    bad = []
    for g in pool:
        rep = verify_witness(g, factor_critical_witness(g))
        if not rep.ok:
            bad.append((to_graph6(g).decode(), rep.failed_clauses()))
    record(8, not bad, f"witness clauses on {encountered} encountered + {extra} random graphs "
                       f"without a perfect matching; failures={bad[:3]}")


def test_criterion_9_formats(record):
    rng = random.Random(9)
    bad_rt = 0
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 20), rng.random())
        if parse_graph6(to_graph6(g)) != g:
            bad_rt += 1
    built = constructed()
    bad_rt += sum(parse_graph6(to_graph6(g)) != g for _, _, _, g in built)
    bad_counts = [(n, r) for n in range(1, 7) for r in range(n)
                  if count_regular(n, r) != brute_regular_count(n, r)]
    pinned = {(4, 1): 3, (5, 2): 12, (6, 3): 70}
    bad_counts += [k for k, v in pinned.items() if count_regular(*k) != v]
    ok = bad_rt == 0 and not bad_counts
    record(9, ok, f"graph6 round trip on 1000 random + {len(built)} constructed graphs "
                  f"({bad_rt} failures); enumeration counts n<=6 vs brute force; mismatches={bad_counts}")


def test_constructed_degrees_are_regular():
    # guard for criterion 5's inputs: every construction is regular
    assert all(regular_degree(g) is not None for _, _, _, g in constructed())
