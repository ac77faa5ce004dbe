import pytest
from hypothesis import given, settings

from regmatch.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    non_edges,
    path_graph,
    petersen_graph,
    star_graph,
    with_edge,
)
from regmatch.matching import (
    decompose,
    factor_critical_witness,
    gallai_edmonds,
    has_perfect_matching,
    is_factor_critical,
    matching_number,
    maximum_matching,
    tutte_berge_oracle,
    verify_witness,
)

from conftest import brute_matching_number, random_graph
from test_graph import graphs

K3 = complete_graph(3)
TWO_K3 = disjoint_union([K3, K3])


def brute_d_set(g: Graph) -> set[int]:
    nu = brute_matching_number(g)
    return {v for v in range(g.n) if brute_matching_number(g.remove_vertices([v])[0]) == nu}


def test_brute_oracle_sanity():
    assert brute_matching_number(petersen_graph()) == 5
    assert brute_matching_number(cycle_graph(5)) == 2


@pytest.mark.parametrize("g,nu", [
    (cycle_graph(5), 2),
    (disjoint_union([complete_graph(5)] * 2), 4),
    (petersen_graph(), 5),
    (empty_graph(7), 0),
    (disjoint_union([K3] * 3), 3),
    (disjoint_union([cycle_graph(3), cycle_graph(5)]), 3),
])
def test_matching_number(g, nu):
    assert matching_number(g) == nu
    m = maximum_matching(g)
    assert m.size == nu and m.is_valid_for(g)
    assert list(m.edges) == sorted(m.edges)


def test_petersen_against_tutte_berge():
    deficiency, _ = tutte_berge_oracle(petersen_graph())
    assert deficiency == 0 and (10 - deficiency) // 2 == 5


def test_blossom_needed():
    # triangle with pendant paths forces a blossom contraction
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5)])
    assert matching_number(g) == brute_matching_number(g) == 3


def test_perfect_matching():
    assert has_perfect_matching(complete_graph(4))
    assert has_perfect_matching(cycle_graph(6))
    assert not has_perfect_matching(complete_graph(5))
    assert not has_perfect_matching(star_graph(3))


def test_factor_critical():
    assert is_factor_critical(cycle_graph(5))
    assert is_factor_critical(Graph(1))
    assert not is_factor_critical(complete_graph(4))
    assert not is_factor_critical(path_graph(3))
    assert not is_factor_critical(TWO_K3)
    assert not is_factor_critical(disjoint_union([K3, Graph(2)]))
    assert is_factor_critical(complete_graph(7))


def test_factor_critical_matches_brute(rng):
    for _ in range(150):
        n = rng.choice([1, 3, 5, 7, 9])
        g = random_graph(rng, n, rng.uniform(0.2, 0.9))
        target = (n - 1) // 2
        expected = all(brute_matching_number(g.remove_vertices([v])[0]) == target for v in range(n))
        assert is_factor_critical(g) == expected


@pytest.mark.parametrize("g,D,A,C", [
    (TWO_K3, set(range(6)), set(), set()),
    (star_graph(3), {1, 2, 3}, {0}, set()),
    (complete_graph(4), set(), set(), {0, 1, 2, 3}),
])
def test_gallai_edmonds_examples(g, D, A, C):
    ge = gallai_edmonds(g)
    assert ge.D == brute_d_set(g) == D
    assert (set(ge.A), set(ge.C)) == (A, C)


def test_gallai_edmonds_matches_brute(rng):
    for _ in range(100):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.uniform(0.1, 0.8))
        ge = gallai_edmonds(g)
        assert set(ge.D) == brute_d_set(g)
        assert ge.D | ge.A | ge.C == frozenset(range(n))
        assert not (ge.D & ge.A or ge.D & ge.C or ge.A & ge.C)
        for a in ge.A:
            assert any(g.has_edge(a, d) for d in ge.D)


@pytest.mark.parametrize("g,S,orders", [
    (TWO_K3, set(), [3, 3]),
    (star_graph(3), {0}, [1, 1, 1]),
    (cycle_graph(5), set(), [5]),
])
def test_witness_examples(g, S, orders):
    got = factor_critical_witness(g)
    assert set(got) == S
    rep = verify_witness(g, got)
    assert rep.ok and rep.orders == orders


def test_witness_rejects_perfect_matching():
    with pytest.raises(GraphError):
        factor_critical_witness(cycle_graph(6))


def test_witness_peels_even_part():
    # K3 plus a disjoint K2: the K2 sits in C and must be split
    g = disjoint_union([K3, complete_graph(2)])
    S = factor_critical_witness(g)
    rep = verify_witness(g, S)
    assert rep.ok and S == frozenset({3})


def test_verify_witness_reports():
    rep = verify_witness(TWO_K3, [])
    assert rep.ok and rep.nu == 2 and rep.component_count_residual == 0
    rep = verify_witness(star_graph(3), [0])
    assert rep.ok and rep.nu == 1
    rep = verify_witness(cycle_graph(4), [])
    assert not rep.all_factor_critical
    assert rep.failed_clauses()[0] == "factor-critical"
    assert rep.non_factor_critical == [[0, 1, 2, 3]]


def test_verify_witness_matching_identity_can_fail():
    # removing a leaf of P3 leaves a K2 component: 1 + 1/2 != 1
    rep = verify_witness(path_graph(3), [0])
    assert not rep.all_factor_critical and not rep.matching_identity


@pytest.mark.parametrize("g,deficiency,U", [
    (TWO_K3, 2, set()),
    (cycle_graph(6), 0, set()),
    (star_graph(3), 2, {0}),
])
def test_tutte_berge_examples(g, deficiency, U):
    d, u = tutte_berge_oracle(g)
    assert d == deficiency and set(u) == U


def test_tutte_berge_cap():
    with pytest.raises(GraphError):
        tutte_berge_oracle(empty_graph(21))


def test_random_cross_validation(rng):
    for k in range(220):
        n = rng.randint(1, 12)
        p = 0.1 + 0.8 * (k % 9) / 8
        g = random_graph(rng, n, p)
        d, _ = tutte_berge_oracle(g)
        assert matching_number(g) == (n - d) // 2


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_adding_edge_raises_nu_by_at_most_one(g):
    nu = matching_number(g)
    for e in non_edges(g)[:10]:
        assert matching_number(with_edge(g, e)) - nu in (0, 1)


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_structure_properties(g):
    ge = gallai_edmonds(g)
    if is_factor_critical(g):
        assert g.n % 2 == 1 and g.is_connected()
        assert ge.D == frozenset(range(g.n)) and not ge.A
    if has_perfect_matching(g):
        assert not ge.D and not ge.A
    else:
        S = factor_critical_witness(g)
        assert verify_witness(g, S).ok


def test_decompose_carries_witness():
    ge = decompose(TWO_K3)
    assert ge.S == frozenset() and ge.q == 2 and ge.orders == [3, 3]
    assert decompose(cycle_graph(6)).S is None
