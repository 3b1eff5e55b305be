from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from reedcheck.budget import BudgetExceeded
from reedcheck.expansions import expand, odd_hole_spec
from reedcheck.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    join,
    path_graph,
    petersen_graph,
)
from reedcheck.invariants import (
    chromatic_number,
    clique_number,
    clique_number_at,
    invariant_record,
    is_berge,
    is_k_critical,
    is_proper_colouring,
    kcritical_odd_hole_check,
    max_degree,
    reed_bound,
    satisfies_reed,
)
from reedcheck.patterns import pattern
from test_graph import graphs


def k2_expansion():
    return expand(odd_hole_spec([complete_graph(2)] * 5)).graph


def test_reed_bound_is_ceiling():
    for om in range(1, 8):
        for de in range(0, 10):
            assert reed_bound(om, de) == -(-(om + de + 1) // 2)


def test_max_degree_examples():
    assert max_degree(cycle_graph(5)) == 2
    assert max_degree(complete_graph(6)) == 5
    assert max_degree(pattern("Chair")) == 3


def test_clique_examples():
    assert clique_number(cycle_graph(5)).size == 2
    assert clique_number(join(complete_graph(3), empty_graph(2))).size == 4
    c3 = expand(odd_hole_spec([cycle_graph(5)] * 3)).graph
    assert clique_number(c3).size == 6


def test_clique_witness_is_least():
    res = clique_number(cycle_graph(5))
    assert res.vertices == (0, 1)
    gem = pattern("Gem")
    triangles = [c for c in combinations(range(5), 3) if all(gem.has_edge(a, b) for a, b in combinations(c, 2))]
    assert clique_number(gem).vertices == min(triangles)


def test_clique_number_at():
    assert all(clique_number_at(cycle_graph(5), v) == 2 for v in range(5))
    gem = pattern("Gem")
    apex = max(range(5), key=gem.degree)
    assert gem.degree(apex) == 4 and clique_number_at(gem, apex) == 3
    chair = pattern("Chair")
    pendant = next(v for v in range(chair.n) if chair.degree(v) == 1)
    assert clique_number_at(chair, pendant) == 2


def test_chromatic_examples():
    assert chromatic_number(cycle_graph(5)).chi == 3
    assert chromatic_number(k2_expansion()).chi == 5


def test_petersen_is_three_chromatic():
    g = petersen_graph()
    res = chromatic_number(g)
    assert res.chi == 3 and is_proper_colouring(g, res.colors)
    edges = oracles.edge_set(g)
    assert oracles.is_proper_k_colourable(10, edges, 3)
    assert not oracles.is_proper_k_colourable(10, edges, 2)


@settings(max_examples=150)
@given(graphs(max_n=9).filter(lambda g: g.n > 0))
def test_solvers_match_brute_force(g):
    edges = oracles.edge_set(g)
    cl = clique_number(g)
    co = chromatic_number(g)
    assert cl.size == oracles.omega(g.n, edges)
    assert co.chi == oracles.chi(g.n, edges)
    assert all(g.has_edge(a, b) for i, a in enumerate(cl.vertices) for b in cl.vertices[i + 1:])
    assert is_proper_colouring(g, co.colors) and len(set(co.colors)) == co.chi


@given(graphs(max_n=10).filter(lambda g: g.n > 0))
def test_colouring_is_normalised(g):
    colours = chromatic_number(g).colors
    seen = []
    for c in colours:
        if c not in seen:
            seen.append(c)
    assert seen == list(range(len(seen)))


@given(graphs(max_n=9), st.data())
def test_invariants_monotone_under_induced_subgraphs(g, data):
    from reedcheck.graph import induced

    if g.n == 0:
        return
    keep = sorted(data.draw(st.sets(st.integers(0, g.n - 1), min_size=1)))
    h = induced(g, keep)
    a, b = invariant_record(h), invariant_record(g)
    assert a.omega <= b.omega and a.chi <= b.chi and a.delta <= b.delta


def test_reed_examples():
    for g, chi, slack in [(cycle_graph(5), 3, 0), (complete_graph(6), 6, 0), (k2_expansion(), 5, 0)]:
        res = satisfies_reed(g)
        assert res.holds and res.record.chi == chi and res.slack == slack
    rec = invariant_record(k2_expansion())
    assert (rec.omega, rec.delta, rec.reed_bound) == (4, 5, 5)


def test_berge_examples():
    assert is_berge(path_graph(6))
    assert not is_berge(cycle_graph(5))
    assert not is_berge(cycle_graph(7))
    # complement of C7 is an odd antihole, not itself a hole
    from reedcheck.graph import complement

    assert not is_berge(complement(cycle_graph(7)))


def test_criticality_examples():
    assert is_k_critical(cycle_graph(5)) and is_k_critical(cycle_graph(5)).k == 3
    assert is_k_critical(complete_graph(4)).k == 4
    c6 = is_k_critical(cycle_graph(6))
    assert not c6 and c6.k == 2


def test_kcritical_hole_membership_examples():
    res = kcritical_odd_hole_check(cycle_graph(5))
    assert res.passed and res.k == 3 and sorted(res.qualifying) == list(range(5))
    res = kcritical_odd_hole_check(complete_graph(4))
    assert res.passed and not res.qualifying
    with pytest.raises(ValueError):
        kcritical_odd_hole_check(cycle_graph(6))


def mycielski(g: Graph) -> Graph:
    n = g.n
    e = list(g.edges())
    e += [(u + n, v) for u, v in g.edges()] + [(v + n, u) for u, v in g.edges()]
    e += [(i + n, 2 * n) for i in range(n)]
    return Graph.from_edges(2 * n + 1, e)


def test_budget_is_enforced():
    # triangle-free with chi 6 on 47 vertices: far beyond a 50 ms budget
    g = mycielski(mycielski(mycielski(cycle_graph(5))))
    with pytest.raises(BudgetExceeded):
        chromatic_number(g, budget_ms=50)


def test_mycielski_chromatic_number():
    g = mycielski(mycielski(cycle_graph(5)))
    assert clique_number(g).size == 2 and chromatic_number(g).chi == 5


def test_empty_vertex_set_is_rejected():
    from reedcheck.graph import GraphError

    with pytest.raises(GraphError):
        chromatic_number(empty_graph(0))


def test_graph_from_constructor_rejects_loops():
    from reedcheck.graph import GraphError

    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
