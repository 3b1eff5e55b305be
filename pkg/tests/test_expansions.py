import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from reedcheck.expansions import (
    ExpansionSpec,
    HoleLengthError,
    buoy_class_bound_checks,
    canonical_rotation,
    chi_odd_expansion,
    complete_realization,
    expand,
    layered_coloring_bound,
    min_hitting_set,
    min_odd_transversal,
    mixed_components,
    mixed_realization,
    odd_hole_spec,
    transversal_clique_check,
    verify_expansion_reed,
)
from reedcheck.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
)
from reedcheck.holes import enumerate_odd_holes
from reedcheck.invariants import chromatic_number, invariant_record
from reedcheck.runner import random_expansion_specs
from test_graph import graphs

K2X5 = odd_hole_spec([complete_graph(2)] * 5)


def test_identity_expansion():
    assert expand(odd_hole_spec([complete_graph(1)] * 5)).graph == cycle_graph(5)


def test_k2_expansion_invariants():
    e = expand(K2X5)
    rec = invariant_record(e.graph)
    assert e.graph.n == 10 and (rec.omega, rec.delta, rec.chi) == (4, 5, 5)
    assert e.offsets == (0, 2, 4, 6, 8)


def test_p4_of_c5s():
    e = expand(ExpansionSpec(path_graph(4), (cycle_graph(5),) * 4)).graph
    assert e.n == 20 and e.m == 4 * 5 + 3 * 25


def test_spec_text_round_trip():
    spec = ExpansionSpec(cycle_graph(5), (complete_graph(2), cycle_graph(5), complete_graph(1), path_graph(3), complete_graph(1)))
    again = ExpansionSpec.parse(spec.to_text())
    assert again == spec


def test_spec_validation():
    with pytest.raises(GraphError):
        ExpansionSpec(cycle_graph(5), (complete_graph(1),) * 4)


@pytest.mark.parametrize(
    "chis, value",
    [((1, 1, 1, 1, 1), 3), ((2, 2, 2, 2, 2), 5), ((3, 3, 1, 1, 1), 6), ((1,) * 7, 3)],
)
def test_formula_examples(chis, value):
    assert chi_odd_expansion(chis) == value


@pytest.mark.parametrize("chis", [(2, 2, 2, 2, 2), (3, 3, 1, 1, 1)])
def test_formula_examples_match_exact(chis):
    g = expand(odd_hole_spec(complete_realization(chis))).graph
    assert chromatic_number(g).chi == chi_odd_expansion(chis)


def test_formula_rejects_bad_vectors():
    for bad in [(1, 1, 1, 1), (1, 1, 1, 1, 0), (1,) * 6]:
        with pytest.raises(ValueError):
            chi_odd_expansion(bad)


@given(st.lists(st.integers(1, 6), min_size=5, max_size=5), st.integers(0, 4))
def test_formula_is_rotation_invariant(chis, shift):
    # only length 5: for longer cycles the closed form depends on orientation
    shift %= len(chis)
    assert chi_odd_expansion(chis) == chi_odd_expansion(chis[shift:] + chis[:shift])
    assert chi_odd_expansion(chis) == chi_odd_expansion(chis[::-1])


@given(st.lists(st.integers(1, 6), min_size=5, max_size=5))
def test_formula_matches_weighted_cycle_oracle_on_length_5(chis):
    assert chi_odd_expansion(chis) == oracles.weighted_odd_cycle_chi(chis)


def test_canonical_rotation_puts_heaviest_edge_first():
    assert canonical_rotation((1, 1, 3, 3, 1)) == (3, 3, 1, 1, 1)


@pytest.mark.parametrize("c", [1, 2, 3, 4, 5])
def test_mixed_components_have_the_requested_chi(c):
    for comp in mixed_components(c):
        assert chromatic_number(comp).chi == c


def test_length_7_form_depends_on_orientation():
    chis = (1, 1, 1, 2, 1, 1, 2)
    assert chi_odd_expansion(chis) != chi_odd_expansion(chis[::-1])


def test_length_7_disagreement_is_genuine():
    # exact chi is 3: colour classes read off below; the closed form says 4
    chis = (1, 2, 1, 1, 2, 1, 1)
    g = expand(odd_hole_spec(complete_realization(chis))).graph
    # component vertices in order: v0 | v1 v1' | v2 | v3 | v4 v4' | v5 | v6
    colouring = [2, 0, 1, 2, 0, 1, 2, 0, 1]
    assert all(colouring[u] != colouring[v] for u, v in g.edges())
    assert chromatic_number(g).chi == 3 == oracles.weighted_odd_cycle_chi(chis)
    assert chi_odd_expansion(chis) == 4


def test_reed_on_expansions():
    r = verify_expansion_reed(K2X5)
    assert r.passed and r.invariants["chi"] == r.invariants["reed_bound"] and r.formula == "pass" and r.formula_value == 5
    k6 = verify_expansion_reed(ExpansionSpec(complete_graph(2), (complete_graph(3), complete_graph(3))))
    assert k6.base_kind == "bipartite" and k6.reed == "pass" and k6.invariants["chi"] == k6.invariants["reed_bound"] == 6
    assert k6.formula == "not-applicable"


def test_random_expansions():
    specs = random_expansion_specs(200, seed=11)
    for spec in specs:
        r = verify_expansion_reed(spec)
        assert r.reed == "pass"
        if r.base_kind == "odd_hole" and all(c == complete_graph(c.n) for c in spec.components):
            # complete components: the exact value is the weighted odd cycle value
            assert r.invariants["chi"] == oracles.weighted_odd_cycle_chi([c.n for c in spec.components])
        if r.formula == "fail":
            assert r.chis is not None and len(r.chis) == 7
            assert r.formula_value != oracles.weighted_odd_cycle_chi(r.chis)


def test_mixed_realization_is_deterministic():
    assert mixed_realization((1, 2, 3, 1, 2)) == mixed_realization((1, 2, 3, 1, 2))


# --- transversals


def test_transversal_examples():
    assert min_odd_transversal(cycle_graph(5)).vertices == (0,)
    assert min_odd_transversal(disjoint_union(cycle_graph(5), cycle_graph(5))).size == 2
    assert min_odd_transversal(path_graph(6)).vertices == ()
    with pytest.raises(HoleLengthError):
        min_odd_transversal(cycle_graph(7), max_len=5)


def test_transversal_check_examples():
    c5 = transversal_clique_check(cycle_graph(5))
    assert c5.passed and c5.transversal.omega_in_w == 1
    k2 = transversal_clique_check(expand(K2X5).graph)
    assert k2.passed and k2.transversal.omega_in_w <= 3
    with pytest.raises(ValueError):
        transversal_clique_check(path_graph(5))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 255), max_size=8))
def test_hitting_set_is_minimum_and_least(masks):
    chosen = min_hitting_set(masks, 255)
    assert all(any((m >> v) & 1 for v in chosen) for m in masks)
    best = None
    for k in range(9):
        for c in combinations(range(8), k):
            if all(any((m >> v) & 1 for v in c) for m in masks):
                best = c
                break
        if best is not None:
            break
    assert chosen == best


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9))
def test_transversal_is_minimum(g):
    t = min_odd_transversal(g)
    holes = oracles.induced_odd_holes(g.n, oracles.edge_set(g))
    assert all(h & set(t.vertices) for h in holes)
    assert t.size == oracles.min_transversal_size(g.n, holes)


# --- layered bound and buoy classes


def test_layered_bound_on_c5():
    lb = layered_coloring_bound(cycle_graph(5))
    assert len(lb.layers) == 1 and lb.chi == 3 and lb.bound == 3 == lb.derived_limit
    assert lb.derived_holds and lb.stated_limit == 1 and not lb.stated_holds


def test_layered_bound_on_bipartite():
    lb = layered_coloring_bound(path_graph(4))
    assert lb.layers == () and lb.bound == lb.omega == 2 and lb.derived_holds


def test_layered_bound_hypotheses():
    with pytest.raises(ValueError):
        layered_coloring_bound(path_graph(6))


def test_buoy_bound_examples():
    k2 = buoy_class_bound_checks(expand(K2X5).graph)
    assert k2["full_buoy"].verdict == "pass" and k2["full_buoy"].details["limit"] == 6
    c5 = buoy_class_bound_checks(cycle_graph(5))
    assert c5["full_buoy"].verdict == c5["indep_buoy"].verdict == "pass"
    assert c5["indep_buoy"].details == {"chi": 3, "reed_bound": 3}
    tree = buoy_class_bound_checks(Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)]))
    assert tree["full_buoy"].verdict == tree["indep_buoy"].verdict == "vacuous"


def test_random_transversals_against_brute_force():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(5, 10)
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4])
        holes = {frozenset(h) for h in enumerate_odd_holes(g)}
        t = min_odd_transversal(g)
        assert t.size == oracles.min_transversal_size(n, list(holes))
