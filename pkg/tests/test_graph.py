import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import GRAPH_COUNTS, load
from oracles import to_nx
from reedcheck.graph import (
    Graph,
    Graph6BodyError,
    Graph6CapError,
    Graph6HeaderError,
    Graph6TruncatedError,
    GraphError,
    VertexCapError,
    complement,
    complete_graph,
    compose,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    from_graph6,
    induced,
    is_connected,
    join,
    path_graph,
    petersen_graph,
    to_edge_list,
    to_graph6,
)
from reedcheck.patterns import isomorphic, pattern


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_single_vertex():
    g = from_graph6("@")
    assert g.n == 1 and g.m == 0


def test_k2_hand_decoded():
    # 'A' = 65-63 = 2 vertices; '_' = 96-63 = 0b100000, whose first bit is edge 0-1
    g = from_graph6("A_")
    assert g == complete_graph(2)


def test_c5_matches_reference_codec():
    c5 = cycle_graph(5)
    text = to_graph6(c5)
    assert text == nx.to_graph6_bytes(nx.cycle_graph(5), header=False).decode().strip()
    assert from_graph6(text) == c5


def test_petersen_matches_reference_codec():
    g = petersen_graph()
    assert to_graph6(g) == nx.to_graph6_bytes(nx.petersen_graph(), header=False).decode().strip()
    assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())


def test_header_is_skipped():
    assert from_graph6(">>graph6<<Dhc") == cycle_graph(5)


def test_large_n_uses_long_form():
    g = path_graph(70)
    text = to_graph6(g)
    assert text.startswith("~")
    assert text == nx.to_graph6_bytes(nx.path_graph(70), header=False).decode().strip()
    assert from_graph6(text, cap=100) == g


@pytest.mark.parametrize(
    "text, exc, offset",
    [
        ("", Graph6HeaderError, 0),
        ("D!c", Graph6BodyError, 1),
        ("Dh", Graph6TruncatedError, 2),
        ("Dhcc", Graph6BodyError, 3),
        ("Dhd", Graph6BodyError, 2),  # nonzero padding bits
    ],
)
def test_decode_errors(text, exc, offset):
    with pytest.raises(exc) as info:
        from_graph6(text)
    assert info.value.offset == offset


def test_vertex_cap():
    text = to_graph6(path_graph(70))
    with pytest.raises(Graph6CapError) as info:
        from_graph6(text)
    assert isinstance(info.value, VertexCapError)
    with pytest.raises(VertexCapError):
        disjoint_union(complete_graph(40), complete_graph(30))


@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g), cap=64) == g


@given(graphs(max_n=15))
def test_codec_agrees_with_networkx(g):
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs


@given(graphs())
def test_edge_list_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


@given(graphs())
def test_complement_is_involution(g):
    c = complement(g)
    assert complement(c) == g
    assert g.m + c.m == g.n * (g.n - 1) // 2


@given(graphs(max_n=10), st.data())
def test_induced_is_hereditary(g, data):
    outer = sorted(data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n))) if g.n else []
    inner = sorted(data.draw(st.sets(st.sampled_from(range(len(outer))), max_size=len(outer)))) if outer else []
    h = induced(g, outer)
    assert induced(h, inner) == induced(g, [outer[i] for i in inner])
    for a, b in h.edges():
        assert g.has_edge(outer[a], outer[b])


@given(graphs(max_n=8), graphs(max_n=8))
def test_compose_counts(g, h):
    u = disjoint_union(g, h)
    j = join(g, h)
    assert u.n == j.n == g.n + h.n
    assert u.m == g.m + h.m
    assert j.m == g.m + h.m + g.n * h.n


def test_complement_examples():
    assert isomorphic(complement(cycle_graph(5)), cycle_graph(5))
    assert complement(complete_graph(5)) == empty_graph(5)
    assert isomorphic(complement(path_graph(4)), path_graph(4))


def test_induced_examples():
    c5 = cycle_graph(5)
    assert induced(c5, [0, 1, 2, 3]) == path_graph(4)
    assert induced(c5, range(5)) == c5
    assert induced(complete_graph(6), [1, 3, 5]) == complete_graph(3)
    with pytest.raises(GraphError):
        induced(c5, [7])


def test_compose_examples():
    assert isomorphic(join(complete_graph(1), cycle_graph(4)), pattern("K1+C4"))
    assert isomorphic(join(disjoint_union(complete_graph(3), complete_graph(1)), complete_graph(1)), pattern("K3uK1+K1"))
    assert disjoint_union(complete_graph(1), complete_graph(1)) == empty_graph(2)
    with pytest.raises(GraphError):
        compose("product", complete_graph(1), complete_graph(1))


def test_connectivity_examples():
    assert is_connected(cycle_graph(5))
    assert not is_connected(empty_graph(2))
    assert not is_connected(complement(complete_graph(2)))


def test_graph_is_immutable():
    g = cycle_graph(5)
    with pytest.raises(AttributeError):
        g.n = 3


def test_corpus_counts():
    for n in range(1, 9):
        assert len(load(n)) == GRAPH_COUNTS[n]


@settings(max_examples=50)
@given(st.integers(1, 7), st.data())
def test_corpus_lines_are_canonical_graphs(n, data):
    line = data.draw(st.sampled_from(load(n)))
    g = from_graph6(line)
    assert g.n == n and to_graph6(g) == line
