import itertools
import random
from math import comb

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from omnitonal.graph import (
    EdgeSet,
    Graph,
    Graph6Error,
    GraphError,
    ResourceError,
    complete_bipartite,
    complete_graph,
    count_embeddings,
    cycle_graph,
    embedding_masks,
    empty_graph,
    enumerate_embeddings,
    is_bipartite,
    is_tree,
    named_graph,
    num_slots,
    parse_graph6,
    path_graph,
    slot,
    star_graph,
    to_graph6,
    unslot,
)

from conftest import census_lines


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list())
    return h


def test_slot_bijection():
    seen = set()
    for v in range(16):
        for u in range(v):
            s = slot(u, v)
            assert unslot(s) == (u, v)
            assert slot(v, u) == s
            seen.add(s)
    assert seen == set(range(120))


def test_slot_rejects_loops():
    with pytest.raises(GraphError):
        slot(3, 3)


def test_census_round_trip():
    lines = census_lines("graphs_n_le_7.g6")
    assert len(lines) == 1252
    for s in lines:
        assert to_graph6(parse_graph6(s)) == s


def test_census_matches_networkx_adjacency():
    for s in census_lines("graphs_n_le_7.g6")[::7]:
        ref = nx.from_graph6_bytes(s.encode())
        g = parse_graph6(s)
        assert sorted(g.edge_list()) == sorted(tuple(sorted(e)) for e in ref.edges())


@given(graphs(max_n=16))
def test_encoder_agrees_with_networkx(g):
    assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_small_encodings():
    assert to_graph6(complete_graph(1)) == "@"
    assert to_graph6(complete_graph(3)) == "Bw"
    g = parse_graph6("A_")
    assert (g.n, g.e) == (2, 1)
    empty5 = nx.to_graph6_bytes(nx.empty_graph(5), header=False).decode().strip()
    g = parse_graph6(empty5)
    assert (g.n, g.e) == (5, 0)
    assert to_graph6(g) == empty5


def test_header_is_accepted():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("B", 1),  # truncated body
        ("Bwx", 2),  # trailing character
        ("B\x7f", 1),  # out-of-range character
        ("Q??", 0),  # 18 vertices
        ("Bx", 1),  # nonzero padding bits
        (">>graph6<Bw", 0),  # broken header
    ],
)
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (1,))  # loop
    with pytest.raises(GraphError):
        Graph(17, (0,) * 17)
    with pytest.raises(GraphError):
        complete_graph(0)


@given(graphs())
def test_adjacency_and_edges_agree(g):
    assert sum(row.bit_count() for row in g.adj) == 2 * g.e
    assert g.edges.bits < 1 << num_slots(g.n)
    assert Graph.from_bits(g.n, g.edges.bits) == g


@pytest.mark.parametrize("n, e", [(1, 0), (4, 6), (16, 120)])
def test_complete_graph_sizes(n, e):
    assert complete_graph(n).e == e


def test_named_families():
    p = named_graph("path_k", 4)
    assert (p.n, p.e) == (5, 4)
    s = named_graph("split_pq_complete", 1, 7)
    assert (s.n, s.e) == (8, 7)
    assert s == star_graph(7)
    assert named_graph("complete_bipartite_pq", 2, 3).e == 6
    assert named_graph("cycle_k", 5) == cycle_graph(5)
    with pytest.raises(GraphError):
        named_graph("wheel", 5)
    with pytest.raises(GraphError):
        named_graph("path_k", 1, 2)


def test_bipartite_examples():
    ok, side = is_bipartite(cycle_graph(6))
    assert ok
    for u, v in cycle_graph(6).edge_list():
        assert (side >> u & 1) != (side >> v & 1)
    assert not is_bipartite(cycle_graph(5))[0]
    assert not is_bipartite(complete_graph(4))[0]


@given(graphs())
def test_bipartite_matches_networkx(g):
    ok, side = is_bipartite(g)
    assert ok == nx.is_bipartite(to_nx(g))
    if ok:
        assert all((side >> u & 1) != (side >> v & 1) for u, v in g.edge_list())


def test_is_tree(trees):
    assert all(is_tree(t) for t in trees)
    assert not is_tree(cycle_graph(4))
    assert not is_tree(empty_graph(2))


def _naive_copies(g: Graph, n: int) -> set[int]:
    h = g.without_isolated()
    out = set()
    for image in itertools.permutations(range(n), h.n):
        bits = 0
        for u, v in h.edge_list():
            bits |= 1 << slot(image[u], image[v])
        out.add(bits)
    return out


@pytest.mark.parametrize(
    "g, n, expected",
    [(path_graph(1), 4, 6), (path_graph(2), 4, 12), (complete_graph(3), 5, 10)],
)
def test_embedding_counts(g, n, expected):
    copies = enumerate_embeddings(g, n)
    assert len(copies) == expected == count_embeddings(g, n)
    assert {c.bits for c in copies} == _naive_copies(g, n)


@given(graphs(max_n=5), st.integers(0, 2))
def test_embeddings_match_naive(g, extra):
    h = g.without_isolated()
    if h.e == 0:
        return
    n = h.n + extra
    masks = embedding_masks(h, n)
    assert masks == sorted(set(masks))
    assert set(masks) == _naive_copies(h, n)
    assert len(masks) == count_embeddings(h, n)


def test_embeddings_are_copies():
    from omnitonal.canon import are_isomorphic

    g = star_graph(3).add_pendant(1)
    for es in enumerate_embeddings(g, 6)[::17]:
        assert are_isomorphic(es.to_graph().without_isolated(), g)


def test_embedding_budget():
    with pytest.raises(ResourceError) as info:
        embedding_masks(path_graph(7), 16, budget=1000)
    assert info.value.estimate == comb(16, 8) * 40320 // 2


def test_large_pattern_orbit_is_cheap():
    g = complete_graph(13).add_pendant()
    assert len(embedding_masks(g, 14)) == count_embeddings(g, 14) == 14 * 13


def test_edgeset_helpers():
    es = EdgeSet(4, (1 << slot(0, 1)) | (1 << slot(2, 3)))
    assert len(es) == 2
    assert (1, 0) in es and (0, 2) not in es
    assert es.pairs() == [(0, 1), (2, 3)]
    assert len(es.complement()) == 4
    with pytest.raises(GraphError):
        EdgeSet(3, 1 << 3)


def test_relabel_and_union():
    g = path_graph(2)
    assert g.relabel((2, 1, 0)).edge_list() == [(0, 1), (1, 2)]
    u = g.disjoint_union(complete_graph(3))
    assert (u.n, u.e) == (6, 5)
    rng = random.Random(5)
    perm = list(range(6))
    rng.shuffle(perm)
    assert u.relabel(perm).e == 5
