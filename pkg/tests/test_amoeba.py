import random

import pytest
from hypothesis import given, strategies as st

from omnitonal.amoeba import (
    amoeba_verdict,
    components,
    edge_replacements,
    interpolation_chain,
    is_amoeba_at,
)
from omnitonal.canon import are_isomorphic
from omnitonal.colorings import Coloring
from omnitonal.graph import (
    EdgeSet,
    GraphError,
    ResourceError,
    complete_graph,
    count_embeddings,
    cycle_graph,
    enumerate_embeddings,
    num_slots,
    path_graph,
    slot,
    star_graph,
)
from omnitonal.spectra import is_balanceable


def naive_replacements(copy: EdgeSet, g, n):
    out = []
    for s1 in copy.slots():
        for s2 in range(num_slots(n)):
            if copy.bits >> s2 & 1:
                continue
            cand = EdgeSet(n, copy.bits & ~(1 << s1) | 1 << s2)
            if are_isomorphic(cand.to_graph().without_isolated(), g):
                out.append(cand)
    return sorted(out, key=lambda e: e.bits)


def test_single_edge_replacements():
    copy = EdgeSet(3, 1 << slot(0, 1))
    res = edge_replacements(copy, path_graph(1), 3)
    assert [r.pairs() for r in res] == [[(0, 2)], [(1, 2)]]


def test_cycle_has_no_replacements():
    for copy in enumerate_embeddings(cycle_graph(4), 5):
        assert edge_replacements(copy, cycle_graph(4), 5) == []


def test_path_replacements_match_naive():
    g = path_graph(2)
    for copy in enumerate_embeddings(g, 4):
        res = edge_replacements(copy, g, 4)
        assert res and res == naive_replacements(copy, g, 4)


def test_replacement_rejects_non_copy():
    with pytest.raises(GraphError):
        edge_replacements(EdgeSet(4, 1), path_graph(2), 4)


@pytest.mark.parametrize("k", range(1, 6))
def test_paths_connected(k):
    for n in range(k + 2, k + 5):
        assert is_amoeba_at(path_graph(k), n).connected


@pytest.mark.parametrize("k", range(3, 7))
def test_cycles_disconnected(k):
    for n in range(k + 1, k + 4):
        res = is_amoeba_at(cycle_graph(k), n)
        assert not res.connected
        assert res.num_components > 1


def test_paw_connected():
    paw = complete_graph(3).add_pendant()
    for n in range(5, 8):
        assert is_amoeba_at(paw, n).connected


def test_claw_disconnected_somewhere():
    v = amoeba_verdict(star_graph(3), 5, 7)
    assert not v.connected_on_range
    assert v.verdict.startswith("not connected at n=")


def test_verdict_wording_and_counts():
    v = amoeba_verdict(path_graph(4), 6, 8)
    assert v.verdict == "amoeba on [6,8]"
    for n, c in v.per_n.items():
        assert c.num_copies == count_embeddings(path_graph(4), n)
        assert c.connected == (c.num_components == 1)
    v = amoeba_verdict(cycle_graph(5), 6, 8)
    assert all(not c.connected for c in v.per_n.values())


def test_component_labels_are_minima():
    label = components(star_graph(3), 5)
    for copy, root in label.items():
        assert root <= copy
        assert label[root] == root


def test_preconditions():
    with pytest.raises(GraphError):
        is_amoeba_at(path_graph(2), 3)
    with pytest.raises(GraphError):
        is_amoeba_at(path_graph(1).disjoint_union(complete_graph(1)), 5)
    with pytest.raises(ResourceError) as info:
        is_amoeba_at(path_graph(6), 12, budget=1000)
    assert info.value.estimate == count_embeddings(path_graph(6), 12)


def test_amoebas_on_census_are_balanceable(small_graphs):
    for g in small_graphs:
        h = g.without_isolated()
        if h.n != g.n or g.e == 0 or g.n > 5:
            continue
        window = range(g.n + 1, 7)
        if all(is_amoeba_at(g, n).connected for n in window):
            assert is_balanceable(g), g


def check_chain(chain, c, g):
    copies = chain.copies
    for a, b in zip(copies, copies[1:]):
        assert (a.bits ^ b.bits).bit_count() == 2
        assert are_isomorphic(b.to_graph().without_isolated(), g)
    for copy, (r, b) in zip(copies, chain.tones):
        assert (copy.bits & c.red.bits).bit_count() == r
        assert r + b == g.e
    reds = chain.red_tones()
    assert all(abs(x - y) <= 1 for x, y in zip(reds, reds[1:]))
    lo, hi = sorted((reds[0], reds[-1]))
    assert set(range(lo, hi + 1)) <= set(reds)


def test_identity_chain():
    c = Coloring.from_red_edges(5, [(0, 1)])
    copy = enumerate_embeddings(path_graph(2), 5)[0]
    chain = interpolation_chain(c, path_graph(2), copy, copy)
    assert len(chain) == 0 and chain.connected


def test_chain_through_triangle():
    c = Coloring.from_red_edges(5, [(0, 1), (1, 2), (0, 2)])
    g = path_graph(2)
    copies = enumerate_embeddings(g, 5)
    blue = next(x for x in copies if not x.bits & c.red.bits)
    red = next(x for x in copies if x.bits & ~c.red.bits == 0)
    chain = interpolation_chain(c, g, blue, red)
    check_chain(chain, c, g)
    assert {0, 1, 2} <= set(chain.red_tones())


def test_chain_between_components():
    g = cycle_graph(4)
    c = Coloring.from_bits(5, 0)
    a, b = enumerate_embeddings(g, 5)[:2]
    chain = interpolation_chain(c, g, a, b)
    assert not chain.connected and len(chain) == 0


@given(st.integers(0, (1 << 21) - 1), st.randoms(use_true_random=False))
def test_chain_invariants(bits, rnd):
    c = Coloring.from_bits(7, bits)
    g = path_graph(3)
    copies = enumerate_embeddings(g, 7)
    a, b = rnd.choice(copies), rnd.choice(copies)
    check_chain(interpolation_chain(c, g, a, b), c, g)
