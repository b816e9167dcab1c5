import itertools

import pytest
from hypothesis import given

from omnitonal.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from omnitonal.spectra import (
    cut_edges,
    cut_spectrum,
    induced_edges,
    induced_spectrum,
    is_balanceable,
    is_omnitonal,
    is_r_tonal,
    tonal_report,
)

from test_graph import graphs


def naive_spectra(g: Graph) -> tuple[set[int], set[int]]:
    """Both spectra by a plain double loop over vertex subsets and edges."""
    edges = g.edge_list()
    cuts, induced = set(), set()
    for size in range(g.n + 1):
        for w in itertools.combinations(range(g.n), size):
            w = set(w)
            induced.add(sum(u in w and v in w for u, v in edges))
            cuts.add(sum((u in w) != (v in w) for u, v in edges))
    return cuts, induced


@pytest.mark.parametrize(
    "g, cut, induced",
    [
        (cycle_graph(6), {0, 2, 4, 6}, {0, 1, 2, 3, 4, 6}),
        (complete_graph(5), {0, 4, 6}, {0, 1, 3, 6, 10}),
        (complete_graph(4), {0, 3, 4}, {0, 1, 3, 6}),
        (path_graph(1), {0, 1}, {0, 1}),
        (path_graph(2), {0, 1, 2}, {0, 1, 2}),
    ],
)
def test_spectrum_examples(g, cut, induced):
    assert cut_spectrum(g).achieved == cut
    assert induced_spectrum(g).achieved == induced


def test_against_naive_loop(small_graphs):
    for g in small_graphs:
        if g.n > 5:
            continue
        cuts, induced = naive_spectra(g)
        assert cut_spectrum(g).achieved == cuts
        assert induced_spectrum(g).achieved == induced
        for r in range(1, g.e // 2 + 1):
            want = bool({r, g.e - r} & cuts) and bool({r, g.e - r} & induced)
            assert bool(is_r_tonal(g, r)) == want


@given(graphs(max_n=10))
def test_witnesses_reevaluate(g):
    cut, ind = cut_spectrum(g), induced_spectrum(g)
    for value, x in cut.witness.items():
        assert cut_edges(g, x) == value
    for value, w in ind.witness.items():
        assert induced_edges(g, w) == value
    assert 0 in cut and 0 in ind and g.e in ind
    assert (g.e in cut) == (g.e == 0 or _bipartite(g))


def _bipartite(g):
    from omnitonal.graph import is_bipartite

    return is_bipartite(g)[0]


@given(graphs(max_n=8))
def test_witness_is_least_mask(g):
    ind = induced_spectrum(g)
    for value, w in ind.witness.items():
        assert all(induced_edges(g, x) != value for x in range(w))


def test_r_tonal_examples():
    k4 = is_r_tonal(complete_graph(4), 3)
    assert k4 and k4.cut_value == 3 and k4.induced_value == 3
    assert not is_r_tonal(complete_graph(5), 5)
    assert not is_r_tonal(cycle_graph(6), 3)
    with pytest.raises(GraphError):
        is_r_tonal(cycle_graph(6), 4)
    with pytest.raises(GraphError):
        is_r_tonal(cycle_graph(6), 0)


def test_complete_graphs():
    assert is_balanceable(complete_graph(4))
    for m in (5, 8, 9):
        assert not is_balanceable(complete_graph(m))
    for m in range(3, 9):
        assert not is_omnitonal(complete_graph(m))


def test_cycles_two_mod_four_not_balanceable():
    for t in (6, 10):
        assert not is_balanceable(cycle_graph(t))


def test_c4_balanceable_not_omnitonal():
    c4 = cycle_graph(4)
    v = is_omnitonal(c4)
    assert not v and 1 in v.missing_cut
    assert is_balanceable(c4)


def test_trees_are_omnitonal(trees):
    for t in trees:
        assert is_omnitonal(t), t
        assert is_balanceable(t)


def test_implication_chain_on_census(small_graphs):
    for g in small_graphs:
        rep = tonal_report(g)
        if rep.omnitonal:
            assert rep.balanceable and rep.bipartite
        if g.e >= 2:
            assert rep.balanceable == rep.r_tonal[g.e // 2]


def test_report_examples():
    k4 = tonal_report(complete_graph(4))
    assert (k4.balanceable, k4.omnitonal, k4.bipartite) == (True, False, False)
    assert tonal_report(star_graph(5)).omnitonal
    two = star_graph(3).disjoint_union(path_graph(4))
    assert tonal_report(two).omnitonal
    d = k4.to_dict()
    assert d["graph"] == "C~" and d["r_tonal"] == {"1": False, "2": False, "3": True}
    assert k4.r_tonal_mask == 0b100


def test_union_of_omnitonal_is_omnitonal(trees):
    for a, b in zip(trees[::9], trees[4::9]):
        if a.n + b.n <= 16:
            assert is_omnitonal(a.disjoint_union(b))


def test_edgeless_rejected():
    from omnitonal.graph import empty_graph

    with pytest.raises(GraphError):
        is_balanceable(empty_graph(3))
    with pytest.raises(GraphError):
        is_omnitonal(empty_graph(3))
