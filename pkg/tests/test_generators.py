import pytest

from tdorg import (chain_graph_from_sizes, disjoint_union, find_twins,
                   is_chain_graph, random_2dorg, random_bipartite, realizes)
from tdorg.generators import all_twin_free_chain_graphs


def test_random_2dorg_realizes_its_representation():
    for seed in range(30):
        g, rep = random_2dorg(4, 4, seed)
        assert realizes(g, rep)


def test_random_2dorg_is_deterministic():
    a, rep_a = random_2dorg(5, 5, 123)
    b, rep_b = random_2dorg(5, 5, 123)
    assert a == b and rep_a == rep_b


def test_random_bipartite_probability_extremes():
    empty = random_bipartite(3, 3, 0.0, 0)
    full = random_bipartite(3, 3, 1.0, 0)
    assert empty.edge_count == 0
    assert full.edge_count == 9
    with pytest.raises(ValueError):
        random_bipartite(2, 2, 1.5, 0)


def test_disjoint_union_shifts_indices():
    from tdorg.catalog import path4, fan6
    g = disjoint_union(path4(), fan6())
    assert g.u_count == 5 and g.v_count == 5
    assert g.edge_count == path4().edge_count + fan6().edge_count
    assert g.has_edge(2, 2)  # fan's u1v1 shifted by path's sizes


def test_chain_graph_from_sizes():
    g = chain_graph_from_sizes((3, 2, 1), 3)
    assert is_chain_graph(g)
    assert g.edge_count == 6
    with pytest.raises(ValueError):
        chain_graph_from_sizes((1, 2), 3)
    with pytest.raises(ValueError):
        chain_graph_from_sizes((4,), 3)


def test_all_twin_free_chain_graphs_are_twin_free_chains():
    graphs = list(all_twin_free_chain_graphs(3))
    assert graphs
    for g in graphs:
        assert is_chain_graph(g)
        assert find_twins(g) == []
        assert g.u_count <= 3 and g.v_count <= 3
    # distinct adjacency structures only
    keys = {(g.u_count, g.v_count, g.adj_u) for g in graphs}
    assert len(keys) == len(graphs)
