import warnings

import pytest

from tdorg import (BipartiteGraph, NeighborhoodRelation, ParseError,
                   collapse_twins, connectivity, find_twins,
                   independent_edge_pairs, is_chain_graph,
                   is_chordal_bipartite, is_connected, neighborhood_relation,
                   parse_graph, parse_vertex_token, serialize_graph,
                   vertex_token)
from tdorg.catalog import cycle6, fan6, path4, sunlet10, two_disjoint_edges


def test_vertex_tokens_round_trip():
    for ref in [("u", 0), ("v", 0), ("u", 41)]:
        assert parse_vertex_token(vertex_token(ref)) == ref


def test_parse_vertex_token_rejects_garbage():
    for tok in ["w1", "u0", "u", "v-2", "u1v1", ""]:
        with pytest.raises(ParseError):
            parse_vertex_token(tok)


def test_basic_accessors():
    g = fan6()
    assert g.u_count == 3 and g.v_count == 3
    assert g.n_vertices == 6 and g.edge_count == 5
    assert g.has_edge(0, 2) and not g.has_edge(1, 2)
    assert g.u_neighbors(0) == (0, 1, 2)
    assert g.v_neighbors(1) == (0, 1)
    assert g.neighbors(("u", 1)) == (("v", 1),)
    assert g.adjacent(("v", 2), ("u", 2))
    assert not g.adjacent(("u", 0), ("u", 1))


def test_edges_are_canonically_sorted_with_stable_ids():
    g = BipartiteGraph(2, 2, [(1, 1), (0, 1), (0, 0)])
    assert [(e.u_index, e.v_index) for e in g.edges] == [(0, 0), (0, 1), (1, 1)]
    assert [e.edge_id for e in g.edges] == [0, 1, 2]
    assert g.edge(0, 1).token() == "u1v2"


def test_parse_serialize_round_trip():
    for g in [fan6(), sunlet10(), path4(), cycle6(), two_disjoint_edges()]:
        assert parse_graph(serialize_graph(g)) == g


def test_parse_with_comments_and_labels():
    text = """c a comment
p tdorg 2 2 3
e 1 1
e 1 2
e 2 2
n u1 left
n v2 right
"""
    g = parse_graph(text)
    assert g.label(("u", 0)) == "left"
    assert g.label(("v", 1)) == "right"
    assert parse_graph(serialize_graph(g)) == g


def test_parse_duplicate_edges_warn_and_dedup():
    text = "p tdorg 2 2 3\ne 1 1\ne 1 1\ne 2 2\n"
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = parse_graph(text)
    assert g.edge_count == 2
    assert any("duplicate" in str(w.message) for w in caught)


@pytest.mark.parametrize("text, fragment", [
    ("e 1 1\n", "problem line"),
    ("p tdorg 2 2\ne 1 1\n", "header"),
    ("p tdorg 2 2 1\ne 3 1\n", "out of range"),
    ("p tdorg 2 2 1\ne 1 x\n", "non-integer"),
    ("p tdorg 2 2 2\ne 1 1\n", "edge lines"),
    ("p tdorg 2 2 1\ne 1 1\np tdorg 2 2 1\n", "duplicate problem"),
    ("p tdorg 2 2 1\nq 1 1\n", "unrecognized"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert fragment in str(err.value)


def test_neighborhood_relation():
    g = fan6()
    rel = neighborhood_relation
    assert rel(g, ("u", 0), ("u", 1)) is NeighborhoodRelation.PROPER_SUPERSET
    assert rel(g, ("u", 1), ("u", 0)) is NeighborhoodRelation.PROPER_SUBSET
    assert rel(g, ("u", 1), ("u", 2)) is NeighborhoodRelation.INCOMPARABLE
    assert rel(g, ("v", 0), ("v", 0)) is NeighborhoodRelation.EQUAL


def test_find_twins():
    assert find_twins(fan6()) == []
    g = BipartiteGraph(2, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2)])
    twins = find_twins(g)
    assert (("v", 0), ("v", 1)) in twins


def test_collapse_twins():
    g = BipartiteGraph(2, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2)])
    g2, mapping = collapse_twins(g)
    assert find_twins(g2) == []
    assert g2.u_count == 2 and g2.v_count == 2
    # both v1 and v2 collapse onto the lowest-index representative
    assert mapping[("v", 0)] == mapping[("v", 1)]


def test_collapse_twins_on_twin_free_graph_is_identity():
    g = sunlet10()
    g2, mapping = collapse_twins(g)
    assert g2 == g
    assert all(mapping[ref] == ref for ref in g.vertices())


def test_independent_edge_pairs():
    g = two_disjoint_edges()
    pairs = independent_edge_pairs(g)
    assert len(pairs) == 1
    e1, e2 = pairs[0]
    assert (e1.token(), e2.token()) == ("u1v1", "u2v2")
    assert independent_edge_pairs(path4()) == []


def test_is_chain_graph():
    assert is_chain_graph(path4())
    assert not is_chain_graph(fan6())
    assert not is_chain_graph(two_disjoint_edges())
    assert is_chain_graph(BipartiteGraph(1, 1, [(0, 0)]))
    assert is_chain_graph(BipartiteGraph(0, 0, []))


def test_is_chordal_bipartite():
    assert is_chordal_bipartite(fan6())
    assert is_chordal_bipartite(sunlet10())
    assert not is_chordal_bipartite(cycle6())
    # C8 has a chordless cycle of length 8
    c8 = BipartiteGraph(4, 4, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2),
                               (3, 2), (3, 3), (0, 3)])
    assert not is_chordal_bipartite(c8)
    # C6 plus one chord becomes chordal bipartite
    chorded = BipartiteGraph(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2),
                                    (0, 2), (0, 1)])
    assert is_chordal_bipartite(chorded)


def test_connectivity():
    comps = connectivity(two_disjoint_edges())
    assert len(comps) == 2
    assert all(c.nontrivial for c in comps)
    assert is_connected(fan6())
    assert not is_connected(two_disjoint_edges())
    lonely = BipartiteGraph(2, 1, [(0, 0)])
    comps = connectivity(lonely)
    assert sorted(c.nontrivial for c in comps) == [False, True]
