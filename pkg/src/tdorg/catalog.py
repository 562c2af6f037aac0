"""Small named graphs used throughout the tests and demos."""

from __future__ import annotations

from .graph import BipartiteGraph


def fan6() -> BipartiteGraph:
    """Six vertices: u1 adjacent to every v, plus the pendant edges
    u2v2 and u3v3.  Twin-free, connected, not uniquely representable."""
    return BipartiteGraph(3, 3, [(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)])


def sunlet10() -> BipartiteGraph:
    """Ten vertices: a perfect matching u_iv_i plus the biclique
    {u1,u2,u3} x {v4,v5} and the extra edge u1v2.  Contains two disjoint
    buried subgraphs."""
    edges = [(0, 0), (0, 1), (1, 1), (2, 2), (3, 3), (4, 4)]
    edges += [(i, j) for i in range(3) for j in (3, 4)]
    return BipartiteGraph(5, 5, edges)


def path4() -> BipartiteGraph:
    """The four-vertex path v1 u1 v2 u2, written with edges u1v1, u1v2, u2v2."""
    return BipartiteGraph(2, 2, [(0, 0), (0, 1), (1, 1)])


def cycle6() -> BipartiteGraph:
    """The six-cycle u1 v1 u2 v2 u3 v3; the smallest non-2DORG witness."""
    return BipartiteGraph(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2),
                                 (0, 2)])


def two_disjoint_edges() -> BipartiteGraph:
    """2K2: two independent edges, the smallest disconnected fixture."""
    return BipartiteGraph(2, 2, [(0, 0), (1, 1)])
