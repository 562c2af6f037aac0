"""Deterministic test-corpus generators."""

from __future__ import annotations

import random

from .graph import BipartiteGraph
from .representation import Representation


def random_2dorg(u_count: int, v_count: int,
                 seed: int) -> tuple[BipartiteGraph, Representation]:
    """Draw two uniform random vertex interleavings and derive adjacency.

    uv becomes an edge iff u precedes v in both draws, so the returned
    graph realizes the returned representation by construction.  The graph
    may contain twins; callers collapse as needed.
    """
    if u_count < 0 or v_count < 0:
        raise ValueError("counts must be nonnegative")
    rng = random.Random(seed)
    verts = [("u", i) for i in range(u_count)] + \
            [("v", j) for j in range(v_count)]
    order_x = list(verts)
    order_y = list(verts)
    rng.shuffle(order_x)
    rng.shuffle(order_y)
    px = {ref: k for k, ref in enumerate(order_x)}
    py = {ref: k for k, ref in enumerate(order_y)}
    edges = [(i, j) for i in range(u_count) for j in range(v_count)
             if px[("u", i)] < px[("v", j)] and py[("u", i)] < py[("v", j)]]
    g = BipartiteGraph(u_count, v_count, edges)
    return g, Representation(tuple(order_x), tuple(order_y))


def random_bipartite(u_count: int, v_count: int, edge_probability: float,
                     seed: int) -> BipartiteGraph:
    """Each cross pair is an edge independently with the given probability."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(u_count) for j in range(v_count)
             if rng.random() < edge_probability]
    return BipartiteGraph(u_count, v_count, edges)


def disjoint_union(*graphs: BipartiteGraph) -> BipartiteGraph:
    """Disjoint union; u- and v-indices of later graphs are shifted."""
    u_off = v_off = 0
    edges = []
    u_labels: list[str] = []
    v_labels: list[str] = []
    for g in graphs:
        edges.extend((e.u_index + u_off, e.v_index + v_off) for e in g.edges)
        u_labels.extend(g.u_labels)
        v_labels.extend(g.v_labels)
        u_off += g.u_count
        v_off += g.v_count
    return BipartiteGraph(u_off, v_off, edges,
                          [f"u{i + 1}" for i in range(u_off)],
                          [f"v{j + 1}" for j in range(v_off)])


def chain_graph_from_sizes(sizes: tuple[int, ...],
                           v_count: int) -> BipartiteGraph:
    """Chain graph where u_i is adjacent to the first sizes[i] v-vertices.

    ``sizes`` must be non-increasing so the u-neighborhoods are nested.
    """
    if any(sizes[k] < sizes[k + 1] for k in range(len(sizes) - 1)):
        raise ValueError("sizes must be non-increasing")
    if sizes and sizes[0] > v_count:
        raise ValueError("largest size exceeds v_count")
    edges = [(i, j) for i, s in enumerate(sizes) for j in range(s)]
    return BipartiteGraph(len(sizes), v_count, edges)


def all_twin_free_chain_graphs(max_per_side: int):
    """Every twin-free chain graph with at most max_per_side vertices per
    side, one per isomorphism class, via strictly decreasing size chains."""
    from .graph import find_twins

    def dec_sequences(prefix, last):
        yield tuple(prefix)
        for s in range(min(last - 1, max_per_side), -1, -1):
            if len(prefix) < max_per_side:
                prefix.append(s)
                yield from dec_sequences(prefix, s)
                prefix.pop()

    for sizes in dec_sequences([], max_per_side + 1):
        top = sizes[0] if sizes else 0
        for v_count in range(top, max_per_side + 1):
            g = chain_graph_from_sizes(sizes, v_count)
            if not find_twins(g):
                yield g
