"""Buried subgraphs: verification, K-sets, constructive extraction, and
edge substitution."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .auxgraphs import build_g_plus, find_invertible_pair
from .errors import (GuardExceededError, InternalConsistencyError,
                     InvertiblePairError, PreconditionError,
                     TwinsPresentError)
from .graph import (BipartiteGraph, EdgeRef, VertexRef, find_twins,
                    independent_edge_pairs, is_connected)
from .representation import (construct_normalized_representation,
                             weak_ordering_from_representation)

ENUMERATION_GUARD = 16


@dataclass(frozen=True)
class BuriedSubgraph:
    """A verified buried vertex set with its witnesses and K-sets."""

    vertices: frozenset
    inside_pair: tuple[EdgeRef, EdgeRef]  # independent edges in G[B]
    outside_witness: tuple[EdgeRef, EdgeRef]  # edge in G-B, independent mate
    k_u: frozenset
    k_v: frozenset


def _split_masks(b: Iterable[VertexRef]) -> tuple[int, int]:
    mu = mv = 0
    for side, idx in b:
        if side == "u":
            mu |= 1 << idx
        else:
            mv |= 1 << idx
    return mu, mv


def violated_buried_condition(g: BipartiteGraph,
                              b: Iterable[VertexRef]) -> Optional[str]:
    """First violated condition among (a)-(d), or None if B is buried."""
    b = set(b)
    if not b <= set(g.vertices()):
        raise PreconditionError("B is not a subset of V(G)")
    mu, mv = _split_masks(b)
    indep = independent_edge_pairs(g)
    # (a) independent edges inside G[B]
    if not any(mu >> e1.u_index & 1 and mv >> e1.v_index & 1
               and mu >> e2.u_index & 1 and mv >> e2.v_index & 1
               for e1, e2 in indep):
        return "a"
    # (b) outside vertices see all or nothing of B's opposite side
    for i in range(g.u_count):
        if not mu >> i & 1:
            hit = g.adj_u[i] & mv
            if hit and hit != mv:
                return "b"
    for j in range(g.v_count):
        if not mv >> j & 1:
            hit = g.adj_v[j] & mu
            if hit and hit != mu:
                return "b"
    # (c) an edge of G - B independent with another edge of G
    if not any((not mu >> e.u_index & 1) and (not mv >> e.v_index & 1)
               for pair in indep for e in pair):
        return "c"
    # (d) no isolated or universal vertex inside G[B]
    b_u = [i for i in range(g.u_count) if mu >> i & 1]
    b_v = [j for j in range(g.v_count) if mv >> j & 1]
    for i in b_u:
        hit = g.adj_u[i] & mv
        if hit == 0 or hit == mv:
            return "d"
    for j in b_v:
        hit = g.adj_v[j] & mu
        if hit == 0 or hit == mu:
            return "d"
    return None


def is_buried_subgraph(g: BipartiteGraph, b: Iterable[VertexRef]) -> bool:
    return violated_buried_condition(g, b) is None


def _witnesses(g: BipartiteGraph, b: set) -> tuple:
    mu, mv = _split_masks(b)
    inside = outside = None
    for e1, e2 in independent_edge_pairs(g):
        if inside is None and mu >> e1.u_index & 1 and mv >> e1.v_index & 1 \
                and mu >> e2.u_index & 1 and mv >> e2.v_index & 1:
            inside = (e1, e2)
        if outside is None:
            for e, mate in ((e1, e2), (e2, e1)):
                if not mu >> e.u_index & 1 and not mv >> e.v_index & 1:
                    outside = (e, mate)
                    break
        if inside and outside:
            break
    return inside, outside


def k_sets(g: BipartiteGraph, b: Iterable[VertexRef]):
    """(K_U(B), K_V(B)); asserts their union induces a biclique."""
    b = set(b)
    if not is_buried_subgraph(g, b):
        raise PreconditionError("B is not a buried subgraph")
    witness = find_invertible_pair(g)
    if witness is not None:
        raise InvertiblePairError(witness)
    mu, mv = _split_masks(b)
    k_u = frozenset(("u", i) for i in range(g.u_count)
                    if not mu >> i & 1 and g.adj_u[i] & mv == mv and mv)
    k_v = frozenset(("v", j) for j in range(g.v_count)
                    if not mv >> j & 1 and g.adj_v[j] & mu == mu and mu)
    for _, i in k_u:
        for _, j in k_v:
            if not g.has_edge(i, j):
                raise InternalConsistencyError(
                    f"K-sets do not induce a biclique: u{i + 1}v{j + 1} missing")
    return k_u, k_v


def enumerate_buried_subgraphs(g: BipartiteGraph) -> list[frozenset]:
    """All buried vertex sets, by exhaustive subset scan; guard 16 vertices."""
    if g.n_vertices > ENUMERATION_GUARD:
        raise GuardExceededError(
            f"{g.n_vertices} vertices exceeds the subset-enumeration guard "
            f"of {ENUMERATION_GUARD}")
    indep = independent_edge_pairs(g)
    out = []
    # B needs two independent edges inside, so at least 2 vertices per side.
    for nu in range(2, g.u_count + 1):
        for us in combinations(range(g.u_count), nu):
            mu = sum(1 << i for i in us)
            for nv in range(2, g.v_count + 1):
                for vs in combinations(range(g.v_count), nv):
                    mv = sum(1 << j for j in vs)
                    if not _fast_buried(g, mu, mv, indep):
                        continue
                    b = frozenset([("u", i) for i in us]
                                  + [("v", j) for j in vs])
                    if violated_buried_condition(g, b) is None:
                        out.append(b)
    out.sort(key=sorted)
    return out


def _fast_buried(g: BipartiteGraph, mu: int, mv: int, indep) -> bool:
    """Bitmask evaluation of conditions (a)-(d) for the subset scan."""
    if not any(mu >> e1.u_index & 1 and mv >> e1.v_index & 1
               and mu >> e2.u_index & 1 and mv >> e2.v_index & 1
               for e1, e2 in indep):
        return False
    if not any(not mu >> e.u_index & 1 and not mv >> e.v_index & 1
               for pair in indep for e in pair):
        return False
    for i in range(g.u_count):
        hit = g.adj_u[i] & mv
        if mu >> i & 1:
            if hit == 0 or hit == mv:
                return False
        elif hit and hit != mv:
            return False
    for j in range(g.v_count):
        hit = g.adj_v[j] & mu
        if mv >> j & 1:
            if hit == 0 or hit == mu:
                return False
        elif hit and hit != mu:
            return False
    return True


def find_buried_subgraph(g: BipartiteGraph) -> Optional[BuriedSubgraph]:
    """Constructive extraction from a normalized weak ordering.

    Returns None when G+ has at most two non-trivial components.  Otherwise
    picks the lexicographically smallest independent-edge anchor, walks the
    non-anchor component pairs in canonical order, forms the closed-interval
    vertex set of each, and returns the first one verified buried.
    """
    twins = find_twins(g)
    if twins:
        raise TwinsPresentError(twins[0])
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    aux = build_g_plus(g)
    witness = find_invertible_pair(g, aux)
    if witness is not None:
        raise InvertiblePairError(witness)
    groups = aux.component_pairs()
    if len(groups) <= 1:
        return None
    rep = construct_normalized_representation(g)
    wo = weak_ordering_from_representation(g, rep)
    pos_u = {i: k for k, i in enumerate(wo.order_u)}
    pos_v = {j: k for k, j in enumerate(wo.order_v)}
    indep = independent_edge_pairs(g)
    candidates = {e for pair in indep for e in pair}
    anchor = min(candidates, key=lambda e: (pos_u[e.u_index], pos_v[e.v_index]))
    # the anchor edge is not itself a G+ vertex; its component pair is read
    # off the pairs (u_alpha, v_beta) over witnessing independent mates
    anchor_groups = set()
    for e1, e2 in indep:
        mate = e2 if e1 is anchor else e1 if e2 is anchor else None
        if mate is None:
            continue
        c = aux.component_of((anchor.u, mate.v))
        r = aux.reversed_component(c)
        anchor_groups.add((min(c, r), max(c, r)))
    for group in groups:
        if group in anchor_groups:
            continue
        members = aux.components[group[0]] + aux.components[group[1]]
        us = {idx for pair in members for side, idx in pair if side == "u"}
        vs = {idx for pair in members for side, idx in pair if side == "v"}
        lo_u, hi_u = min(pos_u[i] for i in us), max(pos_u[i] for i in us)
        lo_v, hi_v = min(pos_v[j] for j in vs), max(pos_v[j] for j in vs)
        b = frozenset(
            [("u", i) for i in range(g.u_count) if lo_u <= pos_u[i] <= hi_u]
            + [("v", j) for j in range(g.v_count) if lo_v <= pos_v[j] <= hi_v])
        if violated_buried_condition(g, b) is not None:
            continue
        _assert_interval_claim(g, b, wo)
        inside, outside = _witnesses(g, set(b))
        k_u, k_v = k_sets(g, b)
        return BuriedSubgraph(b, inside, outside, k_u, k_v)
    raise InternalConsistencyError(
        "no candidate component pair produced a buried subgraph")


def _assert_interval_claim(g: BipartiteGraph, b: frozenset, wo) -> None:
    """Vertices before the interval see nothing of B's opposite side;
    vertices after it see all or nothing."""
    pos_u = {i: k for k, i in enumerate(wo.order_u)}
    pos_v = {j: k for k, j in enumerate(wo.order_v)}
    mu, mv = _split_masks(b)
    b_u = [pos_u[i] for i in range(g.u_count) if mu >> i & 1]
    b_v = [pos_v[j] for j in range(g.v_count) if mv >> j & 1]
    lo_u, hi_u, lo_v, hi_v = min(b_u), max(b_u), min(b_v), max(b_v)
    for i in range(g.u_count):
        if mu >> i & 1:
            continue
        hit = g.adj_u[i] & mv
        if pos_u[i] < lo_u and hit:
            raise InternalConsistencyError(
                "vertex before the interval is adjacent into B")
        if pos_u[i] > hi_u and hit not in (0, mv):
            raise InternalConsistencyError(
                "vertex after the interval sees a proper part of B")
    for j in range(g.v_count):
        if mv >> j & 1:
            continue
        hit = g.adj_v[j] & mu
        if pos_v[j] < lo_v and hit:
            raise InternalConsistencyError(
                "vertex before the interval is adjacent into B")
        if pos_v[j] > hi_v and hit not in (0, mu):
            raise InternalConsistencyError(
                "vertex after the interval sees a proper part of B")


def is_simplicial_edge(g: BipartiteGraph, e: EdgeRef) -> bool:
    """The endpoints' neighborhoods together induce a biclique."""
    if g._edge_index.get((e.u_index, e.v_index)) is None:
        raise PreconditionError("edge is not in the graph")
    for i in g.v_neighbors(e.v_index):
        for j in g.u_neighbors(e.u_index):
            if not g.has_edge(i, j):
                return False
    return True


def substitute_buried(g: BipartiteGraph, b: Iterable[VertexRef],
                      keep: EdgeRef) -> BipartiteGraph:
    """Replace the buried set B by the single kept edge: G - (B \\ {u, v}).

    Asserts the kept edge is simplicial in the result.
    """
    b = set(b)
    if violated_buried_condition(g, b) is not None:
        raise PreconditionError("B is not a buried subgraph")
    if keep.u not in b or keep.v not in b:
        raise PreconditionError("kept edge must lie inside B")
    if not g.has_edge(keep.u_index, keep.v_index):
        raise PreconditionError("kept edge is not an edge of G")
    drop = b - {keep.u, keep.v}
    keep_u = [i for i in range(g.u_count) if ("u", i) not in drop]
    keep_v = [j for j in range(g.v_count) if ("v", j) not in drop]
    new_u = {i: k for k, i in enumerate(keep_u)}
    new_v = {j: k for k, j in enumerate(keep_v)}
    edges = [(new_u[e.u_index], new_v[e.v_index]) for e in g.edges
             if e.u_index in new_u and e.v_index in new_v]
    g2 = BipartiteGraph(len(keep_u), len(keep_v), edges,
                        [g.u_labels[i] for i in keep_u],
                        [g.v_labels[j] for j in keep_v])
    kept = g2.edge(new_u[keep.u_index], new_v[keep.v_index])
    if not is_simplicial_edge(g2, kept):
        raise InternalConsistencyError(
            "kept edge is not simplicial after substitution")
    return g2
