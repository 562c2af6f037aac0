"""Representations as pairs of linear orders, normalization, weak orderings,
and the constructive normalized-representation builder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .auxgraphs import (Orientation, build_independence_graph,
                        find_invertible_pair, transitive_orientation)
from .errors import (InternalConsistencyError, InvertiblePairError,
                     ParseError, PreconditionError, TwinsPresentError)
from .graph import (BipartiteGraph, NeighborhoodRelation, VertexRef,
                    find_twins, neighborhood_relation, parse_vertex_token,
                    vertex_token)


@dataclass(frozen=True)
class Representation:
    """A pair of linear orders (<x, <y) on all vertices, smallest first."""

    order_x: tuple[VertexRef, ...]
    order_y: tuple[VertexRef, ...]

    def pos_x(self) -> dict:
        return {ref: k for k, ref in enumerate(self.order_x)}

    def pos_y(self) -> dict:
        return {ref: k for k, ref in enumerate(self.order_y)}


@dataclass(frozen=True)
class WeakOrdering:
    """Side-wise linear orders (<U, <V), smallest first, as vertex indices."""

    order_u: tuple[int, ...]
    order_v: tuple[int, ...]


@dataclass(frozen=True)
class ForcedOrder:
    """Directed vertex pairs forcing a representation.

    ``d`` holds the orientation-independent pairs; ``d_f`` the pairs induced
    by a transitive orientation of I(G).  ``d | d_f`` and ``d | inverse(d_f)``
    are tournaments on V(G).
    """

    d: frozenset
    d_f: frozenset

    def d_f_inverse(self) -> frozenset:
        return frozenset((b, a) for a, b in self.d_f)


def _check_cover(g: BipartiteGraph, rep: Representation) -> None:
    verts = set(g.vertices())
    for name, order in (("order_x", rep.order_x), ("order_y", rep.order_y)):
        if len(order) != len(verts) or set(order) != verts:
            raise PreconditionError(f"{name} is not a permutation of V(G)")


def realizes(g: BipartiteGraph, rep: Representation) -> bool:
    """uv is an edge iff u precedes v in both orders, for all cross pairs."""
    _check_cover(g, rep)
    px, py = rep.pos_x(), rep.pos_y()
    for i in range(g.u_count):
        u = ("u", i)
        for j in range(g.v_count):
            v = ("v", j)
            before = px[u] < px[v] and py[u] < py[v]
            if before != g.has_edge(i, j):
                return False
    return True


def find_normalization_violation(g: BipartiteGraph, rep: Representation):
    """First violated normalization condition, or None.

    Returns (condition, (a, b)) with condition in {"a", "b", "c"}; pairs are
    scanned in canonical order.  Requires that rep realizes g.
    """
    if not realizes(g, rep):
        raise PreconditionError("representation does not realize the graph")
    px, py = rep.pos_x(), rep.pos_y()
    for i1 in range(g.u_count):
        for i2 in range(g.u_count):
            if i1 == i2:
                continue
            a, b = ("u", i1), ("u", i2)
            lhs = px[a] < px[b] and py[a] < py[b]
            rhs = neighborhood_relation(g, a, b) is NeighborhoodRelation.PROPER_SUPERSET
            if lhs != rhs:
                return ("a", (a, b))
    for j1 in range(g.v_count):
        for j2 in range(g.v_count):
            if j1 == j2:
                continue
            a, b = ("v", j1), ("v", j2)
            lhs = px[a] < px[b] and py[a] < py[b]
            rhs = neighborhood_relation(g, a, b) is NeighborhoodRelation.PROPER_SUBSET
            if lhs != rhs:
                return ("b", (a, b))
    for i in range(g.u_count):
        u = ("u", i)
        for j in range(g.v_count):
            v = ("v", j)
            lhs = px[v] < px[u] and py[v] < py[u]
            rhs = all(
                neighborhood_relation(g, v, ("v", j2)) is NeighborhoodRelation.PROPER_SUBSET
                for j2 in g.u_neighbors(i))
            if lhs != rhs:
                return ("c", (u, v))
    return None


def is_normalized(g: BipartiteGraph, rep: Representation) -> bool:
    return find_normalization_violation(g, rep) is None


def reverse_representation(rep: Representation) -> Representation:
    return Representation(rep.order_y, rep.order_x)


# -- construction ------------------------------------------------------------

def forced_pairs(g: BipartiteGraph) -> frozenset:
    """The orientation-independent directed pairs D.

    (u, v) for every edge; same-side pairs by proper neighborhood
    containment; (v, u) when every neighbor of u properly dominates N(v).
    All containments are proper, so D is antisymmetric on twin-free input.
    """
    d = set()
    for e in g.edges:
        d.add((e.u, e.v))
    for i1 in range(g.u_count):
        for i2 in range(g.u_count):
            if i1 != i2 and neighborhood_relation(
                    g, ("u", i1), ("u", i2)) is NeighborhoodRelation.PROPER_SUPERSET:
                d.add((("u", i1), ("u", i2)))
    for j1 in range(g.v_count):
        for j2 in range(g.v_count):
            if j1 != j2 and neighborhood_relation(
                    g, ("v", j1), ("v", j2)) is NeighborhoodRelation.PROPER_SUBSET:
                d.add((("v", j1), ("v", j2)))
    for i in range(g.u_count):
        for j in range(g.v_count):
            if g.has_edge(i, j):
                continue
            if all(neighborhood_relation(g, ("v", j), ("v", j2))
                   is NeighborhoodRelation.PROPER_SUBSET
                   for j2 in g.u_neighbors(i)):
                d.add((("v", j), ("u", i)))
    return frozenset(d)


def build_forced_order(g: BipartiteGraph, f: Orientation) -> ForcedOrder:
    """Assemble D and D(F) and verify both unions are tournaments."""
    twins = find_twins(g)
    if twins:
        raise TwinsPresentError(twins[0])
    d = forced_pairs(g)
    edge_refs = g.edges
    d_f = set()
    for a, b in f.arcs:
        e1, e2 = edge_refs[a], edge_refs[b]
        d_f.update([(e1.u, e2.u), (e1.u, e2.v), (e1.v, e2.u), (e1.v, e2.v)])
    fo = ForcedOrder(d, frozenset(d_f))
    for name, rel in (("D ∪ D(F)", d | fo.d_f),
                      ("D ∪ D(F)^-1", d | fo.d_f_inverse())):
        _check_tournament(g, rel, name)
    return fo


def _check_tournament(g: BipartiteGraph, rel: frozenset, name: str) -> None:
    verts = g.vertices()
    for k, a in enumerate(verts):
        for b in verts[k + 1:]:
            fwd, bwd = (a, b) in rel, (b, a) in rel
            if fwd and bwd:
                raise InternalConsistencyError(
                    f"{name} directs pair ({vertex_token(a)}, "
                    f"{vertex_token(b)}) both ways")
            if not fwd and not bwd:
                raise InternalConsistencyError(
                    f"{name} leaves pair ({vertex_token(a)}, "
                    f"{vertex_token(b)}) undirected")


def _tournament_topo_order(verts, rel: frozenset):
    """Unique topological order of an acyclic tournament.

    In an acyclic tournament the out-degrees are a permutation of
    0..n-1, and sorting by descending out-degree is the unique order.
    """
    outdeg = {ref: 0 for ref in verts}
    for a, _ in rel:
        outdeg[a] += 1
    order = sorted(verts, key=lambda r: (-outdeg[r], r))
    if sorted(outdeg.values()) != list(range(len(verts))):
        raise InternalConsistencyError("tournament contains a cycle")
    return tuple(order)


def representation_from_orientation(g: BipartiteGraph,
                                    f: Orientation) -> Representation:
    """Normalized representation realizing orientation f of I(G)."""
    fo = build_forced_order(g, f)
    verts = g.vertices()
    order_x = _tournament_topo_order(verts, fo.d | fo.d_f)
    order_y = _tournament_topo_order(verts, fo.d | fo.d_f_inverse())
    rep = Representation(order_x, order_y)
    if not realizes(g, rep) or not is_normalized(g, rep):
        raise InternalConsistencyError(
            "constructed order pair is not a normalized representation")
    return rep


def construct_normalized_representation(g: BipartiteGraph) -> Representation:
    """Build a normalized representation of a twin-free 2DORG.

    The canonical transitive orientation of I(G) fixes which of the
    normalized representations is returned.
    """
    twins = find_twins(g)
    if twins:
        raise TwinsPresentError(twins[0])
    witness = find_invertible_pair(g)
    if witness is not None:
        raise InvertiblePairError(witness)
    f = transitive_orientation(build_independence_graph(g))
    return representation_from_orientation(g, f)


# -- weak orderings -----------------------------------------------------------

def weak_ordering_from_representation(g: BipartiteGraph,
                                      rep: Representation) -> WeakOrdering:
    """<U is the reverse of <y on U; <V is <x restricted to V."""
    if not is_normalized(g, rep):
        raise PreconditionError("representation is not normalized")
    order_u = tuple(idx for side, idx in reversed(rep.order_y) if side == "u")
    order_v = tuple(idx for side, idx in rep.order_x if side == "v")
    wo = WeakOrdering(order_u, order_v)
    if not is_normalized_weak_ordering(g, wo):
        raise InternalConsistencyError(
            "derived ordering is not a normalized weak ordering")
    return wo


def _check_wo_cover(g: BipartiteGraph, wo: WeakOrdering) -> None:
    if sorted(wo.order_u) != list(range(g.u_count)) or \
            sorted(wo.order_v) != list(range(g.v_count)):
        raise PreconditionError("weak ordering does not cover U and V")


def is_weak_ordering(g: BipartiteGraph, wo: WeakOrdering) -> bool:
    """u1 <U u2, v1 <V v2, u1v2 and u2v1 edges force the edge u2v2."""
    _check_wo_cover(g, wo)
    ou, ov = wo.order_u, wo.order_v
    for a in range(g.u_count):
        for b in range(a + 1, g.u_count):
            u1, u2 = ou[a], ou[b]
            for c in range(g.v_count):
                for d in range(c + 1, g.v_count):
                    v1, v2 = ov[c], ov[d]
                    if g.has_edge(u1, v2) and g.has_edge(u2, v1) \
                            and not g.has_edge(u2, v2):
                        return False
    return True


def is_normalized_weak_ordering(g: BipartiteGraph, wo: WeakOrdering) -> bool:
    """Weak ordering where proper neighborhood inclusion forces the order."""
    if not is_weak_ordering(g, wo):
        return False
    pos_u = {i: k for k, i in enumerate(wo.order_u)}
    pos_v = {j: k for k, j in enumerate(wo.order_v)}
    for i1 in range(g.u_count):
        for i2 in range(g.u_count):
            if i1 != i2 and neighborhood_relation(
                    g, ("u", i1), ("u", i2)) is NeighborhoodRelation.PROPER_SUBSET \
                    and pos_u[i1] > pos_u[i2]:
                return False
    for j1 in range(g.v_count):
        for j2 in range(g.v_count):
            if j1 != j2 and neighborhood_relation(
                    g, ("v", j1), ("v", j2)) is NeighborhoodRelation.PROPER_SUBSET \
                    and pos_v[j1] > pos_v[j2]:
                return False
    return True


# -- representation file format ------------------------------------------------

def parse_representation(text: str, g: BipartiteGraph) -> Representation:
    """Two lines ``x: tok tok ...`` and ``y: tok tok ...``."""
    orders = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line[:2] not in ("x:", "y:"):
            raise ParseError(f"expected 'x:' or 'y:' line, got {line!r}", lineno)
        axis = line[0]
        if axis in orders:
            raise ParseError(f"duplicate {axis}: line", lineno)
        orders[axis] = tuple(parse_vertex_token(t) for t in line[2:].split())
    if set(orders) != {"x", "y"}:
        raise ParseError("representation needs exactly one x: and one y: line")
    rep = Representation(orders["x"], orders["y"])
    _check_cover(g, rep)
    return rep


def serialize_representation(rep: Representation) -> str:
    return ("x: " + " ".join(vertex_token(r) for r in rep.order_x) + "\n"
            "y: " + " ".join(vertex_token(r) for r in rep.order_y) + "\n")
