"""Auxiliary structures: the pair graphs G+ and G*, the independence graph
I(G) on edges, implication classes, and transitive orientations.

A "pair" is an ordered cross pair (a, b) of non-adjacent vertices on
opposite sides.  Pairs are kept in the canonical order sorted by
(side, index, side, index).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (GuardExceededError, InternalConsistencyError,
                     NotComparabilityError)
from .graph import BipartiteGraph, EdgeRef, VertexRef, are_independent_edges

PAIR_GUARD = 2_000_000
ORIENTATION_ENUM_GUARD = 20

Pair = tuple  # (VertexRef, VertexRef)


def reverse_pair(pair: Pair) -> Pair:
    a, b = pair
    return (b, a)


def _nonedge_pairs(g: BipartiteGraph) -> list[Pair]:
    pairs = []
    for i in range(g.u_count):
        for j in range(g.v_count):
            if not g.has_edge(i, j):
                pairs.append((("u", i), ("v", j)))
                pairs.append((("v", j), ("u", i)))
    pairs.sort()
    return pairs


class AuxGraph:
    """The graph G+ on ordered non-adjacent cross pairs.

    (a, b) ~ (c, d) iff ac and bd are both edges of G.  Components are
    numbered canonically by their smallest member pair.
    """

    def __init__(self, g: BipartiteGraph):
        if 2 * g.u_count * g.v_count > PAIR_GUARD:
            raise GuardExceededError(
                f"pair set would exceed the {PAIR_GUARD}-pair guard")
        self.graph = g
        self.pairs: tuple[Pair, ...] = tuple(_nonedge_pairs(g))
        self.pair_index = {p: k for k, p in enumerate(self.pairs)}
        self.component_id = self._components()
        n_comp = 1 + max(self.component_id, default=-1)
        members: list[list[Pair]] = [[] for _ in range(n_comp)]
        for p, cid in zip(self.pairs, self.component_id):
            members[cid].append(p)
        self.components: tuple[tuple[Pair, ...], ...] = tuple(
            tuple(ms) for ms in members)
        self.nontrivial: tuple[bool, ...] = tuple(
            len(ms) > 1 for ms in members)

    def neighbors(self, pair: Pair) -> list[Pair]:
        (a, b) = pair
        g = self.graph
        out = []
        for c in g.neighbors(a):
            for d in g.neighbors(b):
                if not g.adjacent(c, d):
                    out.append((c, d))
        return out

    def _components(self) -> tuple[int, ...]:
        cid = [-1] * len(self.pairs)
        next_id = 0
        for k, start in enumerate(self.pairs):
            if cid[k] >= 0:
                continue
            cid[k] = next_id
            stack = [start]
            while stack:
                p = stack.pop()
                for q in self.neighbors(p):
                    qi = self.pair_index[q]
                    if cid[qi] < 0:
                        cid[qi] = next_id
                        stack.append(q)
            next_id += 1
        return tuple(cid)

    def component_of(self, pair: Pair) -> int:
        return self.component_id[self.pair_index[pair]]

    def reversed_component(self, comp: int) -> int:
        rep = self.components[comp][0]
        return self.component_of(reverse_pair(rep))

    def nontrivial_components(self) -> list[int]:
        return [k for k, nt in enumerate(self.nontrivial) if nt]

    def component_pairs(self) -> list[tuple[int, int]]:
        """Non-trivial components grouped with their reversals.

        Each group is reported once, as (comp, reversed_comp) with
        comp the smaller id.
        """
        out = []
        for k in self.nontrivial_components():
            r = self.reversed_component(k)
            if k <= r:
                out.append((k, r))
        return out


def build_g_plus(g: BipartiteGraph) -> AuxGraph:
    return AuxGraph(g)


def find_invertible_pair(g: BipartiteGraph,
                         aux: Optional[AuxGraph] = None) -> Optional[Pair]:
    """Smallest pair (a, b) sharing a G+ component with (b, a), or None."""
    if aux is None:
        aux = build_g_plus(g)
    for p in aux.pairs:
        if aux.component_of(p) == aux.component_of(reverse_pair(p)):
            return p
    return None


def has_invertible_pair(g: BipartiteGraph) -> bool:
    return find_invertible_pair(g) is not None


def g_star_is_bipartite(g: BipartiteGraph) -> bool:
    """Two-colorability of G*: the pair graph where (a, b) ~ (b, a) and
    (a, b) ~ (c, d) whenever ad and bc are edges of G."""
    pairs = _nonedge_pairs(g)
    index = {p: k for k, p in enumerate(pairs)}

    def neighbors(pair):
        a, b = pair
        out = [reverse_pair(pair)]
        for d in g.neighbors(a):  # ad edge
            for c in g.neighbors(b):  # bc edge
                if not g.adjacent(c, d):
                    out.append((c, d))
        return out

    color = [-1] * len(pairs)
    for k in range(len(pairs)):
        if color[k] >= 0:
            continue
        color[k] = 0
        stack = [pairs[k]]
        while stack:
            p = stack.pop()
            cp = color[index[p]]
            for q in neighbors(p):
                qi = index[q]
                if color[qi] < 0:
                    color[qi] = 1 - cp
                    stack.append(q)
                elif color[qi] == cp:
                    return False
    return True


# -- independence graph and implication classes ------------------------------

class IndependenceGraph:
    """I(G): vertices are the edges of G, adjacency is edge independence.

    Implication classes partition the ordered adjacent pairs (by edge_id)
    under the reflexive-transitive closure of the Gamma forcing relation.
    """

    def __init__(self, g: BipartiteGraph):
        self.graph = g
        self.edge_refs: tuple[EdgeRef, ...] = g.edges
        m = len(self.edge_refs)
        adj = [set() for _ in range(m)]
        for a in range(m):
            for b in range(a + 1, m):
                if are_independent_edges(g, self.edge_refs[a], self.edge_refs[b]):
                    adj[a].add(b)
                    adj[b].add(a)
        self.adj: tuple[frozenset, ...] = tuple(frozenset(s) for s in adj)
        self.implication_classes: tuple[tuple[tuple[int, int], ...], ...] = \
            tuple(_implication_classes(m, self.adj))
        self._class_of = {}
        for ci, cls in enumerate(self.implication_classes):
            for pair in cls:
                self._class_of[pair] = ci

    @property
    def n_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def class_of(self, a: int, b: int) -> int:
        return self._class_of[(a, b)]

    def reversal_class(self, ci: int) -> int:
        a, b = self.implication_classes[ci][0]
        return self._class_of[(b, a)]

    def class_pairs(self) -> list[tuple[int, int]]:
        """Implication classes grouped with their reversals, reported once."""
        out = []
        for ci in range(len(self.implication_classes)):
            ri = self.reversal_class(ci)
            if ci <= ri:
                out.append((ci, ri))
        return out


def _implication_classes(m: int, adj) -> list[tuple[tuple[int, int], ...]]:
    """Gamma* classes of the ordered adjacent pairs of a graph on 0..m-1.

    (a, b) Gamma (a, b') iff bb' is a non-edge; symmetrically in the
    shared second coordinate.
    """
    ordered = [(a, b) for a in range(m) for b in adj[a]]
    ordered.sort()
    seen = set()
    classes = []
    for seed in ordered:
        if seed in seen:
            continue
        cls = []
        stack = [seed]
        seen.add(seed)
        while stack:
            a, b = stack.pop()
            cls.append((a, b))
            for b2 in adj[a]:
                if b2 != b and b2 not in adj[b] and (a, b2) not in seen:
                    seen.add((a, b2))
                    stack.append((a, b2))
            for a2 in adj[b]:
                if a2 != a and a2 not in adj[a] and (a2, b) not in seen:
                    seen.add((a2, b))
                    stack.append((a2, b))
        cls.sort()
        classes.append(tuple(cls))
    return classes


def build_independence_graph(g: BipartiteGraph) -> IndependenceGraph:
    return IndependenceGraph(g)


@dataclass(frozen=True)
class Orientation:
    """A set of arcs (a, b), one per edge of I(G); whole classes only."""

    arcs: frozenset
    class_choice: tuple[int, ...]  # chosen implication-class indices

    def contains(self, a: int, b: int) -> bool:
        return (a, b) in self.arcs


def is_transitive(ig: IndependenceGraph, arcs: frozenset) -> bool:
    """Exhaustive triple check: a->b->c requires arc a->c (hence edge ac)."""
    succ: dict[int, set[int]] = {}
    for a, b in arcs:
        succ.setdefault(a, set()).add(b)
    for a, outs in succ.items():
        for b in outs:
            for c in succ.get(b, ()):
                if c not in outs:
                    return False
    return True


def transitive_orientation(ig: IndependenceGraph) -> Orientation:
    """Canonical transitive orientation via implication-class elimination.

    Repeatedly orient the smallest unoriented edge low->high and absorb
    the implication class it forces within the residual graph.  The
    result is verified transitive exhaustively.
    """
    m = len(ig.edge_refs)
    remaining = {frozenset((a, b)) for a in range(m) for b in ig.adj[a] if a < b}
    residual = [set(s) for s in ig.adj]
    arcs = set()
    while remaining:
        a, b = min(tuple(sorted(e)) for e in remaining)
        stack = [(a, b)]
        cls = set()
        while stack:
            x, y = stack.pop()
            if (x, y) in cls:
                continue
            cls.add((x, y))
            for y2 in residual[x]:
                if y2 != y and y2 not in residual[y]:
                    stack.append((x, y2))
            for x2 in residual[y]:
                if x2 != x and x2 not in residual[x]:
                    stack.append((x2, y))
        for x, y in cls:
            if (y, x) in cls:
                raise NotComparabilityError(
                    "implication class equals its own reversal")
            arcs.add((x, y))
            remaining.discard(frozenset((x, y)))
            residual[x].discard(y)
            residual[y].discard(x)
    arcs_f = frozenset(arcs)
    if not is_transitive(ig, arcs_f):
        raise NotComparabilityError("elimination produced a non-transitive "
                                    "orientation")
    choice = tuple(sorted({ig.class_of(a, b) for a, b in arcs_f}))
    orient = Orientation(arcs_f, choice)
    _check_whole_classes(ig, orient)
    return orient


def _check_whole_classes(ig: IndependenceGraph, orient: Orientation) -> None:
    for ci in orient.class_choice:
        for a, b in ig.implication_classes[ci]:
            if (a, b) not in orient.arcs:
                raise InternalConsistencyError(
                    "orientation splits an implication class")


def enumerate_transitive_orientations(ig: IndependenceGraph) -> list[Orientation]:
    """All transitive orientations, by per-class-pair sign choices.

    Every transitive orientation contains each implication class or its
    reversal entirely, so trying all 2^k sign vectors and filtering by the
    exhaustive transitivity check is complete.
    """
    pairs = ig.class_pairs()
    if len(pairs) > ORIENTATION_ENUM_GUARD:
        raise GuardExceededError(
            f"{len(pairs)} implication-class pairs exceed the "
            f"2^{ORIENTATION_ENUM_GUARD} enumeration guard")
    out = []
    for signs in range(1 << len(pairs)):
        choice = tuple(pairs[i][(signs >> i) & 1] for i in range(len(pairs)))
        arcs = frozenset(pair for ci in choice
                         for pair in ig.implication_classes[ci])
        if is_transitive(ig, arcs):
            out.append(Orientation(arcs, tuple(sorted(choice))))
    out.sort(key=lambda o: sorted(o.arcs))
    return out


def match_classes_to_components(g: BipartiteGraph):
    """Bijection implication classes of I(G) -> non-trivial components of G+.

    The class containing the ordered pair (u1v1, u2v2) maps to the
    component containing (u1, v2).  Returns (IndependenceGraph, AuxGraph,
    mapping dict); verifies well-definedness, bijectivity, and reversal
    equivariance.
    """
    ig = build_independence_graph(g)
    aux = build_g_plus(g)
    mapping: dict[int, int] = {}
    for ci, cls in enumerate(ig.implication_classes):
        comps = set()
        for a, b in cls:
            e1, e2 = ig.edge_refs[a], ig.edge_refs[b]
            comps.add(aux.component_of((e1.u, e2.v)))
        if len(comps) != 1:
            raise InternalConsistencyError(
                f"implication class {ci} maps to several G+ components")
        mapping[ci] = comps.pop()
    targets = sorted(mapping.values())
    if targets != sorted(set(targets)) or \
            targets != aux.nontrivial_components():
        raise InternalConsistencyError(
            "class-to-component map is not a bijection onto the "
            "non-trivial components")
    for ci in mapping:
        if mapping[ig.reversal_class(ci)] != aux.reversed_component(mapping[ci]):
            raise InternalConsistencyError(
                "class-to-component map is not reversal-equivariant")
    return ig, aux, mapping
