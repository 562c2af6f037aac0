"""Bipartite graph data model, file I/O, and elementary predicates.

Vertices are referred to by ``(side, index)`` pairs where ``side`` is the
string ``"u"`` or ``"v"`` and ``index`` is 0-based.  File formats use 1-based
tokens ``u1, u2, ...`` / ``v1, v2, ...``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import GuardExceededError, ParseError

VertexRef = tuple  # ("u", i) or ("v", j)

CHORDAL_BIPARTITE_GUARD = 24


def vertex_token(ref: VertexRef) -> str:
    side, idx = ref
    return f"{side}{idx + 1}"


def parse_vertex_token(tok: str) -> VertexRef:
    side = tok[:1]
    if side not in ("u", "v") or not tok[1:].isdigit() or int(tok[1:]) < 1:
        raise ParseError(f"bad vertex token {tok!r}")
    return (side, int(tok[1:]) - 1)


@dataclass(frozen=True)
class EdgeRef:
    """An edge with its rank in the canonical (u_index, v_index) ordering."""

    u_index: int
    v_index: int
    edge_id: int

    @property
    def u(self) -> VertexRef:
        return ("u", self.u_index)

    @property
    def v(self) -> VertexRef:
        return ("v", self.v_index)

    def token(self) -> str:
        return f"u{self.u_index + 1}v{self.v_index + 1}"


class BipartiteGraph:
    """Immutable bipartite graph with bipartition (U, V).

    Adjacency is stored as bitmasks per vertex (``adj_u[i]`` has bit ``j``
    set iff u_i ~ v_j) plus a canonical sorted edge list.
    """

    __slots__ = ("u_count", "v_count", "adj_u", "adj_v", "edges",
                 "_edge_index", "u_labels", "v_labels")

    def __init__(self, u_count: int, v_count: int,
                 edges: Iterable[tuple[int, int]],
                 u_labels: Optional[Sequence[str]] = None,
                 v_labels: Optional[Sequence[str]] = None):
        if u_count < 0 or v_count < 0:
            raise ValueError("vertex counts must be nonnegative")
        adj_u = [0] * u_count
        adj_v = [0] * v_count
        for i, j in edges:
            if not (0 <= i < u_count and 0 <= j < v_count):
                raise ValueError(f"edge ({i}, {j}) out of range")
            adj_u[i] |= 1 << j
            adj_v[j] |= 1 << i
        self.u_count = u_count
        self.v_count = v_count
        self.adj_u = tuple(adj_u)
        self.adj_v = tuple(adj_v)
        edge_list = []
        for i in range(u_count):
            mask = adj_u[i]
            while mask:
                j = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                edge_list.append((i, j))
        self.edges = tuple(EdgeRef(i, j, k) for k, (i, j) in enumerate(edge_list))
        self._edge_index = {(e.u_index, e.v_index): e for e in self.edges}
        self.u_labels = tuple(u_labels) if u_labels else tuple(
            f"u{i + 1}" for i in range(u_count))
        self.v_labels = tuple(v_labels) if v_labels else tuple(
            f"v{j + 1}" for j in range(v_count))
        if len(self.u_labels) != u_count or len(self.v_labels) != v_count:
            raise ValueError("label count mismatch")

    # -- basic accessors ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.u_count + self.v_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj_u[i] >> j & 1)

    def adjacent(self, a: VertexRef, b: VertexRef) -> bool:
        if a[0] == b[0]:
            return False
        if a[0] == "u":
            return self.has_edge(a[1], b[1])
        return self.has_edge(b[1], a[1])

    def edge(self, i: int, j: int) -> EdgeRef:
        return self._edge_index[(i, j)]

    def u_neighbors(self, i: int) -> tuple[int, ...]:
        return _bits(self.adj_u[i])

    def v_neighbors(self, j: int) -> tuple[int, ...]:
        return _bits(self.adj_v[j])

    def neighbors(self, ref: VertexRef) -> tuple[VertexRef, ...]:
        side, idx = ref
        if side == "u":
            return tuple(("v", j) for j in self.u_neighbors(idx))
        return tuple(("u", i) for i in self.v_neighbors(idx))

    def neighbor_mask(self, ref: VertexRef) -> int:
        side, idx = ref
        return self.adj_u[idx] if side == "u" else self.adj_v[idx]

    def vertices(self) -> tuple[VertexRef, ...]:
        return tuple([("u", i) for i in range(self.u_count)]
                     + [("v", j) for j in range(self.v_count)])

    def label(self, ref: VertexRef) -> str:
        side, idx = ref
        return self.u_labels[idx] if side == "u" else self.v_labels[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.u_count == other.u_count
                and self.v_count == other.v_count
                and self.adj_u == other.adj_u
                and self.u_labels == other.u_labels
                and self.v_labels == other.v_labels)

    def __hash__(self) -> int:
        return hash((self.u_count, self.v_count, self.adj_u))

    def __repr__(self) -> str:
        return (f"BipartiteGraph(u_count={self.u_count}, "
                f"v_count={self.v_count}, m={self.edge_count})")


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


# -- file format -----------------------------------------------------------

def parse_graph(text: str) -> BipartiteGraph:
    """Parse the ``p tdorg`` line format.

    Grammar: ``c`` comment lines; exactly one ``p tdorg <nU> <nV> <m>``
    header before any edge line; ``e <i> <j>`` edge lines with 1-based
    indices; optional ``n u<i> <label>`` / ``n v<j> <label>`` lines.
    Duplicate edge lines are deduplicated with a counted warning.
    """
    u_count = v_count = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    u_labels: dict[int, str] = {}
    v_labels: dict[int, str] = {}
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if u_count is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 5 or parts[1] != "tdorg":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                u_count, v_count, m = (int(x) for x in parts[2:5])
            except ValueError:
                raise ParseError(f"non-integer header field in {line!r}", lineno)
            if u_count < 0 or v_count < 0 or m < 0:
                raise ParseError("negative count in header", lineno)
        elif parts[0] == "e":
            if u_count is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer edge endpoint in {line!r}", lineno)
            if not 1 <= i <= u_count:
                raise ParseError(f"u-index {i} out of range 1..{u_count}", lineno)
            if not 1 <= j <= v_count:
                raise ParseError(f"v-index {j} out of range 1..{v_count}", lineno)
            edge_lines += 1
            if (i - 1, j - 1) in seen:
                duplicates += 1
            else:
                seen.add((i - 1, j - 1))
                edges.append((i - 1, j - 1))
        elif parts[0] == "n":
            if u_count is None:
                raise ParseError("name line before problem line", lineno)
            if len(parts) < 3:
                raise ParseError(f"malformed name line {line!r}", lineno)
            ref = parse_vertex_token(parts[1])
            label = " ".join(parts[2:])
            side, idx = ref
            if side == "u":
                if idx >= u_count:
                    raise ParseError(f"u-index out of range in {line!r}", lineno)
                u_labels[idx] = label
            else:
                if idx >= v_count:
                    raise ParseError(f"v-index out of range in {line!r}", lineno)
                v_labels[idx] = label
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if u_count is None:
        raise ParseError("missing problem line")
    if edge_lines != m:
        raise ParseError(f"header declares {m} edges but {edge_lines} edge lines found")
    if duplicates:
        warnings.warn(f"{duplicates} duplicate edge line(s) ignored", stacklevel=2)
    ul = [f"u{i + 1}" for i in range(u_count)]
    vl = [f"v{j + 1}" for j in range(v_count)]
    for idx, lab in u_labels.items():
        ul[idx] = lab
    for idx, lab in v_labels.items():
        vl[idx] = lab
    return BipartiteGraph(u_count, v_count, edges, ul, vl)


def serialize_graph(g: BipartiteGraph) -> str:
    """Emit the ``p tdorg`` document; parse_graph round-trips it."""
    lines = [f"p tdorg {g.u_count} {g.v_count} {g.edge_count}"]
    lines.extend(f"e {e.u_index + 1} {e.v_index + 1}" for e in g.edges)
    for i, lab in enumerate(g.u_labels):
        if lab != f"u{i + 1}":
            lines.append(f"n u{i + 1} {lab}")
    for j, lab in enumerate(g.v_labels):
        if lab != f"v{j + 1}":
            lines.append(f"n v{j + 1} {lab}")
    return "\n".join(lines) + "\n"


# -- elementary predicates ---------------------------------------------------

class NeighborhoodRelation(Enum):
    PROPER_SUBSET = "proper-subset"
    PROPER_SUPERSET = "proper-superset"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def neighborhood_relation(g: BipartiteGraph, a: VertexRef,
                          b: VertexRef) -> NeighborhoodRelation:
    """Classify N(a) against N(b) as sets; a and b must share a side."""
    if a[0] != b[0]:
        raise ValueError(f"{a} and {b} are on different sides")
    na, nb = g.neighbor_mask(a), g.neighbor_mask(b)
    if na == nb:
        return NeighborhoodRelation.EQUAL
    if na & nb == na:
        return NeighborhoodRelation.PROPER_SUBSET
    if na & nb == nb:
        return NeighborhoodRelation.PROPER_SUPERSET
    return NeighborhoodRelation.INCOMPARABLE


def find_twins(g: BipartiteGraph) -> list[tuple[VertexRef, VertexRef]]:
    """All same-side vertex pairs with equal neighborhoods, canonical order."""
    twins = []
    for side, count, masks in (("u", g.u_count, g.adj_u),
                               ("v", g.v_count, g.adj_v)):
        for i in range(count):
            for j in range(i + 1, count):
                if masks[i] == masks[j]:
                    twins.append(((side, i), (side, j)))
    return twins


def collapse_twins(g: BipartiteGraph):
    """Return (twin-free graph, mapping old ref -> new ref).

    Each twin class keeps its lowest-index member.
    """
    u_rep = _twin_representatives(g.adj_u)
    v_rep = _twin_representatives(g.adj_v)
    u_keep = sorted(set(u_rep))
    v_keep = sorted(set(v_rep))
    u_new = {old: new for new, old in enumerate(u_keep)}
    v_new = {old: new for new, old in enumerate(v_keep)}
    mapping = {}
    for i in range(g.u_count):
        mapping[("u", i)] = ("u", u_new[u_rep[i]])
    for j in range(g.v_count):
        mapping[("v", j)] = ("v", v_new[v_rep[j]])
    edges = sorted({(u_new[u_rep[e.u_index]], v_new[v_rep[e.v_index]])
                    for e in g.edges})
    g2 = BipartiteGraph(len(u_keep), len(v_keep), edges,
                        [g.u_labels[i] for i in u_keep],
                        [g.v_labels[j] for j in v_keep])
    return g2, mapping


def _twin_representatives(masks) -> list[int]:
    first: dict[int, int] = {}
    reps = []
    for i, mask in enumerate(masks):
        reps.append(first.setdefault(mask, i))
    return reps


def are_independent_edges(g: BipartiteGraph, e1: EdgeRef, e2: EdgeRef) -> bool:
    """True iff the edges are disjoint and both cross pairs are non-edges."""
    if (e1.u_index, e1.v_index) == (e2.u_index, e2.v_index):
        raise ValueError("edges must be distinct")
    if e1.u_index == e2.u_index or e1.v_index == e2.v_index:
        return False
    return (not g.has_edge(e1.u_index, e2.v_index)
            and not g.has_edge(e2.u_index, e1.v_index))


def independent_edge_pairs(g: BipartiteGraph) -> list[tuple[EdgeRef, EdgeRef]]:
    """All unordered independent edge pairs, by (edge_id, edge_id)."""
    out = []
    edges = g.edges
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if are_independent_edges(g, edges[a], edges[b]):
                out.append((edges[a], edges[b]))
    return out


def is_chain_graph(g: BipartiteGraph) -> bool:
    """No independent edge pair; equivalently u-neighborhoods form a chain.

    Both characterizations are computed and must agree.
    """
    by_pairs = not independent_edge_pairs(g)
    masks = sorted(g.adj_u, key=lambda m: bin(m).count("1"))
    by_chain = all(masks[i] & masks[i + 1] == masks[i]
                   for i in range(len(masks) - 1))
    if by_pairs != by_chain:  # pragma: no cover - theorem-backed
        raise AssertionError("chain-graph characterizations disagree")
    return by_pairs


def is_chordal_bipartite(g: BipartiteGraph) -> bool:
    """Exhaustive search for an induced cycle of length >= 6.

    Desk-scale checker guarded at 24 vertices.
    """
    if g.n_vertices > CHORDAL_BIPARTITE_GUARD:
        raise GuardExceededError(
            f"{g.n_vertices} vertices exceeds the guard of "
            f"{CHORDAL_BIPARTITE_GUARD} for induced-cycle search")
    verts = g.vertices()
    order = {ref: k for k, ref in enumerate(verts)}
    adj = {ref: set(g.neighbors(ref)) for ref in verts}

    def extend(start, path, path_set):
        # path is an induced path from start whose interior avoids N(start)
        last = path[-1]
        for nxt in adj[last]:
            if nxt in path_set or order[nxt] < order[start]:
                continue
            # nxt may touch the path only at `last` (start handled below)
            if any(w in adj[nxt] for w in path[1:-1]):
                continue
            if start in adj[nxt]:
                if len(path) + 1 >= 6:
                    return True
                continue  # would chord any longer cycle through here
            if extend(start, path + [nxt], path_set | {nxt}):
                return True
        return False

    for start in verts:  # smallest vertex on the cycle
        for first in adj[start]:
            if order[first] < order[start]:
                continue
            if extend(start, [start, first], {start, first}):
                return False
    return True


@dataclass(frozen=True)
class Component:
    """A connected component of G, tagged non-trivial iff it has an edge."""

    vertices: tuple[VertexRef, ...]
    nontrivial: bool


def connectivity(g: BipartiteGraph) -> list[Component]:
    """Connected components in canonical order of their smallest vertex."""
    seen: set[VertexRef] = set()
    comps = []
    for start in g.vertices():
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        comp = []
        while queue:
            ref = queue.pop()
            comp.append(ref)
            for nbr in g.neighbors(ref):
                if nbr not in seen:
                    seen.add(nbr)
                    queue.append(nbr)
        comp.sort()
        comps.append(Component(tuple(comp), nontrivial=len(comp) > 1))
    return comps


def is_connected(g: BipartiteGraph) -> bool:
    return len(connectivity(g)) == 1
