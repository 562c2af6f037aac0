"""Brute-force ground truth: exhaustive enumeration of normalized
representations and direct verification of every theorem-level equivalence.

The enumerators here never call the constructive representation builder;
they evaluate the defining conditions directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .auxgraphs import (build_g_plus, enumerate_transitive_orientations,
                        find_invertible_pair, g_star_is_bipartite,
                        match_classes_to_components)
from .buried import ENUMERATION_GUARD, enumerate_buried_subgraphs, k_sets
from .errors import GuardExceededError, InternalConsistencyError
from .graph import (BipartiteGraph, NeighborhoodRelation,
                    CHORDAL_BIPARTITE_GUARD, connectivity, find_twins,
                    independent_edge_pairs, is_chain_graph,
                    is_chordal_bipartite, neighborhood_relation)
from .representation import (Representation, is_normalized, realizes,
                             reverse_representation)

NAIVE_GUARD = 8
PRUNED_GUARD = 14


def brute_force_normalized_representations(
        g: BipartiteGraph, method: str = "auto") -> list[Representation]:
    """All normalized representations, canonically sorted.

    ``naive`` scans all pairs of vertex permutations (guard 8 vertices);
    ``pruned`` backtracks over linear extensions of the definitionally
    forced pair order (guard 14); ``auto`` picks naive up to 6 vertices
    and pruned beyond.
    """
    n = g.n_vertices
    if method == "auto":
        method = "naive" if n <= 6 else "pruned"
    if method == "naive":
        if n > NAIVE_GUARD:
            raise GuardExceededError(
                f"{n} vertices exceeds the naive-enumeration guard of "
                f"{NAIVE_GUARD}")
        reps = _naive_enumeration(g)
    elif method == "pruned":
        if n > PRUNED_GUARD:
            raise GuardExceededError(
                f"{n} vertices exceeds the pruned-enumeration guard of "
                f"{PRUNED_GUARD}")
        reps = _pruned_enumeration(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(set(reps), key=lambda r: (r.order_x, r.order_y))


def _naive_enumeration(g: BipartiteGraph) -> list[Representation]:
    """Scan all x-orders; for each, scan every y-order satisfying the
    adjacency biconditional (all others fail realizes by definition)."""
    verts = g.vertices()
    n = len(verts)
    cross = [(a, g.u_count + b, g.has_edge(a, b))
             for a in range(g.u_count) for b in range(g.v_count)]
    pos = [0] * n
    out = []
    for px_order in permutations(range(n)):
        for k, w in enumerate(px_order):
            pos[w] = k
        if any(edge and pos[iu] > pos[iv] for iu, iv, edge in cross):
            continue
        # required y-arcs: u before v for edges, v before u for non-edges
        # that u precedes in x; remaining pairs are free
        succ = [[] for _ in range(n)]
        indeg = [0] * n
        for iu, iv, edge in cross:
            if edge:
                succ[iu].append(iv)
                indeg[iv] += 1
            elif pos[iu] < pos[iv]:
                succ[iv].append(iu)
                indeg[iu] += 1
        x_refs = tuple(verts[w] for w in px_order)
        for py_order in _linear_extensions(n, succ, indeg):
            rep = Representation(x_refs, tuple(verts[w] for w in py_order))
            if is_normalized(g, rep):
                out.append(rep)
    return out


def _linear_extensions(n: int, succ, indeg):
    order: list[int] = []
    indeg = list(indeg)

    def extend():
        if len(order) == n:
            yield tuple(order)
            return
        for w in range(n):
            if indeg[w] == 0:
                indeg[w] = -1
                order.append(w)
                for nxt in succ[w]:
                    indeg[nxt] -= 1
                yield from extend()
                for nxt in succ[w]:
                    indeg[nxt] += 1
                order.pop()
                indeg[w] = 0

    yield from extend()


def _definitional_constraints(g: BipartiteGraph):
    """Per-pair consequences of the defining conditions.

    Returns (forced, flips): ``forced`` directs some vertex pairs
    identically in both orders; every remaining pair must be ordered
    oppositely in the two orders (``flips``).
    """
    forced = set()
    flips = set()
    verts = g.vertices()
    for k, a in enumerate(verts):
        for b in verts[k + 1:]:
            if a[0] == b[0]:
                rel = neighborhood_relation(g, a, b)
                fwd = (NeighborhoodRelation.PROPER_SUPERSET if a[0] == "u"
                       else NeighborhoodRelation.PROPER_SUBSET)
                if rel is fwd:
                    forced.add((a, b))
                elif rel is NeighborhoodRelation.EQUAL or \
                        rel is NeighborhoodRelation.INCOMPARABLE:
                    flips.add((a, b))
                else:
                    forced.add((b, a))
            else:
                u, v = (a, b) if a[0] == "u" else (b, a)
                if g.adjacent(u, v):
                    forced.add((u, v))
                elif all(neighborhood_relation(g, v, ("v", j))
                         is NeighborhoodRelation.PROPER_SUBSET
                         for j in g.u_neighbors(u[1])):
                    forced.add((v, u))
                else:
                    flips.add((a, b))
    return forced, flips


def _pruned_enumeration(g: BipartiteGraph) -> list[Representation]:
    """Backtracking enumeration over linear extensions of the forced order.

    Pairs not forced by the realization rule or the normalization
    biconditionals must be ordered oppositely by the two orders, so each
    candidate x-order determines at most one y-order.  Every candidate is
    finally checked against the raw definitions.
    """
    verts = g.vertices()
    forced, flips = _definitional_constraints(g)
    succ: dict = {ref: [] for ref in verts}
    indeg = {ref: 0 for ref in verts}
    for a, b in forced:
        succ[a].append(b)
        indeg[b] += 1
    out = []

    def extend(prefix, indeg):
        if len(prefix) == len(verts):
            _try_candidate(g, tuple(prefix), forced, flips, out)
            return
        for ref in verts:
            if indeg[ref] == 0 and ref not in prefix_set:
                prefix.append(ref)
                prefix_set.add(ref)
                for nxt in succ[ref]:
                    indeg[nxt] -= 1
                extend(prefix, indeg)
                for nxt in succ[ref]:
                    indeg[nxt] += 1
                prefix_set.discard(ref)
                prefix.pop()

    prefix_set: set = set()
    extend([], dict(indeg))
    return out


def _try_candidate(g, order_x, forced, flips, out) -> None:
    px = {ref: k for k, ref in enumerate(order_x)}
    rel = set(forced)
    for a, b in flips:
        rel.add((b, a) if px[a] < px[b] else (a, b))
    outdeg = {ref: 0 for ref in order_x}
    for a, _ in rel:
        outdeg[a] += 1
    if sorted(outdeg.values()) != list(range(len(order_x))):
        return  # y-order tournament is cyclic
    order_y = tuple(sorted(order_x, key=lambda r: -outdeg[r]))
    rep = Representation(order_x, order_y)
    if realizes(g, rep) and is_normalized(g, rep):
        out.append(rep)


# -- theorem verification ------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    name: str
    passed: Optional[bool]  # None means not applicable / skipped
    detail: str = ""


@dataclass(frozen=True)
class OracleReport:
    all_normalized_representations: Optional[tuple]
    count: Optional[int]
    all_buried_subgraphs: Optional[tuple]
    verdicts: tuple

    @property
    def all_passed(self) -> bool:
        return all(v.passed is not False for v in self.verdicts)


def _interleaving_ok(g, rep, e1, e2) -> bool:
    px, py = rep.pos_x(), rep.pos_y()
    equiv = [px[e1.u] < px[e2.v], py[e2.v] < py[e1.u],
             py[e2.u] < py[e1.v], px[e1.v] < px[e2.u]]
    if len(set(equiv)) != 1:
        return False
    pat1 = (px[e1.u] < px[e1.v] < px[e2.u] < px[e2.v]
            and py[e2.u] < py[e2.v] < py[e1.u] < py[e1.v])
    pat2 = (px[e2.u] < px[e2.v] < px[e1.u] < px[e1.v]
            and py[e1.u] < py[e1.v] < py[e2.u] < py[e2.v])
    return pat1 != pat2 and (pat1 or pat2)


def verify_theorems(g: BipartiteGraph) -> OracleReport:
    """Evaluate every theorem-level equivalence against brute-force data.

    Failures are recorded as verdicts, not raised.
    """
    verdicts = []
    witness = find_invertible_pair(g)
    star = g_star_is_bipartite(g)
    verdicts.append(Verdict(
        "recognition-routes-agree", star == (witness is None),
        f"invertible pair {witness}, G* bipartite {star}"))
    if witness is not None:
        return OracleReport(None, None, None, tuple(verdicts))

    if g.n_vertices <= CHORDAL_BIPARTITE_GUARD:
        verdicts.append(Verdict("chordal-bipartite", is_chordal_bipartite(g)))

    if find_twins(g):
        verdicts.append(Verdict("twin-free-theorems", None,
                                "skipped: graph has twins"))
        return OracleReport(None, None, None, tuple(verdicts))

    reps = tuple(brute_force_normalized_representations(g))
    count = len(reps)

    rev_closed = all(reverse_representation(r) in set(reps) for r in reps)
    verdicts.append(Verdict("reversal-closure", rev_closed))

    indep = independent_edge_pairs(g)
    inter = all(_interleaving_ok(g, r, e1, e2)
                for r in reps for e1, e2 in indep)
    verdicts.append(Verdict("independent-edge-interleaving", inter))

    try:
        ig, aux, _ = match_classes_to_components(g)
        orient_count = len(enumerate_transitive_orientations(ig))
        verdicts.append(Verdict(
            "representations-match-orientations", count == orient_count,
            f"{count} representations vs {orient_count} orientations"))
        verdicts.append(Verdict(
            "classes-biject-components",
            len(ig.implication_classes) == len(aux.nontrivial_components())))
    except InternalConsistencyError as exc:
        verdicts.append(Verdict("classes-biject-components", False, str(exc)))
        aux = build_g_plus(g)

    verdicts.append(Verdict(
        "chain-graph-theorem", (count == 1) == is_chain_graph(g),
        f"count {count}, chain {is_chain_graph(g)}"))

    buried = None
    if g.n_vertices <= ENUMERATION_GUARD:
        buried = tuple(enumerate_buried_subgraphs(g))
        ok = True
        detail = ""
        for b in buried:
            try:
                k_sets(g, b)
            except InternalConsistencyError as exc:
                ok, detail = False, str(exc)
                break
        verdicts.append(Verdict("k-set-biclique", ok, detail))

    comps = connectivity(g)
    n_nontrivial_aux = len(aux.nontrivial_components())
    if len(comps) == 1:
        if buried is not None:
            a = count == 2
            b = not buried
            c = n_nontrivial_aux == 2
            # A chain graph (count 1, zero non-trivial components) has no
            # buried subgraph either, so the buried condition is compared
            # through its proven form: buried iff more than 2 components.
            ok = a == c and b == (n_nontrivial_aux <= 2)
            verdicts.append(Verdict(
                "main-theorem-equivalence", ok,
                f"count==2: {a}, no buried: {b}, 2 components: {c}"))
    else:
        nontrivial = [c for c in comps if c.nontrivial]
        if len(nontrivial) >= 2:
            chain_pair = len(nontrivial) == 2 and all(
                is_chain_graph(_induced(g, c.vertices)) for c in nontrivial)
            verdicts.append(Verdict(
                "disconnected-theorem", (count == 2) == chain_pair,
                f"count {count}, two chain components: {chain_pair}"))
        else:
            # Only isolated vertices beyond one component: their positions
            # are forced, so the connected-case criterion applies instead.
            verdicts.append(Verdict(
                "disconnected-theorem", (count == 2) == (n_nontrivial_aux == 2),
                f"count {count}, {n_nontrivial_aux} non-trivial pair-graph "
                "components"))

    return OracleReport(reps, count, buried, tuple(verdicts))


def _induced(g: BipartiteGraph, verts) -> BipartiteGraph:
    from .classify import _induced as impl
    return impl(g, verts)
