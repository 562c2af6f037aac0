"""Top-level classification: 2DORG membership, unique representability,
and normalized-representation counting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .auxgraphs import (build_g_plus, build_independence_graph,
                        enumerate_transitive_orientations,
                        find_invertible_pair, g_star_is_bipartite)
from .errors import (InternalConsistencyError, InvertiblePairError,
                     TwinsPresentError)
from .graph import BipartiteGraph, connectivity, find_twins, is_chain_graph

ORACLE_CROSS_CHECK_LIMIT = 8


@dataclass(frozen=True)
class ClassificationReport:
    is_2dorg: bool
    invertible_pair: Optional[tuple]
    connected: bool
    nontrivial_gplus_components: Optional[int]
    uniquely_representable: Optional[bool]
    normalized_representation_count: Optional[int]
    buried_subgraph: Optional[frozenset]


def is_2dorg(g: BipartiteGraph) -> bool:
    """No invertible pair; cross-checked against G* bipartiteness."""
    witness = find_invertible_pair(g)
    star = g_star_is_bipartite(g)
    if star != (witness is None):
        raise InternalConsistencyError(
            "invertible-pair and G*-bipartiteness tests disagree")
    return witness is None


def _require_twin_free_2dorg(g: BipartiteGraph) -> None:
    twins = find_twins(g)
    if twins:
        raise TwinsPresentError(twins[0])
    witness = find_invertible_pair(g)
    if witness is not None:
        raise InvertiblePairError(witness)


def is_uniquely_representable(g: BipartiteGraph) -> bool:
    """Exactly two normalized representations.

    At most one non-trivial component: exactly two non-trivial G+
    components.  Two non-trivial components: both must be chain graphs.
    More: never unique.  Isolated vertices are immaterial because their
    positions are forced by the normalization conditions, so only the
    non-trivial components count.
    """
    _require_twin_free_2dorg(g)
    nontrivial = [c for c in connectivity(g) if c.nontrivial]
    if len(nontrivial) <= 1:
        aux = build_g_plus(g)
        return len(aux.nontrivial_components()) == 2
    if len(nontrivial) != 2:
        return False
    return all(is_chain_graph(_induced(g, c.vertices)) for c in nontrivial)


def _induced(g: BipartiteGraph, verts) -> BipartiteGraph:
    us = sorted(idx for side, idx in verts if side == "u")
    vs = sorted(idx for side, idx in verts if side == "v")
    new_u = {i: k for k, i in enumerate(us)}
    new_v = {j: k for k, j in enumerate(vs)}
    edges = [(new_u[e.u_index], new_v[e.v_index]) for e in g.edges
             if e.u_index in new_u and e.v_index in new_v]
    return BipartiteGraph(len(us), len(vs), edges)


def count_normalized_representations(g: BipartiteGraph) -> int:
    """Number of transitive orientations of I(G).

    Small inputs are additionally cross-checked against the brute-force
    enumeration of normalized representations.
    """
    _require_twin_free_2dorg(g)
    ig = build_independence_graph(g)
    count = len(enumerate_transitive_orientations(ig))
    if g.n_vertices <= ORACLE_CROSS_CHECK_LIMIT:
        from .oracle import brute_force_normalized_representations
        oracle_count = len(brute_force_normalized_representations(g))
        if oracle_count != count:
            raise InternalConsistencyError(
                f"orientation count {count} disagrees with brute-force "
                f"count {oracle_count}")
    return count


def classification_report(g: BipartiteGraph) -> ClassificationReport:
    witness = find_invertible_pair(g)
    two_dorg = is_2dorg(g)
    comps = connectivity(g)
    connected = len(comps) == 1
    if not two_dorg:
        return ClassificationReport(False, witness, connected,
                                    None, None, None, None)
    aux = build_g_plus(g)
    n_nontrivial = len(aux.nontrivial_components())
    twins = find_twins(g)
    if twins:
        return ClassificationReport(True, None, connected, n_nontrivial,
                                    None, None, None)
    unique = is_uniquely_representable(g)
    count = count_normalized_representations(g)
    buried = None
    if connected:
        from .buried import find_buried_subgraph
        found = find_buried_subgraph(g)
        buried = found.vertices if found else None
    return ClassificationReport(True, None, connected, n_nontrivial,
                                unique, count, buried)
