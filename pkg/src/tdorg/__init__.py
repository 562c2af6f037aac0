"""Two-directional orthogonal ray graphs (2DORGs).

Recognition, normalized-representation construction, unique-representability
classification, and buried-subgraph detection and substitution, with
brute-force oracles for validation on small instances.
"""

from .auxgraphs import (AuxGraph, IndependenceGraph, Orientation,
                        build_g_plus, build_independence_graph,
                        enumerate_transitive_orientations,
                        find_invertible_pair, g_star_is_bipartite,
                        has_invertible_pair, match_classes_to_components,
                        transitive_orientation)
from .buried import (BuriedSubgraph, enumerate_buried_subgraphs,
                     find_buried_subgraph, is_buried_subgraph,
                     is_simplicial_edge, k_sets, substitute_buried,
                     violated_buried_condition)
from .classify import (ClassificationReport, classification_report,
                       count_normalized_representations, is_2dorg,
                       is_uniquely_representable)
from .errors import (GuardExceededError, InternalConsistencyError,
                     InvertiblePairError, NotComparabilityError, ParseError,
                     PreconditionError, TdorgError, TwinsPresentError)
from .generators import (all_twin_free_chain_graphs, chain_graph_from_sizes,
                         disjoint_union, random_2dorg, random_bipartite)
from .graph import (BipartiteGraph, EdgeRef, NeighborhoodRelation, VertexRef,
                    collapse_twins, connectivity, find_twins,
                    independent_edge_pairs, is_chain_graph,
                    is_chordal_bipartite, is_connected, neighborhood_relation,
                    parse_graph, parse_vertex_token, serialize_graph,
                    vertex_token)
from .oracle import (OracleReport, Verdict,
                     brute_force_normalized_representations, verify_theorems)
from .render import render_svg
from .representation import (ForcedOrder, Representation, WeakOrdering,
                             construct_normalized_representation,
                             find_normalization_violation, forced_pairs,
                             is_normalized, is_normalized_weak_ordering,
                             is_weak_ordering, parse_representation, realizes,
                             representation_from_orientation,
                             reverse_representation, serialize_representation,
                             weak_ordering_from_representation)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
