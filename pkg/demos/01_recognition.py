"""Recognition walkthrough.

A bipartite graph is a two-directional orthogonal ray graph (2DORG) exactly
when its pair graph G+ contains no invertible pair, i.e. no ordered
non-adjacent pair (a, b) sharing a component with its reversal (b, a).
This script runs both recognition routes on a yes-instance and the smallest
no-instance, the six-cycle.
"""

from tdorg import (build_g_plus, find_invertible_pair, g_star_is_bipartite,
                   is_2dorg, serialize_graph, vertex_token)
from tdorg.catalog import cycle6, fan6


def describe(name, g):
    print(f"== {name} ==")
    print(serialize_graph(g))
    print("is_2dorg:", is_2dorg(g))
    witness = find_invertible_pair(g)
    if witness is not None:
        a, b = witness
        print(f"invertible pair: ({vertex_token(a)}, {vertex_token(b)})")
    print("G* bipartite:", g_star_is_bipartite(g))
    aux = build_g_plus(g)
    print("non-trivial G+ components:", len(aux.nontrivial_components()))
    print()


describe("fan (yes-instance)", fan6())
describe("six-cycle (no-instance)", cycle6())
