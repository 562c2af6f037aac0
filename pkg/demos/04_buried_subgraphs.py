"""Buried subgraphs and substitution.

A buried subgraph is a vertex set B whose outside attachments are so
uniform (conditions (a)-(d)) that G[B] can slide along the diagonal of any
representation, destroying uniqueness.  The sunlet fixture contains two;
replacing one by a single kept edge yields a smaller graph in which that
edge is simplicial.
"""

from tdorg import (enumerate_buried_subgraphs, find_buried_subgraph,
                   is_simplicial_edge, k_sets, serialize_graph,
                   substitute_buried, vertex_token)
from tdorg.catalog import sunlet10

g = sunlet10()

print("all buried vertex sets:")
for b in enumerate_buried_subgraphs(g):
    toks = " ".join(sorted(vertex_token(r) for r in b))
    ku, kv = k_sets(g, b)
    print(f"  {{{toks}}}  K_U={sorted(map(vertex_token, ku))} "
          f"K_V={sorted(map(vertex_token, kv))}")

found = find_buried_subgraph(g)
print("constructively extracted:",
      sorted(vertex_token(r) for r in found.vertices))

b1 = [("u", 0), ("v", 0), ("u", 1), ("v", 1), ("u", 2), ("v", 2)]
g2 = substitute_buried(g, b1, g.edge(0, 0))
print("after substituting B1 by the edge u1v1:")
print(serialize_graph(g2))
print("kept edge simplicial:", is_simplicial_edge(g2, g2.edge(0, 0)))
