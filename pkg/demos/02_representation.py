"""Constructing a normalized representation.

The builder orients the independence graph I(G) transitively, assembles the
forced order D together with the orientation-induced pairs D(F), and reads
both linear orders off the two acyclic tournaments.  The result always
passes realizes and is_normalized; here we also derive the side-wise
normalized weak ordering.
"""

from tdorg import (construct_normalized_representation, is_normalized,
                   realizes, reverse_representation,
                   serialize_representation,
                   weak_ordering_from_representation)
from tdorg.catalog import fan6

g = fan6()
rep = construct_normalized_representation(g)
print("normalized representation:")
print(serialize_representation(rep))
print("realizes:", realizes(g, rep))
print("is_normalized:", is_normalized(g, rep))

rev = reverse_representation(rep)
print("reversal is also normalized:", is_normalized(g, rev))

wo = weak_ordering_from_representation(g, rep)
print("weak ordering <U:", " ".join(f"u{i + 1}" for i in wo.order_u))
print("weak ordering <V:", " ".join(f"v{j + 1}" for j in wo.order_v))
