"""Unique representability.

A twin-free 2DORG is uniquely representable when it has exactly two
normalized representations (a representation and its reversal).  The count
equals the number of transitive orientations of the independence graph
I(G), which in turn matches the non-trivial components of the pair graph
G+.  The brute-force oracle confirms all of this by direct enumeration.
"""

from tdorg import (classification_report, count_normalized_representations,
                   is_uniquely_representable, serialize_representation)
from tdorg.catalog import fan6, sunlet10, two_disjoint_edges
from tdorg.oracle import brute_force_normalized_representations

for name, g in [("fan", fan6()), ("sunlet", sunlet10()),
                ("two disjoint edges", two_disjoint_edges())]:
    print(f"== {name} ==")
    print("uniquely representable:", is_uniquely_representable(g))
    print("count:", count_normalized_representations(g))
    for rep in brute_force_normalized_representations(g):
        print(serialize_representation(rep))
    report = classification_report(g)
    print("report:", report)
    print()
