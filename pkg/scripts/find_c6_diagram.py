"""Search 6-chord diagrams for those whose circle graph is the 6-cycle.

Prints one canonical word per dihedral class; this is how the ``c6``
fixture was chosen.
"""

from chordhom.chords import canonical_form, intersection_graph
from chordhom.graphs import canonical_key, cycle_graph
from chordhom.search import enumerate_diagrams

target = canonical_key(cycle_graph(6))
found = sorted({canonical_form(d) for d in enumerate_diagrams(6) if canonical_key(intersection_graph(d)) == target})
for c in found:
    print(c)
print(f"{len(found)} class(es)")
