"""
Posets, underlying graphs and transitive reduction
==================================================

A partial order gives a transit function of order intervals.  Its
two-element sets are exactly the cover relations, and the all-paths function
of that Hasse diagram gives the intervals back.
"""

from dtransit import (
    BinaryRelation,
    Digraph,
    all_paths,
    digraph_classify,
    from_partial_order,
    transitive_reduction,
    underlying_graph,
    verify_poset_roundtrip,
)
from dtransit.constructors import reachability_closure

# The diamond: a above b and c, both above d.
pairs = ["aa", "bb", "cc", "dd", "ab", "ac", "bd", "cd", "ad"]
R = from_partial_order(BinaryRelation.of("abcd", pairs))
print("R(a,d) =", R("a", "d"))

H = underlying_graph(R)
print("cover edges:", H.labelled_edges())
print(verify_poset_roundtrip(R))
print(all_paths(H) == R)

# The same Hasse diagram comes out of transitive reduction of any DAG with
# that reachability, e.g. the diamond plus a shortcut a->d.
G = Digraph.of("abcd", ["ab", "ac", "bd", "cd", "ad"])
print("reduced:", transitive_reduction(G).labelled_edges())
print("same closure:", reachability_closure(G) == reachability_closure(H))

info = digraph_classify(H)
print("dag", info.dag, "mangrove", info.mangrove, "hybrids", info.hybrid_vertices)
