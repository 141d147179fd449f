"""
Interval functions and paths inside transit sets
================================================

Shortest-path distances of a digraph are a quasimetric.  Its interval
function is geometric, and every non-empty transit set contains a path
between its endpoints.
"""

from dtransit import (
    Digraph,
    classify,
    interval_from_quasimetric,
    quasimetric_from_digraph,
    satisfies,
    verify_geometric_paths,
)
from dtransit.fixtures import fixture
from dtransit.verify import path_within

G = Digraph.of("abcde", ["ab", "bc", "cd", "ae", "ed", "db"])
d = quasimetric_from_digraph(G)
for row, lab in zip(d.d, G.universe.labels):
    print(lab, row)

I = interval_from_quasimetric(d)
print("I(a,d) =", I("a", "d"))
print(classify(I))
print(verify_geometric_paths(I))

# Weak geometry alone is not enough for a path through every member.  Here
# R(u,v) = {u,x,w,v} but no u-v path inside it visits w.
R = fixture("ex_4_2_b4_needed").function()
u, v, w = (R.universe.idx(x) for x in "uvw")
print("weakly geometric:", classify(R).weakly_geometric, " b4:", satisfies(R, "b4"))
print("u-v path inside R(u,v):", path_within(R, u, v))
print("... through w:", path_within(R, u, v, through=w))
