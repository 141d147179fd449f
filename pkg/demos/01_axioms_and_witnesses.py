"""
Checking axioms and reading witnesses
=====================================

Build the all-paths function of a small digraph, then ask which axioms fail
and why.
"""

from dtransit import Digraph, all_paths, check_many, classify

# Edges u->x, x->v, u->v, v->w, w->x.  The detour v->w->x puts w on a
# u-x path but on no u-v path.
G = Digraph.of("uxvw", ["ux", "xv", "uv", "vw", "wx"])
A = all_paths(G)
print("A(u,x) =", A("u", "x"))
print("A(u,v) =", A("u", "v"))

# Each failing axiom comes back with the first violating assignment and the
# instantiated formula.
for axiom, rep in check_many(A, ["t0", "t1", "t3", "tr2", "b2_1", "b2_2"]).items():
    status = "holds" if rep.holds else "FAILS: " + rep.rendering
    print(f"{axiom:5} {status}")

print(classify(A))
