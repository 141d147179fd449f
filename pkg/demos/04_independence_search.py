"""
Searching for counterexamples
=============================

The miner walks every function on a small universe (with t1 and t3 built in)
looking for one that satisfies some axioms and violates others.  An empty
search is a proof of the implication at that size.
"""

from dtransit import SearchSpec, mine, reproduce_independence_table

# t0, tr2 and both b1 axioms without b2: none exist on 3 points, so try 4
# with the seeded local search.
print(mine(SearchSpec(3, {"t0", "tr2", "b1_1", "b1_2"}, {"b2"})).status)
res = mine(SearchSpec(4, {"t0", "tr2", "b1_1", "b1_2"}, {"b2"}, mode="random", seed=1, budget=20_000))
print(res.status, "after", res.candidates_examined, "candidates")
for (a, b), members in res.witness.as_dict().items():
    if a != b and members:
        print(f"  R({a},{b}) = {{{','.join(members)}}}")

# q never holds without t2a on three points.
print(mine(SearchSpec(3, {"q"}, {"t2a"})).status)

for r in reproduce_independence_table():
    print(f"{r.status:16} n={r.spec.n}  {r.label}")
