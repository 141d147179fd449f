import pytest

from dtransit.axioms import check_many
from dtransit.core import InputError
from dtransit.miner import (
    INDEPENDENCE_CLAIMS,
    SearchSpec,
    candidates,
    mine,
    space_size,
)


def test_finds_tr2_counterexample():
    res = mine(SearchSpec(3, {"t0", "t1", "t3", "b1_1", "b1_2", "b2"}, {"tr2"}))
    assert res.status == "witness_found"
    reps = check_many(res.witness, ["t0", "t1", "t3", "b1_1", "b1_2", "b2", "tr2"])
    assert not reps["tr2"].holds and all(r.holds for a, r in reps.items() if a != "tr2")


def test_baked_forbidden_is_exhausted():
    res = mine(SearchSpec(1, set(), {"t3"}, baked={"t3"}))
    assert res.status == "exhausted" and res.candidates_examined == 1


def test_b4_follows_from_tr2_and_b3():
    res = mine(SearchSpec(3, {"t0", "t1", "t3", "tr2", "b3_1", "b3_2"}, {"b4"}))
    assert res.status == "exhausted"
    assert res.candidates_examined == space_size(res.spec) == 729


def test_t1_and_b3_force_tr2():
    # b3_1 at x=v and b3_2 at x=u make R(w,v) and R(u,w) non-empty for w in R(u,v)
    res = mine(SearchSpec(3, {"b3_1", "b3_2"}, {"tr2"}))
    assert res.status == "exhausted"


def test_first_witness_is_lexicographically_first():
    spec = SearchSpec(3, {"t1", "t3"}, {"t0"})
    res = mine(spec)
    first = next(t for t in candidates(3) if not check_many(_tf(t), ["t0"])["t0"].holds)
    assert res.witness.table == first


def _tf(table):
    from dtransit.core import TransitFunction
    from dtransit.corpora import universe

    return TransitFunction(universe(3), table)


def test_spec_validation():
    with pytest.raises(InputError):
        SearchSpec(3, {"t0"}, {"t0"})
    with pytest.raises(InputError):
        SearchSpec(3, baked={"b2"})
    with pytest.raises(InputError):
        SearchSpec(4)  # 5^12 candidates is over the default budget
    with pytest.raises(InputError):
        SearchSpec(3, mode="sideways")
    with pytest.raises(InputError):
        SearchSpec(3, {"nope"})


def test_random_mode_is_reproducible():
    spec = SearchSpec(4, {"t0", "tr2", "b1_1", "b1_2"}, {"b2"}, mode="random", seed=3, budget=5000)
    a, b = mine(spec), mine(spec)
    assert a.to_json() == b.to_json()
    assert a.status == "witness_found"


def test_random_mode_budget():
    spec = SearchSpec(3, {"t0"}, {"t3"}, mode="random", budget=50)  # t3 is baked
    res = mine(spec)
    assert res.status == "budget_exceeded" and res.candidates_examined == 50


def test_claims_are_well_formed():
    assert len(INDEPENDENCE_CLAIMS) == 13
    for c in INDEPENDENCE_CLAIMS:
        assert len(c.forbid) == 1 and not c.require & c.forbid


def test_space_sizes():
    assert space_size(SearchSpec(2)) == 4
    assert space_size(SearchSpec(3)) == 729
    assert space_size(SearchSpec(2, baked=set(), budget=10**6)) == 4**4


def test_tr1_without_b2_appears_at_four_points():
    # exhaustive at n=3 finds nothing, but without tr2 the converse breaks at n=4
    assert mine(SearchSpec(3, {"tr1"}, {"b2"})).status == "exhausted"
    res = mine(SearchSpec(4, {"tr1"}, {"b2"}, mode="random", seed=2, budget=30_000))
    assert res.status == "witness_found"
    reps = check_many(res.witness, ["t0", "t1", "t3", "tr0", "tr1", "tr2", "b2"])
    assert all(reps[a].holds for a in ("t0", "t1", "t3", "tr0", "tr1"))
    assert not reps["b2"].holds and not reps["tr2"].holds
    assert mine(SearchSpec(3, {"tr1", "tr2"}, {"b2"})).status == "exhausted"
