import pytest
from hypothesis import given, settings, strategies as st

from dtransit.axioms import (
    ALL_AXIOMS,
    CATALOG,
    AxiomId,
    check_axiom,
    check_many,
    classify,
    holds_at,
    satisfies,
)
from dtransit.constructors import all_paths, from_partial_order
from dtransit.core import BinaryRelation, Digraph, InputError, TransitFunction, Universe
from dtransit.fixtures import fixture


def chain():
    return from_partial_order(BinaryRelation.of("abc", ["aa", "bb", "cc", "ab", "bc", "ac"]))


def test_catalog_is_complete():
    assert set(CATALOG) == set(ALL_AXIOMS)
    assert len(ALL_AXIOMS) == 31


def test_tr2_witness_on_small_example():
    R = fixture("ex_4_2_but_not_tr2").function()
    rep = check_axiom(R, "tr2")
    assert not rep.holds
    assert rep.witness == {"u": "a", "v": "b", "w": "c"}


def test_singleton_universe_satisfies_everything():
    R = TransitFunction.from_dict("a", {})
    assert all(check_axiom(R, a).holds for a in ALL_AXIOMS)


def test_fig3a_b1_1_witness():
    R = all_paths(Digraph.of("uxv", ["ux", "xv", "vx", "uv"]))
    rep = check_axiom(R, "b1_1")
    assert not rep.holds
    # scan order meets the mirrored instance first; the binding (u,v,x) fails too
    assert (rep.witness["u"], rep.witness["v"], rep.witness["x"]) == ("u", "x", "v")
    assert not holds_at(R, "b1_1", {"u": "u", "v": "v", "x": "x"})


def test_check_many_chain():
    reps = check_many(chain(), ["t0", "t1", "t3", "t2a", "tr1", "tr2"])
    assert all(r.holds for r in reps.values())


def test_check_many_b3_1_example():
    R = fixture("ex_4_2_but_not_b3_1").function()
    reps = check_many(R, ["b1_1", "b1_2", "b2", "b3_1"])
    assert [reps[a].holds for a in ("b1_1", "b1_2", "b2", "b3_1")] == [True, True, True, False]


def test_check_many_antichain():
    R = TransitFunction.from_dict("ab", {})
    assert all(r.holds for r in check_many(R, ["t2a", "q", "tr"]).values())


def test_check_many_rejects_empty_and_duplicates():
    R = chain()
    with pytest.raises(InputError):
        check_many(R, [])
    with pytest.raises(InputError):
        check_many(R, ["t0", "t0"])
    with pytest.raises(InputError):
        check_many(R, ["nope"])


def test_classify_chain():
    c = classify(chain())
    assert c.directed_transit_function and c.poset_function and c.geometric and c.weakly_geometric


def test_classify_geometric_without_b5():
    R = fixture("geo_not_b5").function()
    assert classify(R).geometric
    assert not satisfies(R, "b5")


def test_classify_fig3a():
    c = classify(all_paths(Digraph.of("uxv", ["ux", "xv", "vx", "uv"])))
    assert c.directed_transit_function and not c.weakly_geometric


def test_report_rendering_names_sets():
    rep = check_axiom(fixture("ex_4_2_but_not_tr2").function(), "tr2")
    assert "R(a,c)" in rep.rendering and "fails" in rep.rendering
    assert rep.to_json()["axiom"] == "tr2"


N = 3
tables = st.lists(st.integers(0, (1 << N) - 1), min_size=N * N, max_size=N * N)


@settings(max_examples=200, deadline=None)
@given(tables, st.sampled_from(list(AxiomId)))
def test_witnesses_are_sound(table, a):
    R = TransitFunction(Universe(tuple("abc")), tuple(table))
    rep = check_axiom(R, a)
    assert rep.holds == satisfies(R, a)
    if not rep.holds:
        binding = {k: rep.witness[k] for k in CATALOG[a].variables}
        assert not holds_at(R, a, binding)
    assert check_axiom(R, a) == rep
