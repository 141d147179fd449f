import random

import pytest

from dtransit.constructors import all_paths, from_partial_order, interval_from_quasimetric, quasimetric_from_digraph
from dtransit.core import BinaryRelation, Digraph, InputError, Universe
from dtransit.corpora import all_digraphs, random_digraph
from dtransit.fixtures import FIXTURES, fixture
from dtransit.verify import (
    IMPLICATIONS,
    check_fixture,
    check_implication,
    oracle_all_paths,
    path_within,
    run_paper_suite,
    verify_forest_tree,
    verify_geometric_paths,
    verify_poset_roundtrip,
)

CHAIN = from_partial_order(BinaryRelation.of("abc", ["aa", "bb", "cc", "ab", "bc", "ac"]))
DIAMOND = from_partial_order(BinaryRelation.of("abcd", ["aa", "bb", "cc", "dd", "ab", "ac", "bd", "cd", "ad"]))


def test_oracle_examples():
    G = Digraph.of("uxvw", ["ux", "xv", "uv", "vw", "wx"])
    assert set(oracle_all_paths(G, 0, 1)) == set("uvwx")
    E = Digraph(Universe(tuple("ab")), frozenset())
    assert not oracle_all_paths(E, 0, 1)
    D = Digraph.of("abcd", ["ab", "ac", "bd", "cd"])
    assert set(oracle_all_paths(D, 0, 3)) == set("abcd")


def test_oracle_matches_all_paths_random():
    rng = random.Random(7)
    for _ in range(100):
        G = random_digraph(rng, rng.randint(1, 6), rng.random())
        A = all_paths(G)
        assert all(oracle_all_paths(G, u, v).mask == A.get(u, v) for u in range(G.n) for v in range(G.n))


def test_poset_roundtrip():
    assert verify_poset_roundtrip(CHAIN).passed
    assert verify_poset_roundtrip(DIAMOND).passed
    with pytest.raises(InputError, match="not a poset function: tr1 fails"):
        verify_poset_roundtrip(fixture("ex_4_2_but_not_tr2").function())


def test_forest_tree():
    path = all_paths(Digraph.of("abc", ["ab", "bc"]))
    assert verify_forest_tree(path, "tree").passed
    two = all_paths(Digraph.of("abcd", ["ab", "cd"]))
    assert verify_forest_tree(two, "forest").passed
    with pytest.raises(InputError, match="r fails"):
        verify_forest_tree(two, "tree")
    with pytest.raises(InputError, match="p fails"):
        verify_forest_tree(DIAMOND, "forest")


def test_geometric_paths():
    I = interval_from_quasimetric(quasimetric_from_digraph(Digraph.of("abc", ["ab", "bc"])))
    out = verify_geometric_paths(I)
    assert out.passed and out.details["through_clause_checked"]
    assert verify_geometric_paths(CHAIN).passed
    R = fixture("ex_4_2_b4_needed").function()
    out = verify_geometric_paths(R)
    assert out.passed and not out.details["through_clause_checked"]
    u, v, w = (R.universe.idx(x) for x in "uvw")
    assert path_within(R, u, v) and not path_within(R, u, v, through=w)


def test_geometric_paths_needs_weak_geometry():
    with pytest.raises(InputError):
        verify_geometric_paths(fixture("fig3a").function())


def test_named_fixtures_pass():
    for name in ("ex_4_2_but_not_b3_1", "fig4", "fig1_triangle", "geo_not_b5", "fig5a", "fig3c"):
        assert check_fixture(fixture(name)).passed, name


def test_fixture_mismatch_is_reported_verbatim():
    out = check_fixture(fixture("ex_4_2_geo_but_not_tr2"))
    assert not out.passed
    t0 = [m for m in out.details["mismatches"] if m.get("axiom") == "t0"][0]
    assert t0["stated"] is True and t0["recomputed"] is False
    assert t0["witness"] == {"u": "c", "v": "b", "w": "d"}


def test_implications_hold_at_n3():
    for imp in IMPLICATIONS:
        assert check_implication(imp).passed, imp.name


def test_suite_shape_and_order():
    outs = run_paper_suite()
    assert [o.check for o in outs[: len(FIXTURES)]] == [f"fixture:{f.name}" for f in FIXTURES]
    assert len(outs) == len(FIXTURES) + len(IMPLICATIONS)
    assert [o.to_json() for o in outs] == [o.to_json() for o in run_paper_suite()]


def test_geometric_paths_on_interval_functions():
    for G in all_digraphs(3):
        assert verify_geometric_paths(interval_from_quasimetric(quasimetric_from_digraph(G))).passed
