import random

import pytest

from dtransit.constructors import all_paths, from_partial_order, from_reachability, reachability_closure
from dtransit.core import BinaryRelation, Digraph, InputError, TransitFunction, Universe, identity_relation
from dtransit.corpora import all_digraphs, random_dag
from dtransit.derive import (
    base_relation,
    digraph_classify,
    has_shortcut,
    in_reach,
    out_reach,
    order_from_tf,
    sim_components,
    transitive_reduction,
    underlying_graph,
)

CHAIN = BinaryRelation.of("abc", ["aa", "bb", "cc", "ab", "bc", "ac"])
FIG1 = Digraph.of("uvw", ["uv", "vu", "vw", "wv", "uw", "wu"])
DIAMOND = Digraph.of("abcd", ["ab", "ac", "bd", "cd"])


def test_underlying_graph_examples():
    assert not underlying_graph(from_reachability(reachability_closure(FIG1))).edges
    G = underlying_graph(from_partial_order(CHAIN))
    assert G.labelled_edges() == [("a", "b"), ("b", "c")]
    R = TransitFunction.from_dict("abc", {("a", "b"): "abc"})
    assert not underlying_graph(R).edges


def test_transitive_reduction_examples():
    G = Digraph.of("abc", ["ab", "bc", "ac"])
    assert transitive_reduction(G).labelled_edges() == [("a", "b"), ("b", "c")]
    assert transitive_reduction(DIAMOND) == DIAMOND
    extra = Digraph.of("abcd", ["ab", "ac", "bd", "cd", "ad"])
    assert transitive_reduction(extra) == DIAMOND


def _brute_reduction(G):
    # drop every edge whose removal keeps the reachability relation
    closure = reachability_closure(G)
    edges = set(G.edges)
    for e in sorted(G.edges):
        trial = Digraph(G.universe, frozenset(edges - {e}))
        if reachability_closure(trial) == closure:
            edges.discard(e)
    return Digraph(G.universe, frozenset(edges))


def test_transitive_reduction_matches_brute_force():
    rng = random.Random(3)
    for _ in range(200):
        G = random_dag(rng, rng.randint(1, 6), rng.random())
        assert transitive_reduction(G) == _brute_reduction(G)


def test_transitive_reduction_rejects_cycles():
    with pytest.raises(InputError):
        transitive_reduction(Digraph.of("ab", ["ab", "ba"]))


def test_shortcut_fixed_point_on_dags():
    for G in all_digraphs(4):
        if digraph_classify(G).dag:
            assert (not has_shortcut(G)) == (transitive_reduction(G) == G)


def test_classify_path():
    c = digraph_classify(Digraph.of("abc", ["ab", "bc"]))
    assert c.dag and c.rooted_tree and c.rooted_forest and c.mangrove
    assert list(c.roots) == ["a"]


def test_classify_diamond_and_triangle():
    c = digraph_classify(DIAMOND)
    assert c.dag and not c.mangrove and not c.rooted_forest
    assert list(c.hybrid_vertices) == ["d"]
    c = digraph_classify(FIG1)
    assert c.strongly_connected and not c.dag


def test_classify_two_chains_is_forest_not_tree():
    c = digraph_classify(Digraph.of("abcd", ["ab", "cd"]))
    assert c.rooted_forest and not c.rooted_tree and not c.weakly_connected
    assert list(c.sources) == ["a", "c"]


def test_order_from_tf():
    assert order_from_tf(from_partial_order(CHAIN)) == CHAIN
    assert len(order_from_tf(from_reachability(reachability_closure(FIG1))).pairs) == 9
    uni = Universe(tuple("abc"))
    assert order_from_tf(TransitFunction.from_dict(uni, {})) == identity_relation(uni)


def test_base_relation():
    rel = base_relation(from_partial_order(CHAIN), "a")
    # R(a,a)={a} < R(a,b)={a,b} < R(a,c)={a,b,c}
    assert {("a", "b"), ("b", "c"), ("a", "c")} <= set(rel.labelled_pairs())
    assert ("c", "a") not in rel.labelled_pairs()
    R = TransitFunction.from_dict("abc", {})
    rel = base_relation(R, "a")
    assert all((x, x) in rel.labelled_pairs() for x in "abc")
    assert ("b", "c") in rel.labelled_pairs() and ("c", "b") in rel.labelled_pairs()


def test_sim_components():
    R = from_reachability(reachability_closure(FIG1))
    assert [list(b) for b in sim_components(R).blocks] == [["u", "v", "w"]]
    assert len(sim_components(from_partial_order(CHAIN)).blocks) == 3
    two = from_reachability(reachability_closure(Digraph.of("abcd", ["ab", "ba", "cd", "dc"])))
    assert sim_components(two).to_json() == [["a", "b"], ["c", "d"]]


def test_sim_components_needs_t0():
    R = TransitFunction.from_dict("abc", {("a", "b"): "ab", ("b", "c"): "bc"})
    with pytest.raises(InputError):
        sim_components(R)


def test_reach_sets_disjoint_when_empty_under_t0():
    for G in all_digraphs(3):
        R = all_paths(G)
        for u in range(3):
            for v in range(3):
                if not R.get(u, v):
                    assert out_reach(R, u) & in_reach(R, v) == 0
