"""Registry of worked examples with the verdicts stated for them.

Transit sets are transcribed exactly as printed, including sets that do not
satisfy the verdict claimed for them; the suite reports such mismatches
rather than repairing the data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .constructors import all_paths, from_reachability, reachability_closure, shortcut_free_paths
from .core import Digraph, TransitFunction


@dataclass(frozen=True)
class Fixture:
    name: str
    payload: TransitFunction | Digraph
    build: str  # "transit" | "allpaths" | "scfree" | "reach"
    expected: Mapping[str, bool]
    provenance: str
    # extra named structural claims: name -> predicate on the built function
    claims: Mapping[str, Callable[[TransitFunction], bool]] = field(default_factory=dict)

    def function(self) -> TransitFunction:
        if self.build == "transit":
            return self.payload
        if self.build == "allpaths":
            return all_paths(self.payload)
        if self.build == "scfree":
            return shortcut_free_paths(self.payload)
        if self.build == "reach":
            return from_reachability(reachability_closure(self.payload))
        raise ValueError(self.build)


def _tf(vertices: str, sets: Mapping[str, str]) -> TransitFunction:
    # keys are two-letter "uv" strings; unlisted pairs follow R(x,x)={x}, else empty
    return TransitFunction.from_dict(list(vertices), {(k[0], k[1]): list(v) for k, v in sets.items()})


def _g(vertices: str, edges: str) -> Digraph:
    return Digraph.of(list(vertices), [(e[0], e[1]) for e in edges.split()])


def _is(u, v, members):
    return lambda R: set(R(u, v)) == set(members)


def _contains(u, v, x):
    return lambda R: x in R(u, v)


def _edgeless(R):
    from .derive import underlying_graph

    return not underlying_graph(R).edges


def _no_path_through(u, v, w):
    def check(R):
        from .verify import path_within

        uni = R.universe
        return not path_within(R, uni.idx(u), uni.idx(v), through=uni.idx(w))

    return check


def _path_within(u, v):
    def check(R):
        from .verify import path_within

        uni = R.universe
        return path_within(R, uni.idx(u), uni.idx(v))

    return check


def _not_weakly_geometric(R):
    from .axioms import classify

    c = classify(R)
    return not c.weakly_geometric and not c.geometric


def _geometric(R):
    from .axioms import classify

    return classify(R).geometric


T = True
F = False
WEAK_INDEP = "independence of t0, b1_1, b1_2, b2, tr2 (functions satisfying t1 and t3)"
GEO_INDEP = "independence of the geometric axioms"


FIXTURES: tuple[Fixture, ...] = (
    Fixture(
        "ex_4_2_but_not_b3_1",
        _tf("abcd", {"ad": "abcd", "ac": "abc", "ab": "ab", "bc": "bc", "cd": "cd", "bd": "bd"}),
        "transit",
        {"b1_1": T, "b1_2": T, "b2": T, "b3_1": F},
        "weakly geometric but not geometric: (b1_{1,2}), (b2), but not (b3_1)",
    ),
    Fixture(
        "ex_4_2_but_not_b3_2",
        _tf("abcd", {"ad": "abcd", "bd": "bcd", "ab": "ab", "bc": "bc", "cd": "cd", "ac": "ac"}),
        "transit",
        {"b1_1": T, "b1_2": T, "b2": T, "b3_2": F},
        "weakly geometric but not geometric: (b1_{1,2}), (b2), but not (b3_2)",
    ),
    Fixture(
        "ex_4_2_but_not_tr2",
        _tf("abc", {"ab": "acb", "ac": "ac", "bc": "bc"}),
        "transit",
        {"t1": T, "t3": T, "b1_1": T, "b1_2": T, "b2": T, "t0": T, "tr2": F},
        WEAK_INDEP + ": (b1_1), (b1_2), (b2), (t0) but not (tr2)",
    ),
    Fixture(
        "ex_4_2_but_not_t0",
        _tf("abc", {"ab": "acb", "ba": "", "ac": "ac", "ca": "ca", "bc": "bc", "cb": "cb"}),
        "transit",
        {"t1": T, "t3": T, "b1_1": T, "b1_2": T, "b2": T, "tr2": T, "t0": F},
        WEAK_INDEP + ": (b1_1), (b1_2), (b2), (tr2) but not (t0)",
    ),
    Fixture(
        "ex_4_2_but_not_b1_1",
        _tf("abcd", {"ab": "acdb", "ac": "abdc", "ad": "ad", "bc": "bc", "cb": "cb", "db": "db", "dc": "dc"}),
        "transit",
        {"t1": T, "t3": T, "b1_2": T, "b2": T, "t0": T, "tr2": T, "b1_1": F},
        WEAK_INDEP + ": (b1_2), (b2), (t0), (tr2) but not (b1_1)",
    ),
    Fixture(
        "ex_4_2_but_not_b1_2",
        _tf("abcd", {"ab": "abc", "cb": "abc", "ac": "ac", "ad": "ad", "bc": "bc", "bd": "bd", "cd": "cd"}),
        "transit",
        {"t1": T, "t3": T, "b1_1": T, "b2": T, "t0": T, "tr2": T, "b1_2": F},
        WEAK_INDEP + ": (b1_1), (b2), (t0), (tr2) but not (b1_2)",
    ),
    Fixture(
        "ex_4_2_but_not_b2",
        _tf("abcd", {"ab": "acb", "ac": "adc", "ad": "ad", "cb": "cb", "db": "db", "dc": "dc"}),
        "transit",
        {"t1": T, "t3": T, "b1_1": T, "b1_2": T, "t0": T, "tr2": T, "b2": F},
        WEAK_INDEP + ": (b1_1), (b1_2), (t0), (tr2) but not (b2)",
    ),
    Fixture(
        "ex_4_2_geo_but_not_tr2",
        _tf(
            "abcd",
            {"ad": "abcd", "ac": "abc", "ab": "ab", "bc": "bc", "cd": "cd", "bd": "bcd", "dc": "dc", "db": "dcb"},
        ),
        "transit",
        {"t0": T, "b3_1": T, "b3_2": T, "b2": T, "tr2": F},
        GEO_INDEP + ": (t0), (b3_{1,2}), (b2) but not (tr2)",
    ),
    Fixture(
        "ex_4_2_geo_but_not_t0",
        _tf(
            "abcd",
            {"ad": "abcd", "ac": "abc", "ab": "ab", "bc": "bc", "cd": "cd", "bd": "bcd", "dc": "dc", "cb": "cb"},
        ),
        "transit",
        {"tr2": T, "b3_1": T, "b3_2": T, "b2": T, "t0": F},
        GEO_INDEP + ": (tr2), (b3_{1,2}), (b2) but not (t0)",
    ),
    Fixture(
        "ex_4_2_geo_but_not_b2_1",
        _tf(
            "abcd",
            {"ad": "abcd", "ac": "abc", "ab": "ab", "bc": "bc", "cd": "cd", "bd": "bcd", "db": "dcb", "dc": "adc"},
        ),
        "transit",
        {"tr2": T, "b3_1": T, "b3_2": T, "t0": T, "b2_2": T, "b2_1": F},
        GEO_INDEP + ": (tr2), (b3_{1,2}), (t0), (b2_2) but not (b2_1)",
    ),
    Fixture(
        "ex_4_2_geo_but_not_b2_2",
        _tf(
            "abcd",
            {"ad": "abcd", "ac": "abc", "ab": "ab", "bc": "bc", "cd": "cd", "bd": "bcd", "db": "dcb", "cb": "acb"},
        ),
        "transit",
        {"tr2": T, "b3_1": T, "b3_2": T, "t0": T, "b2_1": T, "b2_2": F},
        GEO_INDEP + ": (tr2), (b3_{1,2}), (t0), (b2_1) but not (b2_2)",
    ),
    Fixture(
        "ex_4_2_geo_but_not_b3_1",
        _tf("abcd", {"ab": "abcd", "ac": "acd", "ad": "acd", "bc": "bc", "cd": "cd", "dc": "dc", "cb": "cb"}),
        "transit",
        {"t0": T, "b3_2": T, "b2": T, "tr2": T, "b3_1": F},
        GEO_INDEP + ": (t0), (b3_2), (b2), (tr2) but not (b3_1)",
    ),
    Fixture(
        # R(c,b) is listed twice ({b,c,d} and {c,b}); the later entry is kept
        "ex_4_2_geo_but_not_b3_2",
        _tf("abcd", {"ab": "abcd", "ad": "ad", "bc": "bc", "cd": "cd", "dc": "dc", "cb": "cb"}),
        "transit",
        {"t0": T, "b3_1": T, "b2": T, "tr2": T, "b3_2": F},
        GEO_INDEP + ": (t0), (b3_1), (b2), (tr2) but not (b3_2)",
    ),
    Fixture(
        "ex_4_2_b4_needed",
        _tf(
            "uxwv",
            {"uv": "uxwv", "uw": "uxw", "wv": "wxv", "ux": "ux", "xw": "xw", "wx": "wx", "xv": "xv"},
        ),
        "transit",
        {"t0": T, "t1": T, "t3": T, "b1_1": T, "b1_2": T, "b2": T, "b4": F, "b3_1": F, "b3_2": F},
        "b4 is essential for paths through w: no u-v path in R(u,v) passes through w",
        {
            "u-v path inside R(u,v) exists": _path_within("u", "v"),
            "no u-v path through w inside R(u,v)": _no_path_through("u", "v", "w"),
        },
    ),
    Fixture(
        "geo_not_b5",
        _tf("uvw", {"uv": "uv", "uw": "uw", "wv": "wv"}),
        "transit",
        {"t0": T, "t1": T, "t3": T, "tr2": T, "b2": T, "b3_1": T, "b3_2": T, "b5": F},
        "a geometric directed transit function violating (b5)",
        {"classified geometric": _geometric},
    ),
    Fixture(
        "fig1_triangle",
        _g("uvw", "uv vu vw wv uw wu"),
        "reach",
        {"t1": T, "t3": T, "tr1": T, "tr2": T},
        "reachability function of the complete symmetric triangle; underlying graph is edge-less",
        {
            "R(u,v)={u,v,w}": _is("u", "v", "uvw"),
            "R(v,w)={u,v,w}": _is("v", "w", "uvw"),
            "R(w,u)={u,v,w}": _is("w", "u", "uvw"),
            "underlying graph edge-less": _edgeless,
        },
    ),
    Fixture(
        "fig2",
        _g("uxvw", "ux xv xw wx"),
        "allpaths",
        {"tr0": F, "tr1": F, "q": F},
        "all-paths function violating (tr0), (tr1) and (q); R(u,w)∩R(w,v)={w,x}",
        {"R(u,w)∩R(w,v)={w,x}": lambda R: set(R("u", "w") & R("w", "v")) == {"w", "x"}},
    ),
    Fixture(
        "fig3a",
        _g("uxv", "ux xv vx uv"),
        "allpaths",
        {"b1_1": F},
        "all-paths counterexample (b1_1): x∈R(u,v)={u,x,v} but v∈R(u,x)={u,v,x}",
        {"R(u,v)={u,x,v}": _is("u", "v", "uxv"), "R(u,x)={u,v,x}": _is("u", "x", "uvx")},
    ),
    Fixture(
        "fig3b",
        _g("uxv", "ux xu xv uv"),
        "allpaths",
        {"b1_2": F},
        "all-paths counterexample (b1_2): x∈R(u,v)={u,x,v} and u∈R(x,v)={u,x,v}",
        {"R(u,v)={u,x,v}": _is("u", "v", "uxv"), "R(x,v)={u,x,v}": _is("x", "v", "uxv")},
    ),
    Fixture(
        "fig3c",
        _g("uxvw", "ux xv uv vw wx"),
        "allpaths",
        {"b2_1": F},
        "all-paths counterexample (b2_1): w∈R(u,x)={u,v,w,x} but w∉R(u,v)",
        {"R(u,v)={u,x,v}": _is("u", "v", "uxv"), "R(u,x)={u,v,w,x}": _is("u", "x", "uvwx")},
    ),
    Fixture(
        "fig3d",
        _g("uxvw", "ux xv uv xw wu"),
        "allpaths",
        {"b2_2": F},
        "all-paths counterexample (b2_2): x∈R(u,v) and w∈R(x,v) but w∉R(u,v)",
        {
            "x∈R(u,v)": _contains("u", "v", "x"),
            "w∈R(x,v)": _contains("x", "v", "w"),
            "w∉R(u,v)": lambda R: "w" not in R("u", "v"),
        },
    ),
    Fixture(
        "fig4",
        _g("uawbv", "ua aw wb bv uv"),
        "scfree",
        {"b5": F},
        "shortcut-free path function violating (b5); J(u,v)={u,v}",
        {
            "J(u,v)={u,v}": _is("u", "v", "uv"),
            "J(u,w)={u,a,w}": _is("u", "w", "uaw"),
            "J(w,v)={w,b,v}": _is("w", "v", "wbv"),
        },
    ),
    Fixture(
        "fig5a",
        _g("uzxvy", "uz zx xv vx uy yv"),
        "scfree",
        {"b3_1": F, "b1_1": F},
        "shortcut-free path function: counterexample (b3_1), (b1_1)",
        {
            "x∈J(u,v)": _contains("u", "v", "x"),
            "v∈J(u,x)": _contains("u", "x", "v"),
            "not (weakly) geometric": _not_weakly_geometric,
        },
    ),
    Fixture(
        "fig5b",
        _g("uxzvy", "ux xu xz zv uy yv"),
        "scfree",
        {"b3_2": F, "b1_2": F},
        "shortcut-free path function: counterexample (b3_2), (b1_2)",
        {
            "x∈J(u,v)": _contains("u", "v", "x"),
            "u∈J(x,v)": _contains("x", "v", "u"),
            "not (weakly) geometric": _not_weakly_geometric,
        },
    ),
)


def fixture(name: str) -> Fixture:
    for f in FIXTURES:
        if f.name == name:
            return f
    raise KeyError(name)
