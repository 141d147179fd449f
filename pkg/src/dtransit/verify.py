"""Brute-force oracles, round-trip checks and the worked-example suite."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .axioms import POSET_AXIOMS, WEAKLY_GEOMETRIC_AXIOMS, check_axiom, satisfies
from .constructors import DEFAULT_BUDGET, all_paths
from .core import Digraph, InputError, ResourceError, TransitFunction, VertexSet, bits
from .derive import digraph_classify, underlying_graph
from .fixtures import FIXTURES, Fixture


@dataclass(frozen=True)
class VerificationOutcome:
    check: str
    passed: bool
    details: Any = field(default=None)

    def to_json(self) -> dict:
        return {"check": self.check, "passed": self.passed, "details": self.details}


def oracle_all_paths(G: Digraph, u: int, v: int, budget: int = DEFAULT_BUDGET) -> VertexSet:
    """Union of the vertex sets of all simple u-v paths, by plain backtracking."""
    succ = G.succ()
    found = 0
    expansions = 0
    path: list[int] = [u]

    def dfs(last: int, visited: int) -> None:
        nonlocal found, expansions
        expansions += 1
        if expansions > budget:
            raise ResourceError(f"path enumeration exceeded {budget} expansions")
        if last == v:
            for x in path:
                found |= 1 << x
            return
        for y in bits(succ[last]):
            if not visited >> y & 1:
                path.append(y)
                dfs(y, visited | 1 << y)
                path.pop()

    dfs(u, 1 << u)
    return VertexSet(G.universe, found)


def path_within(R: TransitFunction, u: int, v: int, through: int | None = None) -> bool:
    """Is there a simple u-v path in the underlying graph using only vertices of R(u,v)?

    With ``through`` set, the path must also visit that vertex.
    """
    inside = R.get(u, v)
    if not inside >> u & 1 or not inside >> v & 1:
        return False
    if through is not None and not inside >> through & 1:
        return False
    succ = [s & inside for s in underlying_graph(R).succ()]

    def dfs(last: int, visited: int) -> bool:
        if last == v:
            return through is None or bool(visited >> through & 1)
        return any(dfs(y, visited | 1 << y) for y in bits(succ[last] & ~visited))

    return dfs(u, 1 << u)


def _require(R: TransitFunction, axioms, what: str) -> None:
    for a in axioms:
        rep = check_axiom(R, a)
        if not rep.holds:
            raise InputError(f"not a {what}: {a} fails ({rep.rendering})", witness=rep.witness)


def _first_difference(R: TransitFunction, S: TransitFunction) -> dict | None:
    uni = R.universe
    n = R.n
    for k, (a, b) in enumerate(zip(R.table, S.table)):
        if a != b:
            i, j = divmod(k, n)
            return {
                "from": uni.labels[i],
                "to": uni.labels[j],
                "given": uni.names(a),
                "rebuilt": uni.names(b),
            }
    return None


def verify_poset_roundtrip(R: TransitFunction) -> VerificationOutcome:
    """A poset function is the all-paths function of its (acyclic) underlying graph."""
    _require(R, POSET_AXIOMS, "poset function")
    G = underlying_graph(R)
    if not digraph_classify(G).dag:
        return VerificationOutcome("poset_roundtrip", False, {"reason": "underlying graph has a cycle"})
    diff = _first_difference(R, all_paths(G))
    return VerificationOutcome("poset_roundtrip", diff is None, diff)


def _unique_neighbours(R: TransitFunction) -> dict | None:
    # every non-empty R(u,v), u != v, has exactly one x with R(u,x)={u,x}
    # and exactly one y with R(y,v)={y,v}
    uni = R.universe
    n = R.n
    T = R.table
    for u in range(n):
        for v in range(n):
            s = T[u * n + v]
            if u == v or not s:
                continue
            first = [x for x in bits(s) if x != u and T[u * n + x] == 1 << u | 1 << x]
            last = [y for y in bits(s) if y != v and T[y * n + v] == 1 << y | 1 << v]
            if len(first) != 1 or len(last) != 1:
                return {
                    "from": uni.labels[u],
                    "to": uni.labels[v],
                    "successors": [uni.labels[x] for x in first],
                    "predecessors": [uni.labels[y] for y in last],
                }
    return None


def verify_forest_tree(R: TransitFunction, branch: str = "tree") -> VerificationOutcome:
    """Check that R is the path function of a rooted forest (or tree)."""
    if branch not in ("forest", "tree"):
        raise InputError(f"branch must be 'forest' or 'tree', got {branch!r}")
    extra = ("p", "hy") if branch == "forest" else ("p", "r")
    _require(R, POSET_AXIOMS + extra, f"{branch} path function")
    G = underlying_graph(R)
    info = digraph_classify(G)
    shape_ok = info.rooted_forest if branch == "forest" else info.rooted_tree
    check = f"{branch}_characterisation"
    if not shape_ok:
        return VerificationOutcome(check, False, {"reason": f"underlying graph is not a rooted {branch}"})
    diff = _first_difference(R, all_paths(G))
    if diff is not None:
        return VerificationOutcome(check, False, diff)
    bad = _unique_neighbours(R)
    if bad is not None:
        return VerificationOutcome(check, False, {"reason": "neighbour inside R(u,v) not unique", **bad})
    return VerificationOutcome(check, True)


def verify_geometric_paths(R: TransitFunction) -> VerificationOutcome:
    """R(u,v) non-empty iff a u-v path runs inside R(u,v); with b4, through any w in it."""
    _require(R, WEAKLY_GEOMETRIC_AXIOMS, "weakly geometric directed transit function")
    uni = R.universe
    n = R.n
    with_b4 = satisfies(R, "b4")
    for u in range(n):
        for v in range(n):
            s = R.get(u, v)
            if bool(s) != path_within(R, u, v):
                return VerificationOutcome(
                    "geometric_paths",
                    False,
                    {"from": uni.labels[u], "to": uni.labels[v], "nonempty": bool(s)},
                )
            if with_b4:
                for w in bits(s):
                    if not path_within(R, u, v, through=w):
                        return VerificationOutcome(
                            "geometric_paths",
                            False,
                            {"from": uni.labels[u], "to": uni.labels[v], "through": uni.labels[w]},
                        )
    return VerificationOutcome("geometric_paths", True, {"through_clause_checked": with_b4})


def check_fixture(fx: Fixture) -> VerificationOutcome:
    """Recompute every stated verdict and structural claim of a worked example."""
    R = fx.function()
    mismatches = []
    for a, want in fx.expected.items():
        rep = check_axiom(R, a)
        if rep.holds != want:
            entry = {"axiom": a, "stated": want, "recomputed": rep.holds}
            if rep.witness is not None:
                entry["witness"] = rep.witness
                entry["rendering"] = rep.rendering
            mismatches.append(entry)
    for name, pred in fx.claims.items():
        if not pred(R):
            mismatches.append({"claim": name, "stated": True, "recomputed": False})
    details = {"provenance": fx.provenance}
    if mismatches:
        details["mismatches"] = mismatches
    return VerificationOutcome(f"fixture:{fx.name}", not mismatches, details)


@dataclass(frozen=True)
class Implication:
    """``premises`` imply each axiom in ``conclusions`` (t1 and t3 assumed)."""

    name: str
    premises: tuple[str, ...]
    conclusions: tuple[str, ...]


IMPLICATIONS: tuple[Implication, ...] = (
    Implication("tr iff tr1 and tr2 (forward)", ("tr",), ("tr1", "tr2")),
    Implication("tr iff tr1 and tr2 (backward)", ("tr1", "tr2"), ("tr",)),
    Implication("tr1 implies tr0 and b2", ("tr1",), ("tr0", "b2")),
    Implication("tr0 and b2 imply tr1", ("tr0", "b2"), ("tr1",)),
    Implication("t3 and tr1 imply t0", ("tr1",), ("t0",)),
    Implication("q implies t2a", ("q",), ("t2a",)),
    Implication("tr2 and b3 imply b4 and b1", ("tr2", "b3_1", "b3_2"), ("b4", "b1_1", "b1_2")),
    Implication("t1 and b3 imply tr2", ("b3_1", "b3_2"), ("tr2",)),
    Implication("geometric implies weakly geometric", ("t0", "tr2", "b2", "b3_1", "b3_2"), ("b1_1", "b1_2")),
    Implication("b2 and Mod imply b5 for directed transit functions", ("t0", "b2", "Mod"), ("b5",)),
)

IMPLICATION_N = 3


def check_implication(imp: Implication, n: int = IMPLICATION_N) -> VerificationOutcome:
    """Exhaustive search (t1, t3 baked) for a counterexample to each conclusion."""
    from .io import transit_to_json
    from .miner import SearchSpec, mine

    examined = 0
    for c in imp.conclusions:
        res = mine(SearchSpec(n, set(imp.premises), {c}))
        examined += res.candidates_examined
        if res.status == "witness_found":
            return VerificationOutcome(
                f"implication:{imp.name}",
                False,
                {"violated": c, "counterexample": transit_to_json(res.witness)},
            )
    return VerificationOutcome(f"implication:{imp.name}", True, {"n": n, "candidates_examined": examined})


def run_paper_suite() -> list[VerificationOutcome]:
    """Fixtures in registry order, then the implication checks."""
    out = [check_fixture(fx) for fx in FIXTURES]
    out.extend(check_implication(imp) for imp in IMPLICATIONS)
    return out
