"""Structures derived from transit functions and digraphs."""
from __future__ import annotations

from dataclasses import dataclass

from .axioms import check_axiom
from .constructors import is_acyclic, reach_masks
from .core import BinaryRelation, Digraph, InputError, TransitFunction, VertexSet, bits


def underlying_graph(R: TransitFunction) -> Digraph:
    """Edge (x, y) iff x != y and R(x, y) == {x, y}."""
    n = R.n
    T = R.table
    edges = frozenset(
        (x, y) for x in range(n) for y in range(n) if x != y and T[x * n + y] == (1 << x | 1 << y)
    )
    return Digraph(R.universe, edges)


def transitive_reduction(G: Digraph) -> Digraph:
    """Unique transitive reduction of a DAG.

    An edge (u, v) survives iff v is not reachable from another successor of u.
    """
    if not is_acyclic(G):
        raise InputError("transitive reduction is only unique for DAGs; graph has a cycle")
    succ = G.succ()
    reach = reach_masks(G)
    keep = set()
    for u, v in G.edges:
        via = 0
        for w in bits(succ[u] & ~(1 << v)):
            via |= reach[w]
        if not via >> v & 1:
            keep.add((u, v))
    return Digraph(G.universe, frozenset(keep))


def has_shortcut(G: Digraph) -> bool:
    """True iff some edge (u, v) also has a simple u-v path of length >= 2."""
    return bool(shortcut_edges(G))


def shortcut_edges(G: Digraph) -> list[tuple[int, int]]:
    succ = G.succ()
    out = []
    for u, v in sorted(G.edges):
        # simple path u -> w -> ... -> v avoiding u, with w != v
        blocked = 1 << u
        seen = 0
        frontier = succ[u] & ~(1 << v) & ~blocked
        while frontier:
            seen |= frontier
            nxt = 0
            for x in bits(frontier):
                nxt |= succ[x]
            frontier = nxt & ~seen & ~blocked
        if seen >> v & 1:
            out.append((u, v))
    return out


def _count_paths_capped(G: Digraph, cap: int = 2) -> list[list[int]]:
    """counts[u][v] = min(cap, number of directed u-v paths) for a DAG."""
    n = G.n
    succ = G.succ()
    order = _topological_order(G)
    counts = [[0] * n for _ in range(n)]
    for u in range(n):
        c = counts[u]
        c[u] = 1
        for x in order:
            if c[x]:
                for y in bits(succ[x]):
                    c[y] = min(cap, c[y] + c[x])
    return counts


def _topological_order(G: Digraph) -> list[int]:
    succ = G.succ()
    indeg = [0] * G.n
    for _, b in G.edges:
        indeg[b] += 1
    order = [i for i in range(G.n) if indeg[i] == 0]
    k = 0
    while k < len(order):
        for y in bits(succ[order[k]]):
            indeg[y] -= 1
            if indeg[y] == 0:
                order.append(y)
        k += 1
    return order


@dataclass(frozen=True)
class DigraphClassification:
    dag: bool
    shortcut_free: bool
    mangrove: bool
    rooted_forest: bool
    rooted_tree: bool
    weakly_connected: bool
    unilaterally_connected: bool
    strongly_connected: bool
    sources: VertexSet
    sinks: VertexSet
    hybrid_vertices: VertexSet
    roots: VertexSet

    def to_json(self) -> dict:
        out = {}
        for k, v in self.__dict__.items():
            out[k] = list(v) if isinstance(v, VertexSet) else v
        return out


def digraph_classify(G: Digraph) -> DigraphClassification:
    n = G.n
    uni = G.universe
    full = uni.full
    succ, pred = G.succ(), G.pred()
    reach = reach_masks(G)
    dag = is_acyclic(G)
    sources = sum(1 << i for i in range(n) if not pred[i])
    sinks = sum(1 << i for i in range(n) if not succ[i])
    hybrids = sum(1 << i for i in range(n) if pred[i] & (pred[i] - 1))
    roots = sum(1 << i for i in bits(sources) if reach[i] == full)

    # weak connectivity: reachability in the symmetrised graph from vertex 0
    sym = [succ[i] | pred[i] for i in range(n)]
    seen = frontier = 1
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= sym[x]
        frontier = nxt & ~seen
        seen |= frontier
    weak = seen == full
    strong = all(r == full for r in reach)
    unilateral = all(reach[u] >> v & 1 or reach[v] >> u & 1 for u in range(n) for v in range(u + 1, n))

    mangrove = False
    if dag:
        counts = _count_paths_capped(G)
        mangrove = all(c <= 1 for u in range(n) for v, c in enumerate(counts[u]) if u != v)
    forest = dag and hybrids == 0
    tree = forest and roots != 0
    return DigraphClassification(
        dag=dag,
        shortcut_free=not has_shortcut(G),
        mangrove=mangrove,
        rooted_forest=forest,
        rooted_tree=tree,
        weakly_connected=weak,
        unilaterally_connected=unilateral,
        strongly_connected=strong,
        sources=VertexSet(uni, sources),
        sinks=VertexSet(uni, sinks),
        hybrid_vertices=VertexSet(uni, hybrids),
        roots=VertexSet(uni, roots),
    )


def order_from_tf(R: TransitFunction) -> BinaryRelation:
    """Pairs (u, v) with R(u, v) non-empty."""
    n = R.n
    T = R.table
    return BinaryRelation(R.universe, frozenset((u, v) for u in range(n) for v in range(n) if T[u * n + v]))


def base_relation(R: TransitFunction, b: str) -> BinaryRelation:
    """u <=_b v iff R(b, u) is a subset of R(b, v).  No order axioms are promised."""
    i = R.universe.idx(b)
    n = R.n
    row = R.table[i * n : (i + 1) * n]
    return BinaryRelation(
        R.universe,
        frozenset((u, v) for u in range(n) for v in range(n) if row[u] & ~row[v] == 0),
    )


@dataclass(frozen=True)
class Partition:
    blocks: tuple[VertexSet, ...]

    def to_json(self) -> list[list[str]]:
        return [list(b) for b in self.blocks]


def sim_components(R: TransitFunction) -> Partition:
    """Classes of u ~ v iff R(u,v) and R(v,u) are both non-empty.

    Requires t0 and t3, which make ~ an equivalence.
    """
    for a in ("t3", "t0"):
        rep = check_axiom(R, a)
        if not rep.holds:
            raise InputError(f"~ is only an equivalence under t0 and t3; {a} fails", witness=rep.witness)
    n = R.n
    T = R.table
    assigned = 0
    blocks = []
    for u in range(n):
        if assigned >> u & 1:
            continue
        block = 0
        for v in range(n):
            if T[u * n + v] and T[v * n + u]:
                block |= 1 << v
        assigned |= block
        blocks.append(VertexSet(R.universe, block))
    return Partition(tuple(blocks))


def out_reach(R: TransitFunction, u: int) -> int:
    """C+(u) = {w : R(u, w) non-empty}."""
    n = R.n
    return sum(1 << w for w in range(n) if R.table[u * n + w])


def in_reach(R: TransitFunction, v: int) -> int:
    """C-(v) = {w : R(w, v) non-empty}."""
    n = R.n
    return sum(1 << w for w in range(n) if R.table[w * n + v])

