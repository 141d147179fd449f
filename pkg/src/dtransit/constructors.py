"""Transit functions built from posets, reachability, digraphs and quasimetrics."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import (
    INF,
    BinaryRelation,
    Digraph,
    InputError,
    Quasimetric,
    ResourceError,
    TransitFunction,
    bits,
    relation_properties,
    validate_quasimetric,
)

#: Default cap on DFS node expansions for path enumeration.
DEFAULT_BUDGET = 1_000_000


def from_partial_order(rel: BinaryRelation) -> TransitFunction:
    """R(u,v) = {x : u >= x >= v} for a partial order given as pairs (u, x) meaning u >= x."""
    props = relation_properties(rel)
    if not props.partial_order:
        bad = next(k for k in ("reflexive", "antisymmetric", "transitive") if k in props.witnesses)
        raise InputError(f"relation is not a partial order: not {bad}", witness={bad: props.witnesses[bad]})
    rows, cols = rel.rows(), rel.cols()
    n = rel.n
    return TransitFunction(rel.universe, tuple(rows[u] & cols[v] for u in range(n) for v in range(n)))


def from_reachability(rel: BinaryRelation) -> TransitFunction:
    """Transit function of a reflexive, transitive relation (antisymmetry not needed)."""
    props = relation_properties(rel)
    for k in ("reflexive", "transitive"):
        if k in props.witnesses:
            raise InputError(f"relation is not {k}", witness={k: props.witnesses[k]})
    rows, cols = rel.rows(), rel.cols()
    n = rel.n
    return TransitFunction(
        rel.universe,
        tuple(1 << u if u == v else rows[u] & cols[v] for u in range(n) for v in range(n)),
    )


def reach_masks(G: Digraph) -> list[int]:
    """reach[u] = vertices reachable from u by a path of length >= 0."""
    succ = G.succ()
    n = G.n
    reach = [0] * n
    for s in range(n):
        seen = 1 << s
        frontier = succ[s] & ~seen
        while frontier:
            seen |= frontier
            nxt = 0
            for x in bits(frontier):
                nxt |= succ[x]
            frontier = nxt & ~seen
        reach[s] = seen
    return reach


def reachability_closure(G: Digraph) -> BinaryRelation:
    return BinaryRelation.from_rows(G.universe, reach_masks(G))


def is_acyclic(G: Digraph) -> bool:
    succ = G.succ()
    indeg = [0] * G.n
    for _, b in G.edges:
        indeg[b] += 1
    queue = deque(i for i in range(G.n) if indeg[i] == 0)
    done = 0
    while queue:
        x = queue.popleft()
        done += 1
        for y in bits(succ[x]):
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return done == G.n


def _transpose(n: int, rows: list[int]) -> list[int]:
    cols = [0] * n
    for u, row in enumerate(rows):
        for v in bits(row):
            cols[v] |= 1 << u
    return cols


# Path enumeration.  A DFS state is (last vertex, visited mask); everything a
# state can still contribute depends only on that pair, so revisits are
# skipped.  `allowed(visited, last)` returns the mask of legal next vertices.

def _enumerate(G: Digraph, allowed, budget: int) -> tuple[int, ...]:
    n = G.n
    acc = [0] * (n * n)
    expansions = 0
    for u in range(n):
        base = u * n
        acc[base + u] = 1 << u
        seen = set()
        stack = [(u, 1 << u)]
        while stack:
            last, visited = stack.pop()
            key = (last, visited)
            if key in seen:
                continue
            seen.add(key)
            expansions += 1
            if expansions > budget:
                raise ResourceError(f"path enumeration exceeded {budget} expansions")
            for y in bits(allowed(visited, last)):
                vis = visited | 1 << y
                acc[base + y] |= vis
                stack.append((y, vis))
    return tuple(acc)


def _simple_allowed(succ):
    def allowed(visited, last):
        return succ[last] & ~visited

    return allowed


def _shortcut_free_allowed(succ):
    def allowed(visited, last):
        jumped = 0
        for x in bits(visited & ~(1 << last)):
            jumped |= succ[x]
        return succ[last] & ~visited & ~jumped

    return allowed


def _induced_allowed(succ, strict):
    pred = _transpose(len(succ), succ)

    def allowed(visited, last):
        earlier = visited & ~(1 << last)
        cand = succ[last] & ~visited
        out = 0
        for y in bits(cand):
            if succ[y] & earlier or pred[y] & earlier:
                continue
            if strict and succ[y] >> last & 1:
                continue
            out |= 1 << y
        return out

    return allowed


def all_paths(G: Digraph, budget: int = DEFAULT_BUDGET) -> TransitFunction:
    """A_G(u,v): vertices on some directed u-v path; A_G(u,u) = {u}.

    DAGs use reach(u) & coreach(v).  Cyclic inputs fall back to simple-path
    enumeration bounded by ``budget`` expansions.
    """
    n = G.n
    if is_acyclic(G):
        reach = reach_masks(G)
        coreach = _transpose(n, reach)
        return TransitFunction(G.universe, tuple(reach[u] & coreach[v] for u in range(n) for v in range(n)))
    return TransitFunction(G.universe, _enumerate(G, _simple_allowed(G.succ()), budget))


def shortcut_free_paths(G: Digraph, budget: int = DEFAULT_BUDGET) -> TransitFunction:
    """J_G(u,v): vertices on some u-v path with no forward jump edge (x_i, x_j), j >= i+2.

    Backward edges between path vertices are allowed.
    """
    return TransitFunction(G.universe, _enumerate(G, _shortcut_free_allowed(G.succ()), budget))


def induced_paths(G: Digraph, strict: bool = False, budget: int = DEFAULT_BUDGET) -> TransitFunction:
    """Vertices on some induced u-v path.

    By default a path is induced when no edge, in either direction, joins two
    non-consecutive path vertices; a reverse edge between consecutive vertices
    is tolerated (so symmetric digraphs behave like undirected graphs).  With
    ``strict=True`` the induced subgraph must contain only the forward path
    edges.
    """
    return TransitFunction(G.universe, _enumerate(G, _induced_allowed(G.succ(), strict), budget))


@dataclass(frozen=True)
class PathList:
    paths: tuple[tuple[str, ...], ...]

    def to_json(self) -> dict:
        return {"type": "paths", "paths": [list(p) for p in self.paths]}


def simple_paths(
    G: Digraph,
    u: str,
    v: str,
    shortcut_free: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> PathList:
    """All simple (optionally shortcut-free) u-v paths in lexicographic index order."""
    uni = G.universe
    s, t = uni.idx(u), uni.idx(v)
    succ = G.succ()
    allowed = _shortcut_free_allowed(succ) if shortcut_free else _simple_allowed(succ)
    out = []
    expansions = 0

    def dfs(path, visited):
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise ResourceError(f"path enumeration exceeded {budget} expansions")
        last = path[-1]
        if last == t:
            out.append(tuple(uni.labels[i] for i in path))
            return
        for y in bits(allowed(visited, last)):
            path.append(y)
            dfs(path, visited | 1 << y)
            path.pop()

    dfs([s], 1 << s)
    return PathList(tuple(out))


def quasimetric_from_digraph(G: Digraph) -> Quasimetric:
    """Hop-count shortest-path distances; unreachable pairs are INF."""
    succ = G.succ()
    n = G.n
    rows = []
    for s in range(n):
        dist = [INF] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in bits(succ[x]):
                if dist[y] is INF:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        rows.append(tuple(dist))
    return Quasimetric(G.universe, tuple(rows))


def interval_from_quasimetric(d: Quasimetric) -> TransitFunction:
    """I_d(u,v) = {w : d(u,w) + d(w,v) = d(u,v)} if d(u,v) finite, else empty."""
    bad = validate_quasimetric(d)
    if bad:
        raise InputError(f"not a quasimetric: {bad[0].kind} at {bad[0].witness}", witness=bad)
    D = d.d
    n = d.n
    table = []
    for u in range(n):
        for v in range(n):
            duv = D[u][v]
            if duv is INF:
                table.append(0)
                continue
            m = 0
            for w in range(n):
                if D[u][w] + D[w][v] == duv:
                    m |= 1 << w
            table.append(m)
    return TransitFunction(d.universe, tuple(table))
