"""Exhaustive and random families of small digraphs, posets and trees."""
from __future__ import annotations

import random
from itertools import combinations, product
from typing import Iterator

from .core import BinaryRelation, Digraph, Universe

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def universe(n: int) -> Universe:
    return Universe(tuple(LETTERS[:n]))


def all_digraphs(n: int) -> Iterator[Digraph]:
    """All 2^(n(n-1)) loopless digraphs on n labelled vertices."""
    uni = universe(n)
    slots = [(a, b) for a in range(n) for b in range(n) if a != b]
    for mask in range(1 << len(slots)):
        yield Digraph(uni, frozenset(s for k, s in enumerate(slots) if mask >> k & 1))


def _orientations(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every choice of none / a->b / b->a on each unordered pair."""
    pairs = list(combinations(range(n), 2))
    for choice in product(range(3), repeat=len(pairs)):
        yield [(a, b) if c == 1 else (b, a) for (a, b), c in zip(pairs, choice) if c]


def all_partial_orders(n: int) -> Iterator[BinaryRelation]:
    """All partial orders on n labelled elements.

    Reflexive antisymmetric relations are generated by orienting pairs; those
    that are not transitively closed are dropped.
    """
    uni = universe(n)
    for arcs in _orientations(n):
        rows = [1 << i for i in range(n)]
        for a, b in arcs:
            rows[a] |= 1 << b
        if all(rows[b] & ~rows[a] == 0 for a in range(n) for b in range(n) if rows[a] >> b & 1):
            yield BinaryRelation.from_rows(uni, rows)


def count_hasse_diagrams(n: int) -> int:
    """Number of acyclic shortcut-free digraphs on n labelled vertices.

    Hasse diagrams are in bijection with partial orders, so this is an
    independent count of labelled posets.
    """
    from .constructors import is_acyclic
    from .derive import has_shortcut

    uni = universe(n)
    count = 0
    for arcs in _orientations(n):
        G = Digraph(uni, frozenset(arcs))
        if is_acyclic(G) and not has_shortcut(G):
            count += 1
    return count


def _parent_graphs(n: int, allow_many_roots: bool) -> Iterator[tuple[Digraph, int]]:
    uni = universe(n)
    choices = range(-1, n)
    for parent in product(choices, repeat=n):
        roots = sum(1 for p in parent if p == -1)
        if roots == 0 or (roots > 1 and not allow_many_roots):
            continue
        if any(p == i for i, p in enumerate(parent)):
            continue
        # acyclic iff every vertex reaches a root by following parents
        ok = True
        for i in range(n):
            seen = 0
            j = i
            while parent[j] != -1:
                if seen >> j & 1:
                    ok = False
                    break
                seen |= 1 << j
                j = parent[j]
            if not ok:
                break
        if ok:
            edges = frozenset((p, i) for i, p in enumerate(parent) if p != -1)
            yield Digraph(uni, edges), roots


def all_rooted_trees(n: int) -> Iterator[Digraph]:
    """All n^(n-1) rooted trees (arborescences) on n labelled vertices."""
    for G, _ in _parent_graphs(n, allow_many_roots=False):
        yield G


def all_rooted_forests(n: int, max_trees: int = 3, min_trees: int = 1) -> Iterator[Digraph]:
    for G, k in _parent_graphs(n, allow_many_roots=True):
        if min_trees <= k <= max_trees:
            yield G


def random_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    uni = universe(n)
    return Digraph(uni, frozenset((a, b) for a in range(n) for b in range(n) if a != b and rng.random() < p))


def random_dag(rng: random.Random, n: int, p: float) -> Digraph:
    """Random DAG: edges respect a random vertex permutation."""
    uni = universe(n)
    perm = list(range(n))
    rng.shuffle(perm)
    return Digraph(
        uni,
        frozenset((perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p),
    )
