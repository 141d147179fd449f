"""Finite universes, vertex sets and the basic value types.

Vertex sets are Python ints used as bitsets: bit ``i`` is set iff the vertex
with index ``i`` is a member.  All heavy computation elsewhere in the package
works on these raw masks; :class:`VertexSet` is the labelled view handed to
callers.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

#: Largest universe accepted by :class:`Universe`.  Raise it if you really
#: need bigger instances; every algorithm here is at least cubic.
MAX_VERTICES = 64


class InputError(ValueError):
    """Malformed or out-of-contract input.  ``witness`` carries detail."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceError(RuntimeError):
    """An enumeration ran past its expansion budget."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class _Infinity:
    """Saturating infinite distance.  A singleton, not a float."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("dtransit.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


@dataclass(frozen=True)
class Universe:
    labels: tuple[str, ...]
    index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise InputError("universe must be non-empty")
        if len(labels) > MAX_VERTICES:
            raise InputError(f"universe has {len(labels)} vertices, limit is {MAX_VERTICES}")
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            dup = next(lab for lab in labels if labels.count(lab) > 1)
            raise InputError(f"duplicate vertex label {dup!r}", witness=dup)
        object.__setattr__(self, "index", index)

    @classmethod
    def of(cls, labels: Iterable[str] | int) -> "Universe":
        if isinstance(labels, int):
            labels = [str(i) for i in range(labels)]
        return cls(tuple(labels))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def idx(self, label) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise InputError(f"unknown vertex label {label!r}", witness=label) from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.idx(lab)
        return m

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]


@dataclass(frozen=True)
class VertexSet:
    """Immutable labelled subset of a universe (bitset semantics)."""

    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> len(self.universe):
            raise InputError("vertex set has members outside the universe")

    @classmethod
    def of(cls, universe: Universe, labels: Iterable[str]) -> "VertexSet":
        return cls(universe, universe.mask(labels))

    def _other(self, other: "VertexSet") -> int:
        if other.universe != self.universe:
            raise InputError("vertex sets over different universes")
        return other.mask

    def __or__(self, other):
        return VertexSet(self.universe, self.mask | self._other(other))

    def __and__(self, other):
        return VertexSet(self.universe, self.mask & self._other(other))

    def __sub__(self, other):
        return VertexSet(self.universe, self.mask & ~self._other(other))

    def __le__(self, other):
        return self.mask & ~self._other(other) == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __contains__(self, label) -> bool:
        return bool(self.mask >> self.universe.idx(label) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.universe.names(self.mask))

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __repr__(self):
        return "{" + ",".join(self) + "}"


def _pair_index(universe: Universe, pairs: Iterable[Sequence[str]]) -> set[tuple[int, int]]:
    out = set()
    for p in pairs:
        if len(p) != 2:
            raise InputError(f"expected a pair, got {p!r}", witness=p)
        out.add((universe.idx(p[0]), universe.idx(p[1])))
    return out


@dataclass(frozen=True)
class TransitFunction:
    """Total map (u, v) -> subset of V, stored as a flat row-major mask table.

    No axiom is enforced here: arbitrary set-valued functions are legal.
    """

    universe: Universe
    table: tuple[int, ...]

    def __post_init__(self):
        n = len(self.universe)
        table = tuple(int(m) for m in self.table)
        if len(table) != n * n:
            raise InputError(f"table has {len(table)} entries, expected {n * n}")
        full = self.universe.full
        for m in table:
            if m < 0 or m & ~full:
                raise InputError("transit set outside the universe")
        object.__setattr__(self, "table", table)

    @property
    def n(self) -> int:
        return len(self.universe)

    @classmethod
    def from_dict(
        cls,
        labels: Iterable[str] | Universe,
        entries: Mapping[tuple[str, str], Iterable[str]],
        strict: bool = False,
    ) -> "TransitFunction":
        """Build from ``{(u, v): members}``.

        Missing off-diagonal pairs default to the empty set and missing
        diagonal pairs to ``{u}``; ``strict=True`` rejects omissions.
        """
        uni = labels if isinstance(labels, Universe) else Universe.of(labels)
        n = len(uni)
        table = [None] * (n * n)
        for (u, v), members in entries.items():
            i, j = uni.idx(u), uni.idx(v)
            table[i * n + j] = uni.mask(members)
        for i in range(n):
            for j in range(n):
                if table[i * n + j] is None:
                    if strict:
                        raise InputError(
                            f"missing transit set for ({uni.labels[i]},{uni.labels[j]})",
                            witness=(uni.labels[i], uni.labels[j]),
                        )
                    table[i * n + j] = 1 << i if i == j else 0
        return cls(uni, tuple(table))

    def get(self, u: int, v: int) -> int:
        return self.table[u * self.n + v]

    def __call__(self, u: str, v: str) -> VertexSet:
        return tf_lookup(self, u, v)

    def as_dict(self) -> dict[tuple[str, str], list[str]]:
        labs = self.universe.labels
        n = self.n
        return {
            (labs[i], labs[j]): self.universe.names(self.table[i * n + j])
            for i in range(n)
            for j in range(n)
        }


def tf_lookup(R: TransitFunction, u: str, v: str) -> VertexSet:
    uni = R.universe
    return VertexSet(uni, R.get(uni.idx(u), uni.idx(v)))


@dataclass(frozen=True)
class Digraph:
    """Loopless simple digraph; edges are index pairs."""

    universe: Universe
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        edges = frozenset((int(a), int(b)) for a, b in self.edges)
        n = len(self.universe)
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise InputError("edge endpoint outside the universe")
            if a == b:
                lab = self.universe.labels[a]
                raise InputError(f"self-loop at {lab!r}", witness=(lab, lab))
        object.__setattr__(self, "edges", edges)

    @classmethod
    def of(cls, labels: Iterable[str] | Universe, edges: Iterable[Sequence[str]]) -> "Digraph":
        uni = labels if isinstance(labels, Universe) else Universe.of(labels)
        return cls(uni, frozenset(_pair_index(uni, edges)))

    @property
    def n(self) -> int:
        return len(self.universe)

    def succ(self) -> list[int]:
        out = [0] * self.n
        for a, b in self.edges:
            out[a] |= 1 << b
        return out

    def pred(self) -> list[int]:
        out = [0] * self.n
        for a, b in self.edges:
            out[b] |= 1 << a
        return out

    def labelled_edges(self) -> list[tuple[str, str]]:
        labs = self.universe.labels
        return [(labs[a], labs[b]) for a, b in sorted(self.edges)]


@dataclass(frozen=True)
class BinaryRelation:
    universe: Universe
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = len(self.universe)
        pairs = frozenset((int(a), int(b)) for a, b in self.pairs)
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise InputError("relation pair outside the universe")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, labels: Iterable[str] | Universe, pairs: Iterable[Sequence[str]]) -> "BinaryRelation":
        uni = labels if isinstance(labels, Universe) else Universe.of(labels)
        return cls(uni, frozenset(_pair_index(uni, pairs)))

    @classmethod
    def from_rows(cls, universe: Universe, rows: Sequence[int]) -> "BinaryRelation":
        return cls(universe, frozenset((i, j) for i, row in enumerate(rows) for j in bits(row)))

    @property
    def n(self) -> int:
        return len(self.universe)

    def rows(self) -> list[int]:
        """rows[u] = {v : (u, v) in rel}."""
        out = [0] * self.n
        for a, b in self.pairs:
            out[a] |= 1 << b
        return out

    def cols(self) -> list[int]:
        """cols[v] = {u : (u, v) in rel}."""
        out = [0] * self.n
        for a, b in self.pairs:
            out[b] |= 1 << a
        return out

    def labelled_pairs(self) -> list[tuple[str, str]]:
        labs = self.universe.labels
        return [(labs[a], labs[b]) for a, b in sorted(self.pairs)]


def identity_relation(universe: Universe) -> BinaryRelation:
    return BinaryRelation(universe, frozenset((i, i) for i in range(len(universe))))


@dataclass(frozen=True)
class RelationProperties:
    reflexive: bool
    transitive: bool
    antisymmetric: bool
    partial_order: bool
    witnesses: dict = field(default_factory=dict, compare=False)


def relation_properties(rel: BinaryRelation) -> RelationProperties:
    """Reflexivity, transitivity and antisymmetry checked by definition.

    ``witnesses`` maps each failing property to the first violating tuple
    (labels) in index order.
    """
    labs = rel.universe.labels
    n = rel.n
    rows = rel.rows()
    wit = {}
    for x in range(n):
        if not rows[x] >> x & 1:
            wit["reflexive"] = (labs[x],)
            break
    found = False
    for x in range(n):
        for z in bits(rows[x]):
            missing = rows[z] & ~rows[x]
            if missing:
                y = (missing & -missing).bit_length() - 1
                wit["transitive"] = (labs[x], labs[z], labs[y])
                found = True
                break
        if found:
            break
    for x in range(n):
        hit = [y for y in bits(rows[x]) if y != x and rows[y] >> x & 1]
        if hit:
            wit["antisymmetric"] = (labs[x], labs[hit[0]])
            break
    refl = "reflexive" not in wit
    trans = "transitive" not in wit
    anti = "antisymmetric" not in wit
    return RelationProperties(refl, trans, anti, refl and trans and anti, wit)


@dataclass(frozen=True)
class Quasimetric:
    """Distance matrix; entries are non-negative numbers or :data:`INF`.

    Construction does not validate; see :func:`validate_quasimetric`.
    """

    universe: Universe
    d: tuple[tuple, ...]

    def __post_init__(self):
        n = len(self.universe)
        d = tuple(tuple(INF if _is_inf(x) else x for x in row) for row in self.d)
        if len(d) != n or any(len(row) != n for row in d):
            raise InputError(f"distance matrix must be {n}x{n}")
        object.__setattr__(self, "d", d)

    @property
    def n(self) -> int:
        return len(self.universe)


def _is_inf(x) -> bool:
    if x is INF:
        return True
    if isinstance(x, str):
        return x.lower() in ("inf", "infinity")
    return isinstance(x, float) and x == float("inf")


@dataclass(frozen=True)
class QuasimetricViolation:
    kind: str  # "diagonal" | "positivity" | "negative" | "triangle"
    witness: tuple[str, ...]


def validate_quasimetric(q: Quasimetric) -> list[QuasimetricViolation]:
    """All violations of zero diagonal, positivity and the triangle inequality.

    Empty list means ``q`` is a valid quasimetric.  Triangle witnesses are
    ``(x, z, y)`` with ``d(x,z) + d(z,y) < d(x,y)``.
    """
    labs = q.universe.labels
    d = q.d
    n = q.n
    out = []
    for x in range(n):
        for y in range(n):
            val = d[x][y]
            numeric = isinstance(val, numbers.Real) and not isinstance(val, bool) and val == val
            if val is not INF and not numeric:
                out.append(QuasimetricViolation("type", (labs[x], labs[y])))
            elif val is not INF and val < 0:
                out.append(QuasimetricViolation("negative", (labs[x], labs[y])))
            elif x == y and val != 0:
                out.append(QuasimetricViolation("diagonal", (labs[x],)))
            elif x != y and val == 0:
                out.append(QuasimetricViolation("positivity", (labs[x], labs[y])))
    if out:
        return out
    for x, z, y in product(range(n), repeat=3):
        if d[x][z] + d[z][y] < d[x][y]:
            out.append(QuasimetricViolation("triangle", (labs[x], labs[z], labs[y])))
    return out
