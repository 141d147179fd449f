"""Axiom catalog for set-valued functions R: V x V -> 2^V.

Each axiom is a quantified predicate over vertex indices.  Quantified
variables are scanned in the fixed order ``u, v, w, x, y`` (those that occur),
each ranging over all of V in index order, so the first failing tuple found
is the lexicographically smallest one.  The ``u != v`` guards of t2a and the
tr-family are applied literally.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .core import InputError, TransitFunction, bits


class AxiomId(str, Enum):
    t0 = "t0"
    t1 = "t1"
    t1star = "t1star"
    t2 = "t2"
    t2a = "t2a"
    t3 = "t3"
    tr0 = "tr0"
    tr1 = "tr1"
    tr2 = "tr2"
    tr = "tr"
    q = "q"
    m = "m"
    b1_1 = "b1_1"
    b1_2 = "b1_2"
    b2_1 = "b2_1"
    b2_2 = "b2_2"
    b2 = "b2"
    b3_1 = "b3_1"
    b3_2 = "b3_2"
    b4 = "b4"
    b5 = "b5"
    Ch = "Ch"
    j0 = "j0"
    Mod = "Mod"
    p = "p"
    hy = "hy"
    a5 = "a5"
    a5star = "a5star"
    r = "r"
    j2 = "j2"
    j2prime = "j2prime"

    def __str__(self):
        return self.value


ALL_AXIOMS: tuple[AxiomId, ...] = tuple(AxiomId)


def axiom_id(a) -> AxiomId:
    if isinstance(a, AxiomId):
        return a
    try:
        return AxiomId(str(a).strip())
    except ValueError:
        raise InputError(f"unknown axiom id {a!r}", witness=a) from None


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


# Pointwise predicates.  T is the flat mask table, n the universe size.

def _t0(T, n, u, v, w):
    return not (T[u * n + w] and T[w * n + v]) or bool(T[u * n + v])


def _t1(T, n, u, v):
    s = T[u * n + v]
    need = 1 << u | 1 << v
    return not s or s & need == need


def _t1star(T, n, u, v):
    s = T[u * n + v]
    return not s or bool(s >> u & 1)


def _t2(T, n, u, v):
    return T[u * n + v] == T[v * n + u]


def _t2a(T, n, u, v):
    return not T[u * n + v] or not T[v * n + u]


def _t3(T, n, u):
    return T[u * n + u] == 1 << u


def _tr0(T, n, u, v, w):
    return not (T[u * n + w] and T[w * n + v]) or bool(T[u * n + v] >> w & 1)


def _tr1(T, n, u, v, w):
    a, b = T[u * n + w], T[w * n + v]
    return not (a and b) or _sub(a | b, T[u * n + v])


def _tr2(T, n, u, v, w):
    return bool(T[u * n + w] and T[w * n + v]) or not T[u * n + v] >> w & 1


def _tr(T, n, u, v, w):
    return bool(T[u * n + w] and T[w * n + v]) == bool(T[u * n + v] >> w & 1)


def _q(T, n, u, v, w):
    i = T[u * n + w] & T[w * n + v]
    return i == 0 or i == 1 << w


def _m(T, n, u, v, x, y):
    s = T[u * n + v]
    return not (s >> x & 1 and s >> y & 1) or _sub(T[x * n + y], s)


def _b1_1(T, n, u, v, x):
    return not (T[u * n + v] >> x & 1 and x != v) or not T[u * n + x] >> v & 1


def _b1_2(T, n, u, v, x):
    return not (T[u * n + v] >> x & 1 and x != u) or not T[x * n + v] >> u & 1


def _b2_1(T, n, u, v, x):
    s = T[u * n + v]
    return not s >> x & 1 or _sub(T[u * n + x], s)


def _b2_2(T, n, u, v, x):
    s = T[u * n + v]
    return not s >> x & 1 or _sub(T[x * n + v], s)


def _b2(T, n, u, v, x):
    s = T[u * n + v]
    return not s >> x & 1 or _sub(T[u * n + x] | T[x * n + v], s)


def _b3_1(T, n, u, v, x, y):
    return not (T[u * n + v] >> x & 1 and T[u * n + x] >> y & 1) or bool(T[y * n + v] >> x & 1)


def _b3_2(T, n, u, v, x, y):
    return not (T[u * n + v] >> x & 1 and T[x * n + v] >> y & 1) or bool(T[u * n + y] >> x & 1)


def _b4(T, n, u, v, x):
    return not T[u * n + v] >> x & 1 or T[u * n + x] & T[x * n + v] == 1 << x


def _b5(T, n, u, v, w):
    a, b = T[u * n + w], T[w * n + v]
    return a & b != 1 << w or _sub(a | b, T[u * n + v])


def _Ch(T, n, u, v, w, x, y):
    if not (T[u * n + v] >> x & 1 and T[x * n + w] >> y & 1):
        return True
    return bool((T[u * n + w] | T[v * n + w] | T[u * n + v]) >> y & 1)


def _j0(T, n, u, v, x, y):
    return not (T[u * n + y] >> x & 1 and T[x * n + v] >> y & 1) or bool(T[u * n + v] >> x & 1)


def _Mod(T, n, u, v, w):
    a, b = T[u * n + w], T[w * n + v]
    return not (a and b) or bool(T[u * n + v] & a & b)


def _p(T, n, u, v, w):
    s = T[u * n + v]
    return not s >> w & 1 or T[u * n + w] | T[w * n + v] == s


def _hy(T, n, v, x, y):
    if not (T[x * n + v] and T[y * n + v]):
        return True
    return bool(T[y * n + v] >> x & 1 or T[x * n + v] >> y & 1)


def _a5star(T, n, u, v, x):
    a, b = T[u * n + x], T[x * n + v]
    return not (a and b) or a | b == T[u * n + v]


def _a5(T, n, u, v, x):
    a, b = T[u * n + x], T[x * n + v]
    return a & b != 1 << x or a | b == T[u * n + v]


def _r(T, n, u, v):
    if T[u * n + v] or T[v * n + u]:
        return True
    return any(T[w * n + u] and T[w * n + v] for w in range(n))


def _j2(T, n, u, v, x):
    ux, xv, uv = 1 << u | 1 << x, 1 << x | 1 << v, 1 << u | 1 << v
    if T[u * n + x] == ux and T[x * n + v] == xv and T[u * n + v] != uv:
        return bool(T[u * n + v] >> x & 1)
    return True


def _j2prime(T, n, u, v, x, y):
    if not (T[u * n + y] >> x & 1 and T[x * n + v] >> y & 1):
        return True
    if (
        T[u * n + x] == 1 << u | 1 << x
        and T[x * n + y] == 1 << x | 1 << y
        and T[y * n + v] == 1 << y | 1 << v
        and T[u * n + v] != 1 << u | 1 << v
    ):
        return bool(T[u * n + v] >> x & 1)
    return True


@dataclass(frozen=True)
class AxiomSpec:
    id: AxiomId
    variables: tuple[str, ...]
    formula: str
    predicate: Callable[..., bool]
    distinct_uv: bool = False


def _spec(a, variables, formula, pred, distinct_uv=False):
    return AxiomSpec(AxiomId(a), tuple(variables), formula, pred, distinct_uv)


CATALOG: Mapping[AxiomId, AxiomSpec] = {
    s.id: s
    for s in [
        _spec("t0", "uvw", "R(u,w)≠∅ ∧ R(w,v)≠∅ ⇒ R(u,v)≠∅", _t0),
        _spec("t1", "uv", "R(u,v)≠∅ ⇒ {u,v}⊆R(u,v)", _t1),
        _spec("t1star", "uv", "R(u,v)≠∅ ⇒ u∈R(u,v)", _t1star),
        _spec("t2", "uv", "R(u,v)=R(v,u)", _t2),
        _spec("t2a", "uv", "u≠v ∧ R(u,v)≠∅ ⇒ R(v,u)=∅", _t2a, True),
        _spec("t3", "u", "R(u,u)={u}", _t3),
        _spec("tr0", "uvw", "u≠v ∧ R(u,w)≠∅ ∧ R(w,v)≠∅ ⇒ w∈R(u,v)", _tr0, True),
        _spec("tr1", "uvw", "u≠v ∧ R(u,w)≠∅ ∧ R(w,v)≠∅ ⇒ R(u,w)∪R(w,v)⊆R(u,v)", _tr1, True),
        _spec("tr2", "uvw", "u≠v ∧ (R(u,w)=∅ ∨ R(w,v)=∅) ⇒ w∉R(u,v)", _tr2, True),
        _spec("tr", "uvw", "u≠v ⇒ (R(u,w)≠∅ ∧ R(w,v)≠∅ ⇔ w∈R(u,v))", _tr, True),
        _spec("q", "uvw", "R(u,w)∩R(w,v) ∈ {{w},∅}", _q),
        _spec("m", "uvxy", "x∈R(u,v) ∧ y∈R(u,v) ⇒ R(x,y)⊆R(u,v)", _m),
        _spec("b1_1", "uvx", "x∈R(u,v) ∧ x≠v ⇒ v∉R(u,x)", _b1_1),
        _spec("b1_2", "uvx", "x∈R(u,v) ∧ x≠u ⇒ u∉R(x,v)", _b1_2),
        _spec("b2_1", "uvx", "x∈R(u,v) ⇒ R(u,x)⊆R(u,v)", _b2_1),
        _spec("b2_2", "uvx", "x∈R(u,v) ⇒ R(x,v)⊆R(u,v)", _b2_2),
        _spec("b2", "uvx", "x∈R(u,v) ⇒ R(u,x)∪R(x,v)⊆R(u,v)", _b2),
        _spec("b3_1", "uvxy", "x∈R(u,v) ∧ y∈R(u,x) ⇒ x∈R(y,v)", _b3_1),
        _spec("b3_2", "uvxy", "x∈R(u,v) ∧ y∈R(x,v) ⇒ x∈R(u,y)", _b3_2),
        _spec("b4", "uvx", "x∈R(u,v) ⇒ R(u,x)∩R(x,v)={x}", _b4),
        _spec("b5", "uvw", "R(u,w)∩R(w,v)={w} ⇒ R(u,w)∪R(w,v)⊆R(u,v)", _b5),
        _spec("Ch", "uvwxy", "x∈R(u,v) ∧ y∈R(x,w) ⇒ y∈R(u,w) ∨ y∈R(v,w) ∨ y∈R(u,v)", _Ch),
        _spec("j0", "uvxy", "x∈R(u,y) ∧ y∈R(x,v) ⇒ x∈R(u,v)", _j0),
        _spec("Mod", "uvw", "R(u,w)≠∅ ∧ R(w,v)≠∅ ⇒ R(u,v)∩R(u,w)∩R(w,v)≠∅", _Mod),
        _spec("p", "uvw", "w∈R(u,v) ⇒ R(u,w)∪R(w,v)=R(u,v)", _p),
        _spec("hy", "vxy", "R(x,v)≠∅ ∧ R(y,v)≠∅ ⇒ x∈R(y,v) ∨ y∈R(x,v)", _hy),
        _spec("a5", "uvx", "R(u,x)∩R(x,v)={x} ⇒ R(u,x)∪R(x,v)=R(u,v)", _a5),
        _spec("a5star", "uvx", "R(u,x)≠∅ ∧ R(x,v)≠∅ ⇒ R(u,x)∪R(x,v)=R(u,v)", _a5star),
        _spec("r", "uv", "R(u,v)=∅ ∧ R(v,u)=∅ ⇒ ∃w: R(w,u)≠∅ ∧ R(w,v)≠∅", _r),
        _spec("j2", "uvx", "R(u,x)={u,x} ∧ R(x,v)={x,v} ∧ R(u,v)≠{u,v} ⇒ x∈R(u,v)", _j2),
        _spec(
            "j2prime",
            "uvxy",
            "x∈R(u,y) ∧ y∈R(x,v) ∧ R(u,x)={u,x} ∧ R(x,y)={x,y} ∧ R(y,v)={y,v} ∧ R(u,v)≠{u,v} ⇒ x∈R(u,v)",
            _j2prime,
        ),
    ]
}


@dataclass(frozen=True)
class AxiomReport:
    """Verdict for one axiom.  ``witness`` maps variable names to labels."""

    axiom: AxiomId
    holds: bool
    checked: int
    witness: dict[str, str] | None = None
    rendering: str | None = None
    formula: str = ""

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom.value,
            "holds": self.holds,
            "formula": self.formula,
            "witness": self.witness,
            "rendering": self.rendering,
            "checked": self.checked,
        }


def _instances(spec: AxiomSpec, n: int):
    k = len(spec.variables)
    if spec.distinct_uv:
        return (t for t in product(range(n), repeat=k) if t[0] != t[1])
    return product(range(n), repeat=k)


def _offender(T, n, a: AxiomId, b: Mapping[str, int]) -> tuple[str, int] | None:
    """An extra element that makes a failed set comparison concrete."""

    def first(mask):
        return next(iter(bits(mask)), None)

    R = lambda i, j: T[i * n + j]  # noqa: E731
    u, v, w, x, y = (b.get(k) for k in "uvwxy")
    if a in (AxiomId.b2_1, AxiomId.b2_2, AxiomId.b2):
        lhs = {AxiomId.b2_1: R(u, x), AxiomId.b2_2: R(x, v), AxiomId.b2: R(u, x) | R(x, v)}[a]
        e = first(lhs & ~R(u, v))
        return ("w", e) if e is not None else None
    if a in (AxiomId.tr1, AxiomId.b5):
        e = first((R(u, w) | R(w, v)) & ~R(u, v))
        return ("x", e) if e is not None else None
    if a is AxiomId.m:
        e = first(R(x, y) & ~R(u, v))
        return ("z", e) if e is not None else None
    if a is AxiomId.q:
        e = first(R(u, w) & R(w, v) & ~(1 << w))
        return ("x", e) if e is not None else None
    if a is AxiomId.b4:
        e = first((R(u, x) & R(x, v)) ^ (1 << x))
        return ("y", e) if e is not None else None
    if a is AxiomId.p:
        e = first((R(u, w) | R(w, v)) ^ R(u, v))
        return ("x", e) if e is not None else None
    if a in (AxiomId.a5, AxiomId.a5star):
        e = first((R(u, x) | R(x, v)) ^ R(u, v))
        return ("y", e) if e is not None else None
    return None


_TERM = re.compile(r"R\(([uvwxyz]),([uvwxyz])\)")
_VAR = re.compile(r"(?<![A-Za-z_])([uvwxyz])(?![A-Za-z_])")


def render(R: TransitFunction, a, binding: Mapping[str, str]) -> str:
    """Instantiate the formula of ``a`` at ``binding`` and list the sets used."""
    spec = CATALOG[axiom_id(a)]
    uni = R.universe
    body = spec.formula
    values = []
    for i, j in dict.fromkeys(_TERM.findall(body)):
        if i in binding and j in binding:
            s = R.get(uni.idx(binding[i]), uni.idx(binding[j]))
            members = ",".join(uni.names(s))
            values.append(f"R({binding[i]},{binding[j]})={{{members}}}")
    text = _VAR.sub(lambda mt: binding.get(mt.group(1), mt.group(1)), body)
    return text + " fails; " + ", ".join(values) if values else text + " fails"


def holds_at(R: TransitFunction, a, binding: Mapping[str, str]) -> bool:
    """Evaluate a single instantiation of axiom ``a``."""
    spec = CATALOG[axiom_id(a)]
    idx = [R.universe.idx(binding[k]) for k in spec.variables]
    if spec.distinct_uv and idx[0] == idx[1]:
        return True
    return spec.predicate(R.table, R.n, *idx)


def check_axiom(R: TransitFunction, a) -> AxiomReport:
    aid = axiom_id(a)
    spec = CATALOG[aid]
    T, n = R.table, R.n
    pred = spec.predicate
    checked = 0
    for t in _instances(spec, n):
        checked += 1
        if not pred(T, n, *t):
            b = dict(zip(spec.variables, t))
            labs = R.universe.labels
            witness = {k: labs[i] for k, i in b.items()}
            extra = _offender(T, n, aid, b)
            text = render(R, aid, witness)
            if extra is not None:
                witness[extra[0]] = labs[extra[1]]
                text += f"; offending element {extra[0]}={labs[extra[1]]}"
            return AxiomReport(aid, False, checked, witness, text, spec.formula)
    return AxiomReport(aid, True, checked, None, None, spec.formula)


def satisfies(R: TransitFunction, a) -> bool:
    """Fast boolean check without building a report."""
    spec = CATALOG[axiom_id(a)]
    T, n, pred = R.table, R.n, spec.predicate
    return all(pred(T, n, *t) for t in _instances(spec, n))


def check_many(R: TransitFunction, ids: Iterable) -> dict[AxiomId, AxiomReport]:
    ids = [axiom_id(a) for a in ids]
    if not ids:
        raise InputError("no axioms requested")
    if len(set(ids)) != len(ids):
        raise InputError("duplicate axiom ids", witness=[str(a) for a in ids])
    return {a: check_axiom(R, a) for a in ids}


@dataclass(frozen=True)
class ClassSet:
    directed_transit_function: bool
    poset_function: bool
    geometric: bool
    weakly_geometric: bool

    def to_json(self) -> dict:
        return {
            "directed_transit_function": self.directed_transit_function,
            "poset_function": self.poset_function,
            "geometric": self.geometric,
            "weakly_geometric": self.weakly_geometric,
        }


DTF_AXIOMS = ("t0", "t1", "t3")
POSET_AXIOMS = DTF_AXIOMS + ("t2a", "tr1", "tr2")
GEOMETRIC_AXIOMS = DTF_AXIOMS + ("tr2", "b2", "b3_1", "b3_2")
WEAKLY_GEOMETRIC_AXIOMS = DTF_AXIOMS + ("tr2", "b2", "b1_1", "b1_2")


def classify(R: TransitFunction) -> ClassSet:
    needed = set(POSET_AXIOMS + GEOMETRIC_AXIOMS + WEAKLY_GEOMETRIC_AXIOMS)
    ok = {a: satisfies(R, a) for a in sorted(needed)}
    return ClassSet(
        directed_transit_function=all(ok[a] for a in DTF_AXIOMS),
        poset_function=all(ok[a] for a in POSET_AXIOMS),
        geometric=all(ok[a] for a in GEOMETRIC_AXIOMS),
        weakly_geometric=all(ok[a] for a in WEAKLY_GEOMETRIC_AXIOMS),
    )


def failing(R: TransitFunction, ids: Sequence) -> list[AxiomId]:
    return [axiom_id(a) for a in ids if not satisfies(R, a)]
