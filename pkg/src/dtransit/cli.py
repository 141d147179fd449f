"""Command-line front end.  Every command reads and writes JSON.

Exit codes: 0 success, 1 semantic negative (an axiom fails, a suite check
fails, a search space is exhausted), 2 bad input or usage, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from functools import partial
from typing import Sequence

from . import constructors as C
from .axioms import ALL_AXIOMS, axiom_id, check_many, classify
from .core import BinaryRelation, Digraph, InputError, Quasimetric, ResourceError, TransitFunction
from .derive import digraph_classify, transitive_reduction, underlying_graph
from .io import dumps, load, to_json

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _expect(obj, kinds, what: str):
    if not isinstance(obj, kinds):
        raise InputError(f"expected {what}, got {type(obj).__name__}")
    return obj


def _axiom_list(text: str) -> list:
    if text.strip() == "all":
        return list(ALL_AXIOMS)
    return [axiom_id(a.strip()) for a in text.split(",") if a.strip()]


def _cmd_build(args):
    obj = load(args.input)
    kind = args.source
    if kind == "poset":
        R = C.from_partial_order(_expect(obj, BinaryRelation, "a relation"))
    elif kind == "reach":
        if isinstance(obj, Digraph):
            obj = C.reachability_closure(obj)
        R = C.from_reachability(_expect(obj, BinaryRelation, "a relation or digraph"))
    elif kind == "interval":
        if isinstance(obj, Digraph):
            obj = C.quasimetric_from_digraph(obj)
        R = C.interval_from_quasimetric(_expect(obj, Quasimetric, "a quasimetric or digraph"))
    else:
        G = _expect(obj, Digraph, "a digraph")
        if kind == "allpaths":
            R = C.all_paths(G, budget=args.budget)
        elif kind == "scfree":
            R = C.shortcut_free_paths(G, budget=args.budget)
        else:
            R = C.induced_paths(G, strict=args.strict_induced, budget=args.budget)
    return to_json(R), EXIT_OK


def _transit(args) -> TransitFunction:
    return _expect(load(args.input, strict=args.strict), TransitFunction, "a transit function")


def _cmd_check(args):
    R = _transit(args)
    reports = check_many(R, _axiom_list(args.axioms))
    ok = all(r.holds for r in reports.values())
    doc = {"all_hold": ok, "reports": [r.to_json() for r in reports.values()]}
    return doc, EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_classify(args):
    return classify(_transit(args)).to_json(), EXIT_OK


def _cmd_underlying(args):
    return to_json(underlying_graph(_transit(args))), EXIT_OK


def _cmd_reduce(args):
    G = _expect(load(args.input), Digraph, "a digraph")
    return to_json(transitive_reduction(G)), EXIT_OK


def _cmd_graphinfo(args):
    G = _expect(load(args.input), Digraph, "a digraph")
    return digraph_classify(G).to_json(), EXIT_OK


def _cmd_verify(args):
    from .verify import run_paper_suite

    outcomes = run_paper_suite()
    ok = all(o.passed for o in outcomes)
    doc = {
        "suite": args.suite,
        "all_passed": ok,
        "passed": sum(o.passed for o in outcomes),
        "failed": sum(not o.passed for o in outcomes),
        "outcomes": [o.to_json() for o in outcomes],
    }
    return doc, EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_mine(args):
    from .miner import SearchSpec, mine

    spec = SearchSpec(
        n=args.n,
        require=_axiom_list(args.require) if args.require else [],
        forbid=_axiom_list(args.forbid) if args.forbid else [],
        baked=_axiom_list(args.baked) if args.baked else [],
        mode="random" if args.random else "exhaustive",
        budget=args.budget,
        seed=args.seed,
    )
    res = mine(spec)
    code = {"witness_found": EXIT_OK, "exhausted": EXIT_NEGATIVE, "budget_exceeded": EXIT_RESOURCE}
    return res.to_json(), code[res.status]


def _cmd_paths(args):
    G = _expect(load(args.input), Digraph, "a digraph")
    for lab in (args.source, args.target):
        if lab not in G.universe.index:
            raise InputError(f"unknown vertex {lab!r}")
    pl = C.simple_paths(G, args.source, args.target, shortcut_free=args.shortcut_free, budget=args.budget)
    return pl.to_json(), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", help="write the JSON result here instead of standard output")
    p = _Parser(prog="dtransit", description="Directed transit functions on small digraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    add = partial(sub.add_parser, parents=[common])

    b = add("build", help="construct a transit function")
    b.add_argument("--from", dest="source", required=True,
                   choices=["poset", "reach", "allpaths", "scfree", "induced", "interval"])
    b.add_argument("--strict-induced", action="store_true",
                   help="also forbid backward edges between path vertices")
    b.add_argument("--budget", type=int, default=C.DEFAULT_BUDGET)
    b.add_argument("input")
    b.set_defaults(func=_cmd_build)

    c = add("check", help="check axioms and report witnesses")
    c.add_argument("--axioms", default="all", help="comma-separated axiom ids, or 'all'")
    c.add_argument("--strict", action="store_true", help="reject omitted transit entries")
    c.add_argument("input")
    c.set_defaults(func=_cmd_check)

    for name, func, helptext in (
        ("classify", _cmd_classify, "report the named classes"),
        ("underlying", _cmd_underlying, "underlying digraph of a transit function"),
    ):
        s = add(name, help=helptext)
        s.add_argument("--strict", action="store_true")
        s.add_argument("input")
        s.set_defaults(func=func)

    r = add("reduce", help="transitive reduction of a DAG")
    r.add_argument("input")
    r.set_defaults(func=_cmd_reduce)

    g = add("graphinfo", help="digraph classification")
    g.add_argument("input")
    g.set_defaults(func=_cmd_graphinfo)

    v = add("verify", help="run the worked-example suite")
    v.add_argument("--suite", default="paper", choices=["paper"])
    v.set_defaults(func=_cmd_verify)

    m = add("mine", help="search for a function with given axiom profile")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--require", default="")
    m.add_argument("--forbid", default="")
    m.add_argument("--baked", default="t1,t3", help="axioms imposed during generation")
    m.add_argument("--random", action="store_true", help="seeded local search instead of exhaustive")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--budget", type=int, default=1_000_000)
    m.set_defaults(func=_cmd_mine)

    pa = add("paths", help="list simple paths between two vertices")
    pa.add_argument("input")
    pa.add_argument("--from", dest="source", required=True)
    pa.add_argument("--to", dest="target", required=True)
    pa.add_argument("--shortcut-free", action="store_true")
    pa.add_argument("--budget", type=int, default=C.DEFAULT_BUDGET)
    pa.set_defaults(func=_cmd_paths)
    return p


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, code = args.func(args)
    except InputError as exc:
        err = {"error": "input", "message": str(exc)}
        if exc.witness is not None:
            err["witness"] = _plain(exc.witness)
        sys.stderr.write(dumps(err))
        return EXIT_INPUT
    except ResourceError as exc:
        sys.stderr.write(dumps({"error": "resource", "message": str(exc)}))
        return EXIT_RESOURCE
    try:
        _emit(dumps(doc), args.output)
    except OSError as exc:
        sys.stderr.write(dumps({"error": "input", "message": f"cannot write {args.output}: {exc.strerror}"}))
        return EXIT_INPUT
    return code


def _plain(x):
    # witnesses may hold tuples, sets or report objects; make them JSON-safe
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_plain(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    if dataclasses.is_dataclass(x):
        return _plain(dataclasses.asdict(x))
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def main() -> None:
    sys.exit(run())
