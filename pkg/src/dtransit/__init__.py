"""Directed transit functions: axioms, constructions from digraphs and orders,
derived structures, verification oracles and a counterexample miner."""
from .axioms import (
    ALL_AXIOMS,
    AxiomId,
    AxiomReport,
    ClassSet,
    check_axiom,
    check_many,
    classify,
    satisfies,
)
from .constructors import (
    PathList,
    all_paths,
    from_partial_order,
    from_reachability,
    induced_paths,
    interval_from_quasimetric,
    quasimetric_from_digraph,
    reachability_closure,
    shortcut_free_paths,
    simple_paths,
)
from .core import (
    INF,
    BinaryRelation,
    Digraph,
    InputError,
    Quasimetric,
    ResourceError,
    TransitFunction,
    Universe,
    VertexSet,
    relation_properties,
    validate_quasimetric,
)
from .derive import (
    base_relation,
    digraph_classify,
    order_from_tf,
    sim_components,
    transitive_reduction,
    underlying_graph,
)
from .miner import SearchResult, SearchSpec, mine, reproduce_independence_table
from .verify import (
    VerificationOutcome,
    oracle_all_paths,
    run_paper_suite,
    verify_forest_tree,
    verify_geometric_paths,
    verify_poset_roundtrip,
)

__version__ = "0.1.0"
