"""Exact toolkit for generalized tree connectivity.

kappa(S) is the largest number of trees in a graph that each span the
terminal set S, pairwise share no edge, and pairwise share no vertex
outside S.  The package computes and certifies kappa(S) and kappa_k(G)
exactly, classifies Steiner tree topologies, and builds the matching and
satisfiability gadget instances together with witness converters in both
directions.
"""

from .certificates import (
    Tree,
    TreeCertificate,
    VerifyReport,
    certificate_from_obj,
    certificate_to_obj,
    parse_certificate,
    serialize_certificate,
    verify_certificate,
)
from .graph import (
    Graph,
    GraphFormatError,
    TerminalSet,
    complete_graph,
    components,
    cycle_graph,
    export_dot,
    parse_graph,
    parse_terminals,
    path_graph,
    serialize_graph,
)
from .generators import (
    random_3dm,
    random_cnf,
    random_connected_graph,
    random_graph,
    random_terminals,
)
from .reductions import (
    Assignment,
    CnfFormula,
    Matching,
    ReducedInstance,
    ThreeDMInstance,
    assignment_satisfies,
    assignment_to_trees,
    lift_terminals,
    matching_is_perfect,
    matching_to_trees,
    pad_tree_count,
    parse_3dm,
    parse_dimacs,
    parse_reduced,
    reduce_3dm,
    reduce_3sat,
    serialize_3dm,
    serialize_reduced,
    solve_3dm_brute,
    solve_sat_brute,
    trees_to_assignment,
    trees_to_matching,
    write_dimacs,
)
from .solver import (
    DecideResult,
    KappaKResult,
    SolveResult,
    brute_force_kappa,
    decide_kappa_at_least,
    kappa_k_graph,
    kappa_set_exact,
    menger_pair,
)
from .steiner import (
    EnumerationResult,
    ReducedTopology,
    classify_topology,
    count_topologies,
    enumerate_steiner_trees,
)

__all__ = [
    "Assignment",
    "CnfFormula",
    "DecideResult",
    "EnumerationResult",
    "Graph",
    "GraphFormatError",
    "KappaKResult",
    "Matching",
    "ReducedInstance",
    "ReducedTopology",
    "SolveResult",
    "TerminalSet",
    "ThreeDMInstance",
    "Tree",
    "TreeCertificate",
    "VerifyReport",
    "assignment_satisfies",
    "assignment_to_trees",
    "brute_force_kappa",
    "certificate_from_obj",
    "certificate_to_obj",
    "classify_topology",
    "complete_graph",
    "components",
    "count_topologies",
    "cycle_graph",
    "decide_kappa_at_least",
    "enumerate_steiner_trees",
    "export_dot",
    "kappa_k_graph",
    "kappa_set_exact",
    "lift_terminals",
    "matching_is_perfect",
    "matching_to_trees",
    "menger_pair",
    "pad_tree_count",
    "parse_3dm",
    "parse_certificate",
    "parse_dimacs",
    "parse_graph",
    "parse_reduced",
    "parse_terminals",
    "path_graph",
    "random_3dm",
    "random_cnf",
    "random_connected_graph",
    "random_graph",
    "random_terminals",
    "reduce_3dm",
    "reduce_3sat",
    "serialize_3dm",
    "serialize_certificate",
    "serialize_graph",
    "serialize_reduced",
    "solve_3dm_brute",
    "solve_sat_brute",
    "trees_to_assignment",
    "trees_to_matching",
    "verify_certificate",
    "write_dimacs",
]
