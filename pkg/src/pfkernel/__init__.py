"""Kernelization of Independent Set / Vertex Cover parameterized by a pseudoforest modulator."""

from .gadgets import CnfFormula, clause_gadget, cnf_to_ismfm, parse_dimacs_cnf
from .graph import Graph, GraphError, dump_dimacs_graph, load_dimacs_graph
from .instance import IS, VC, Instance, InvalidInstance, convert_vc_is, decide
from .kernel import (
    BoundViolation,
    LiftError,
    kernelize,
    lift_solution,
    verify_all_bounds,
    verify_size_bounds,
)
from .mis import alpha_pseudoforest, alpha_pseudotree, check_small_obstruction, conflicts
from .modulator import find_modulator_exact, find_modulator_greedy, verify_modulator
from .oracle import OracleBudget, alpha_exact, has_independent_set, max_independent_set
from .trace import ReductionTrace

__all__ = [
    "IS", "VC", "BoundViolation", "CnfFormula", "Graph", "GraphError", "Instance",
    "InvalidInstance", "LiftError", "OracleBudget", "ReductionTrace", "alpha_exact",
    "alpha_pseudoforest", "alpha_pseudotree", "check_small_obstruction", "clause_gadget",
    "cnf_to_ismfm", "conflicts", "convert_vc_is", "decide", "dump_dimacs_graph",
    "find_modulator_exact", "find_modulator_greedy", "has_independent_set", "kernelize",
    "lift_solution", "load_dimacs_graph", "max_independent_set", "parse_dimacs_cnf",
    "verify_all_bounds", "verify_modulator", "verify_size_bounds",
]
