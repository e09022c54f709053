"""Hamiltonicity analysis toolkit: reduction rules, cycle-space algebra,
a weight-identity solver, locked-cycle detection, and exact oracles, wrapped
in a batch verification harness."""

from .graphs import Graph, GraphFormatError, parse_edge_list, parse_graph6, to_graph6
from .cyclespace import Cycle, CycleBasis, fundamental_basis, enumerate_bases, change_basis
from .reducer import reduce, ReductionTrace, EarlyVerdict, VerdictKind
from .combos import PairKind, SetKind, classify_pair, classify_set, chain_fixture
from .grinberg import SolutionSet, solve, is_solvable, co_solution
from .locked import coverage, find_locked, is_removable, cycle_verdict, p3_locked_check, Verdict
from .oracle import OracleResult, backtrack, dp, validate_witness
from .fixtures import named_fixture, chain_revealing_basis, theta4_special_basis

__all__ = [
    "Graph", "GraphFormatError", "parse_edge_list", "parse_graph6", "to_graph6",
    "Cycle", "CycleBasis", "fundamental_basis", "enumerate_bases", "change_basis",
    "reduce", "ReductionTrace", "EarlyVerdict", "VerdictKind",
    "PairKind", "SetKind", "classify_pair", "classify_set", "chain_fixture",
    "SolutionSet", "solve", "is_solvable", "co_solution",
    "coverage", "find_locked", "is_removable", "cycle_verdict", "p3_locked_check", "Verdict",
    "OracleResult", "backtrack", "dp", "validate_witness",
    "named_fixture", "chain_revealing_basis", "theta4_special_basis",
]
