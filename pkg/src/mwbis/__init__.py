"""Maximum weight budgeted independent set (MWBIS) solvers.

Exact dynamic programs for trees, forests, cycles and interval graphs,
greedy heuristics for claw-free and bounded-degree graphs, and a layering
approximation scheme for simply nested planar graphs. Weights are integer
milli-units; see :func:`mwbis.core.to_milli`.
"""
from .alloc import AllocResult, AllocTable, ValueProfile, alloc
from .core import (
    Instance,
    Solution,
    brute_force_mwbis,
    check_solution,
    is_independent,
    make_solution,
    to_milli,
)
from .greedy import mbf, mwbrf, verify_claw_free
from .interval import Interval, IntervalInstance, IntervalSet, solve_intervals
from .io import parse, parse_text, write, write_text
from .planar import LeveledPlanarInstance, build_leveled, ptas, solve_band
from .reductions import KnapsackInstance, knapsack_to_star, solve_knapsack_dp
from .tree import RootedTree, root_tree, solve_cycle, solve_forest, solve_tree

__version__ = "0.1.0"

__all__ = [
    "AllocResult", "AllocTable", "Instance", "Interval", "IntervalInstance", "IntervalSet",
    "KnapsackInstance", "LeveledPlanarInstance", "RootedTree", "Solution", "ValueProfile",
    "alloc", "brute_force_mwbis", "build_leveled", "check_solution", "is_independent",
    "knapsack_to_star", "make_solution", "mbf", "mwbrf", "parse", "parse_text", "ptas",
    "root_tree", "solve_band", "solve_cycle", "solve_forest", "solve_intervals",
    "solve_knapsack_dp", "solve_tree", "to_milli", "verify_claw_free", "write", "write_text",
]
