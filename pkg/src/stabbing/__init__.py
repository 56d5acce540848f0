"""Stabbing sets of convex objects with few lines."""

from .errors import GeometryError, GuardExceededError, KernelInvariantError, LayoutMismatchError, ParseError
from .geometry import (
    AXIS_DIRECTIONS,
    HORIZONTAL,
    VERTICAL,
    ConvexObject,
    Direction,
    Instance2D,
    Line,
    LinearMap2,
    Solution,
    apply_map,
    canonical_lines,
    pairwise_disjoint,
    polygon,
    rectangle,
    robustness_delta,
    square,
    stab_set,
    stabs,
)
from .oracle import brute_force_stab, dominance_filter, verify_solution
from .solver import (
    SolveResult,
    candidate_lines,
    check_shallowness,
    data_reduce,
    find_branch_line,
    solve_kernel,
    stab_fpt,
)

__all__ = [
    "AXIS_DIRECTIONS",
    "HORIZONTAL",
    "VERTICAL",
    "ConvexObject",
    "Direction",
    "GeometryError",
    "GuardExceededError",
    "Instance2D",
    "KernelInvariantError",
    "LayoutMismatchError",
    "Line",
    "LinearMap2",
    "ParseError",
    "Solution",
    "SolveResult",
    "apply_map",
    "brute_force_stab",
    "candidate_lines",
    "canonical_lines",
    "check_shallowness",
    "data_reduce",
    "dominance_filter",
    "find_branch_line",
    "pairwise_disjoint",
    "polygon",
    "rectangle",
    "robustness_delta",
    "solve_kernel",
    "square",
    "stab_fpt",
    "stab_set",
    "stabs",
    "verify_solution",
]
