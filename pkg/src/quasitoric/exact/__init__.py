from .feasibility import (
    Constraint,
    FeasibilityResult,
    LinearSystem,
    LPResult,
    LPStatus,
    Relation,
    eq,
    feasible,
    ge,
    gt,
    le,
    lt,
    maximize,
)
from .interpolation import interpolate, interpolate_function, lattice_points, newton_interpolate
from .linalg import (
    LinearSolution,
    Matrix,
    SolveStatus,
    Vector,
    coordinates,
    det,
    det_of,
    inverse,
    kernel,
    orthogonal_complement,
    rank,
    rank_of,
    row_reduce,
    solve,
    solve_unique,
    span_basis,
    vector,
)
from .parsing import parse_polynomial, to_sympy
from .polynomial import MultiPoly, monomial_label, monomials_of_degree, polarize

__all__ = [
    "Constraint",
    "FeasibilityResult",
    "LPResult",
    "LPStatus",
    "LinearSolution",
    "LinearSystem",
    "Matrix",
    "MultiPoly",
    "Relation",
    "SolveStatus",
    "Vector",
    "coordinates",
    "det",
    "det_of",
    "eq",
    "feasible",
    "ge",
    "gt",
    "interpolate",
    "interpolate_function",
    "inverse",
    "kernel",
    "lattice_points",
    "le",
    "lt",
    "maximize",
    "monomial_label",
    "monomials_of_degree",
    "newton_interpolate",
    "orthogonal_complement",
    "parse_polynomial",
    "polarize",
    "rank",
    "rank_of",
    "row_reduce",
    "solve",
    "solve_unique",
    "span_basis",
    "to_sympy",
    "vector",
]
