from .algebra import (
    Annihilator,
    GradedAlgebra,
    GradedPiece,
    annihilator_dimension,
    betti,
    macaulay_algebra,
    poincare_check,
)
from .operators import apply, linear_operator, operator_monomial, operator_variables
from .relations import integral_top_values, linear_relation_check, self_intersection, top_product
from .stanley_reisner import SRPresentation, sr_presentation, sr_quotient_dims
from .summary import algebra_report, betti_report
from .types import AlgebraReport, BettiReport

__all__ = [
    "AlgebraReport",
    "Annihilator",
    "BettiReport",
    "GradedAlgebra",
    "GradedPiece",
    "SRPresentation",
    "algebra_report",
    "annihilator_dimension",
    "apply",
    "betti",
    "betti_report",
    "integral_top_values",
    "linear_operator",
    "linear_relation_check",
    "macaulay_algebra",
    "operator_monomial",
    "operator_variables",
    "poincare_check",
    "self_intersection",
    "sr_presentation",
    "sr_quotient_dims",
    "top_product",
]
