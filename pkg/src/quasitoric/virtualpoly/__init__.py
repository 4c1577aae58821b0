from .chain import VirtualChain, WeightedRegion, chain_report, virtual_chain
from .checks import cross_check_volume, integral_polynomiality, translation_problems
from .integration import (
    ambient_variables,
    chain_volume,
    integrate,
    integrate_monomial_simplex,
    integrate_simplex,
    stokes_integral,
)
from .subordinate import ImageSimplex, SubordinateMap, distinguished_points, subordinate_map
from .types import ChainRegionReport, CrossCheckReport, PolynomialTerm, PolynomialityReport, VolumeMismatch
from .volume import (
    derivative_value,
    integral_of,
    mixed_volume,
    polynomial_terms,
    support_variables,
    top_derivative,
    volume_polynomial,
)
from .winding import ray_directions, winding_number

__all__ = [
    "ChainRegionReport",
    "CrossCheckReport",
    "ImageSimplex",
    "PolynomialTerm",
    "PolynomialityReport",
    "SubordinateMap",
    "VirtualChain",
    "VolumeMismatch",
    "WeightedRegion",
    "ambient_variables",
    "chain_report",
    "chain_volume",
    "cross_check_volume",
    "derivative_value",
    "distinguished_points",
    "integral_of",
    "integral_polynomiality",
    "integrate",
    "integrate_monomial_simplex",
    "integrate_simplex",
    "mixed_volume",
    "polynomial_terms",
    "ray_directions",
    "stokes_integral",
    "subordinate_map",
    "support_variables",
    "top_derivative",
    "translation_problems",
    "virtual_chain",
    "volume_polynomial",
    "winding_number",
]
