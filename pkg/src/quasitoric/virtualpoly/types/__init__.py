from .chain_region_report import ChainRegionReport
from .cross_check_report import CrossCheckReport, VolumeMismatch
from .polynomial_term import PolynomialTerm
from .polynomiality_report import PolynomialityReport

__all__ = ["ChainRegionReport", "CrossCheckReport", "PolynomialTerm", "PolynomialityReport", "VolumeMismatch"]
