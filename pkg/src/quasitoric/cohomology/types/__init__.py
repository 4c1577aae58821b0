from .algebra_report import AlgebraReport
from .betti_report import BettiReport

__all__ = ["AlgebraReport", "BettiReport"]
