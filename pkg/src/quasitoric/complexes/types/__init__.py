from .validation_report import ValidationReport

__all__ = ["ValidationReport"]
