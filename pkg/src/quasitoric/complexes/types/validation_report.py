import typing

import pydantic

from ...core.pydantic_utilities import UniversalBaseModel


class ValidationReport(UniversalBaseModel):
    """Outcome of a diagnostic check: ``ok`` exactly when ``problems`` is empty."""

    subject: str
    problems: typing.List[str] = []

    @pydantic.computed_field  # type: ignore[misc]
    @property
    def ok(self) -> bool:
        return not self.problems

    def merged(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(subject=self.subject, problems=self.problems + other.problems)

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: ok"
        return f"{self.subject}: " + "; ".join(self.problems)
