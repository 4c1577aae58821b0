import typing

import pydantic

from ...core.pydantic_utilities import Rational, UniversalBaseModel


class PolynomialityReport(UniversalBaseModel):
    """Interpolation of ``t -> I_Q(h + t e_index)`` and its check at fresh values of ``t``."""

    index: int
    degree_bound: int
    interpolant: str
    failures: typing.List[Rational] = []

    @pydantic.computed_field  # type: ignore[misc]
    @property
    def ok(self) -> bool:
        return not self.failures
