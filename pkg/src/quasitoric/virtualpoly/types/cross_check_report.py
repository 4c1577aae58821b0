import typing

import pydantic

from ...core.pydantic_utilities import Rational, UniversalBaseModel


class VolumeMismatch(UniversalBaseModel):
    h: typing.List[Rational]
    chain_volume: Rational
    polynomial_value: Rational


class CrossCheckReport(UniversalBaseModel):
    samples: int
    seed: int
    mismatches: typing.List[VolumeMismatch] = []

    @pydantic.computed_field  # type: ignore[misc]
    @property
    def ok(self) -> bool:
        return not self.mismatches
