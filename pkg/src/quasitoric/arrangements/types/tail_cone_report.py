import typing

from ...core.pydantic_utilities import Rational, UniversalBaseModel


class TailConeReport(UniversalBaseModel):
    """The recession cone ``lineality + cone(rays)`` of a nonempty convex set."""

    dimension: int
    lineality: typing.List[typing.List[Rational]]
    rays: typing.List[typing.List[Rational]]
    is_vector_space: bool

    @property
    def is_origin(self) -> bool:
        return not self.lineality and not self.rays
