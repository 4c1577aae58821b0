import typing

import pydantic

from ...core.pydantic_utilities import UniversalBaseModel


class BettiReport(UniversalBaseModel):
    """Even Betti numbers ``(b_0, b_2, ..., b_2n)`` by three independent routes."""

    macaulay: typing.List[int]
    stanley_reisner: typing.List[int]
    cells: typing.Optional[typing.List[int]] = None
    maximal_cones: int

    @pydantic.computed_field  # type: ignore[misc]
    @property
    def agree(self) -> bool:
        routes = [self.macaulay, self.stanley_reisner] + ([self.cells] if self.cells is not None else [])
        return all(r == routes[0] for r in routes) and sum(self.macaulay) == self.maximal_cones
