import typing

from ...core.pydantic_utilities import Rational, UniversalBaseModel


class UnionHomotopyReport(UniversalBaseModel):
    nondegenerate: bool
    linearity_space: typing.List[typing.List[Rational]]
    wedge_dim: int
    sphere_count: int
    homology_ranks: typing.List[int]
