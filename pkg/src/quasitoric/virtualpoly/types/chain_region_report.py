import typing

from ...core.pydantic_utilities import Rational, UniversalBaseModel


class ChainRegionReport(UniversalBaseModel):
    sign_vector: str
    weight: int
    volume: Rational
    vertices: typing.List[typing.List[Rational]]
