import typing

from ...core.pydantic_utilities import Rational, UniversalBaseModel


class RegionReport(UniversalBaseModel):
    sign_vector: str
    bounded: bool
    witness: typing.List[Rational]
    vertices: typing.List[typing.List[Rational]] = []
    volume: typing.Optional[Rational] = None
