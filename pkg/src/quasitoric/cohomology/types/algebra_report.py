import typing

from ...core.pydantic_utilities import Rational, UniversalBaseModel


class AlgebraReport(UniversalBaseModel):
    betti: typing.List[int]
    relations_deg1: typing.List[str]
    top_products: typing.Dict[str, Rational]
    pairing_ok: bool
    problems: typing.List[str] = []
