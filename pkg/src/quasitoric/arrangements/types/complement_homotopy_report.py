import typing

from ...core.pydantic_utilities import Rational, UniversalBaseModel


class ReducedMember(UniversalBaseModel):
    """``point + span(directions)``: a retained member shrunk to a translate of its tail cone."""

    index: int
    point: typing.List[Rational]
    directions: typing.List[typing.List[Rational]]


class ComplementHomotopyReport(UniversalBaseModel):
    retained: typing.List[ReducedMember]
    common_tail: typing.Optional[typing.List[typing.List[Rational]]] = None
    transversal: typing.Optional[typing.List[typing.List[Rational]]] = None
    points: typing.List[typing.List[Rational]] = []
    removed_points: typing.Optional[int] = None
    conclusion: str
