"""
Input documents.

A pair document describes a fan with optional functionals and support
vector; an arrangement document lists hyperplanes. Vertex indices are 1-based
in files and 0-based everywhere else.
"""

import json
import logging
import typing

import pydantic

from ..arrangements.subspace import SubspaceArrangement, build_arrangement
from ..complexes.characteristic import CharacteristicPair, Mode, validate_characteristic
from ..complexes.fan import Fan, validate_fan
from ..core.errors import DimensionMismatchError, InputParseError, ValidationFailedError
from ..core.pydantic_utilities import Rational, UniversalBaseModel

logger = logging.getLogger(__name__)


class InputDocument(UniversalBaseModel):
    dim: pydantic.PositiveInt
    rays: typing.List[typing.List[Rational]]
    cones: typing.List[typing.List[int]]
    lambda_: typing.Optional[typing.List[typing.List[Rational]]] = pydantic.Field(default=None, alias="lambda")
    h: typing.Optional[typing.List[Rational]] = None
    mode: Mode = Mode.INTEGER

    model_config = pydantic.ConfigDict(populate_by_name=True, frozen=True, extra="forbid")

    def fan(self) -> Fan:
        for cone in self.cones:
            if any(i < 1 or i > len(self.rays) for i in cone):
                raise InputParseError("Cone index outside 1..m", body=cone)
        return Fan.from_data(self.dim, self.rays, [[i - 1 for i in cone] for cone in self.cones])


class Hyperplane(UniversalBaseModel):
    normal: typing.List[Rational]
    offset: Rational


class ArrangementDocument(UniversalBaseModel):
    dim: pydantic.PositiveInt
    hyperplanes: typing.List[Hyperplane]

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    def arrangement(self) -> SubspaceArrangement:
        try:
            return SubspaceArrangement.of_hyperplanes(self.dim, [(p.normal, p.offset) for p in self.hyperplanes])
        except DimensionMismatchError as e:
            raise InputParseError("Malformed hyperplanes", body=str(e)) from e


Document = typing.Union[InputDocument, ArrangementDocument]


def parse_document(text: str) -> Document:
    """
    Raises:
        InputParseError: if the text is not JSON or matches neither document shape.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError("Input is not valid JSON", body=str(e)) from e
    if not isinstance(data, dict):
        raise InputParseError("Input must be a JSON object")
    model: typing.Type[UniversalBaseModel] = ArrangementDocument if "hyperplanes" in data else InputDocument
    try:
        return typing.cast(Document, model.model_validate(data))
    except pydantic.ValidationError as e:
        raise InputParseError("Input does not match the document schema", body=str(e)) from e


def characteristic_pair(doc: InputDocument) -> CharacteristicPair:
    """
    Build and validate the pair of a document.

    Raises:
        ValidationFailedError: with the failing report as ``body``.
    """
    try:
        fan = doc.fan()
    except DimensionMismatchError as e:
        raise InputParseError("Rays do not match the dimension", body=str(e)) from e
    report = validate_fan(fan)
    if not report.ok:
        raise ValidationFailedError(report.summary(), body=report)
    try:
        pair = CharacteristicPair.from_fan(fan, doc.lambda_, doc.mode)
    except DimensionMismatchError as e:
        raise InputParseError("Functionals do not match the fan", body=str(e)) from e
    report = validate_characteristic(pair)
    if not report.ok:
        raise ValidationFailedError(report.summary(), body=report)
    return pair


def arrangement_of(doc: Document, h: typing.Optional[typing.Sequence[Rational]] = None) -> SubspaceArrangement:
    """The arrangement of an arrangement document, or ``AP(h)`` for a pair document."""
    if isinstance(doc, ArrangementDocument):
        return doc.arrangement()
    support = h if h is not None else doc.h
    if support is None:
        raise InputParseError("A support vector h is required")
    return build_arrangement(characteristic_pair(doc), support)
