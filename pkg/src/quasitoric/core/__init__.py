from .errors import (
    CrossCheckError,
    DimensionMismatchError,
    GenericPositionError,
    InputParseError,
    NonHomogeneousError,
    NotAFaceError,
    QuasitoricError,
    RayDegeneracyError,
    SingularMatrixError,
    ValidationFailedError,
)
from .jsonable_encoder import jsonable_encoder
from .options import RunOptions
from .pydantic_utilities import Rational, UniversalBaseModel
from .rationals import format_rational, parse_rational, parse_rational_list

__all__ = [
    "CrossCheckError",
    "DimensionMismatchError",
    "GenericPositionError",
    "InputParseError",
    "NonHomogeneousError",
    "NotAFaceError",
    "QuasitoricError",
    "Rational",
    "RayDegeneracyError",
    "RunOptions",
    "SingularMatrixError",
    "UniversalBaseModel",
    "ValidationFailedError",
    "format_rational",
    "jsonable_encoder",
    "parse_rational",
    "parse_rational_list",
]
