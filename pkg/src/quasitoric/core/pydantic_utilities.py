# nopycln: file
import typing
from fractions import Fraction

import typing_extensions

import pydantic

from .rationals import format_rational, parse_rational

Rational = typing_extensions.Annotated[
    Fraction,
    pydantic.PlainValidator(parse_rational),
    pydantic.PlainSerializer(format_rational, return_type=str, when_used="json"),
]
"""A Fraction field that reads ``"p/q"``/int/Fraction and writes ``"p/q"`` in JSON mode."""


class UniversalBaseModel(pydantic.BaseModel):
    model_config: typing.ClassVar[pydantic.ConfigDict] = pydantic.ConfigDict(
        # Allow fields beginning with `model_` to be used in the model
        protected_namespaces=(),
        arbitrary_types_allowed=True,
        frozen=True,
    )

    def dict(self, **kwargs: typing.Any) -> typing.Dict[str, typing.Any]:  # type: ignore[override]
        """
        Dump the model in JSON mode so rationals come out as ``"p/q"`` strings.
        """
        kwargs_with_defaults: typing.Any = {
            "by_alias": True,
            "mode": "json",
            **kwargs,
        }
        return super().model_dump(**kwargs_with_defaults)
