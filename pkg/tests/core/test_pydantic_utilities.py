from fractions import Fraction

import pydantic
import pytest

from quasitoric.core.pydantic_utilities import Rational, UniversalBaseModel


class Point(UniversalBaseModel):
    x: Rational


@pytest.mark.parametrize(
    "raw, expected", [("3/6", Fraction(1, 2)), (4, Fraction(4)), (Fraction(-2, 3), Fraction(-2, 3))]
)
def test_rational_reads_exact_values(raw: object, expected: Fraction) -> None:
    assert Point.model_validate({"x": raw}).x == expected


@pytest.mark.parametrize("raw", ["0.5", 0.5, True, "1/0", ""])
def test_rational_rejects_inexact_or_malformed_values(raw: object) -> None:
    with pytest.raises(pydantic.ValidationError, match="Not a rational literal"):
        Point.model_validate({"x": raw})


def test_dict_writes_rationals_as_strings() -> None:
    assert Point(x=Fraction(3, 4)).dict() == {"x": "3/4"}
    assert Point(x=Fraction(5)).dict() == {"x": "5"}
