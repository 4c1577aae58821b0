from fractions import Fraction
import typing

RationalLike = typing.Union[Fraction, int, str]


def format_rational(v: Fraction) -> str:
    """
    Serialize a rational number as ``"p/q"``, or ``"p"`` when the denominator is 1.

    ``Fraction`` keeps itself in lowest terms with a positive denominator, so the
    output is canonical.
    """
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(v: RationalLike) -> Fraction:
    """
    Parse ``"p/q"``, ``"p"``, an int or a Fraction into a Fraction.

    Floats are rejected: every value entering the system must be exact.
    """
    if isinstance(v, bool):
        raise ValueError(f"Not a rational literal: {v!r}")
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        text = v.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"Not a rational literal: {v!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational literal: {v!r}") from e
    raise ValueError(f"Not a rational literal: {v!r}")


def parse_rational_list(text: str) -> typing.List[Fraction]:
    """Parse a comma-separated list such as ``"0,0,1/2"``."""
    if not text.strip():
        return []
    return [parse_rational(part) for part in text.split(",")]
