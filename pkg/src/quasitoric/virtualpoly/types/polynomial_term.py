from ...core.pydantic_utilities import Rational, UniversalBaseModel


class PolynomialTerm(UniversalBaseModel):
    """One term of a polynomial, e.g. ``{"monomial": "h1^2", "coeff": "1/2"}``."""

    monomial: str
    coeff: Rational
