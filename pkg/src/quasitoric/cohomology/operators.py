"""
Differential operators with constant coefficients.

An operator is a :class:`MultiPoly` in the symbols ``d1, ..., dm``; the
monomial ``d^k`` acts on polynomials in ``h1, ..., hm`` as the partial
derivative of order ``k``.
"""

import typing

from ..core.errors import DimensionMismatchError
from ..exact.linalg import Number
from ..exact.polynomial import Exponent, MultiPoly


def operator_variables(m: int) -> typing.Tuple[str, ...]:
    return tuple(f"d{i + 1}" for i in range(m))


def operator_monomial(exponent: Exponent) -> MultiPoly:
    return MultiPoly.monomial(operator_variables(len(exponent)), tuple(exponent))


def linear_operator(coefficients: typing.Sequence[Number]) -> MultiPoly:
    """``sum c_i d_i``."""
    return MultiPoly.linear(operator_variables(len(coefficients)), coefficients)


def apply(d: MultiPoly, p: MultiPoly) -> MultiPoly:
    """``d(p)``, by iterated partial differentiation.

    Raises:
        DimensionMismatchError: if the operator and the polynomial have different variable counts.
    """
    if d.nvars != p.nvars:
        raise DimensionMismatchError("Operator and polynomial have different variable counts", body=(d.nvars, p.nvars))
    out = MultiPoly.zero(p.variables)
    for exponent, c in d.items():
        out = out + p.partial(exponent).scale(c)
    return out
