"""
Exact polynomial interpolation.

Univariate data uses Newton divided differences. Multivariate data of total
degree at most ``d`` is interpolated on the principal lattice
``{base + k : |k| <= d}``, which is unisolvent for that space, by solving the
monomial Vandermonde system over Q.
"""

import logging
import typing
from fractions import Fraction

from ..core.errors import DimensionMismatchError, SingularMatrixError
from .linalg import Matrix, Number, SolveStatus, Vector, solve, vector
from .polynomial import MultiPoly, monomials_up_to

logger = logging.getLogger(__name__)


def newton_interpolate(
    nodes: typing.Sequence[Number], values: typing.Sequence[Number], variable: str = "t"
) -> MultiPoly:
    """The unique polynomial of degree < len(nodes) through ``(nodes[i], values[i])``."""
    if len(nodes) != len(values):
        raise DimensionMismatchError("One value per node is required", body=(len(nodes), len(values)))
    xs = [Fraction(x) for x in nodes]
    if len(set(xs)) != len(xs):
        raise SingularMatrixError("Interpolation nodes must be distinct", body=xs)
    coefficients = [Fraction(v) for v in values]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coefficients[i] = (coefficients[i] - coefficients[i - 1]) / (xs[i] - xs[i - level])

    t = MultiPoly.variable((variable,), 0)
    out = MultiPoly.zero((variable,))
    for i in range(n - 1, -1, -1):
        out = out * (t - xs[i]) + coefficients[i]
    return out


def lattice_points(
    nvars: int, degree: int, base: typing.Optional[typing.Sequence[Number]] = None
) -> typing.List[Vector]:
    """``base + k`` for every exponent ``k`` with ``|k| <= degree``."""
    origin = vector(base) if base is not None else tuple(Fraction(0) for _ in range(nvars))
    if len(origin) != nvars:
        raise DimensionMismatchError("Lattice base has the wrong length", body=(len(origin), nvars))
    return [tuple(o + k for o, k in zip(origin, e)) for e in monomials_up_to(nvars, degree)]


def interpolate(
    points: typing.Sequence[typing.Sequence[Number]],
    values: typing.Sequence[Number],
    variables: typing.Sequence[str],
    degree: int,
) -> MultiPoly:
    """
    The polynomial of total degree at most ``degree`` matching every sample.

    Raises:
        SingularMatrixError: if the samples do not determine such a polynomial
            uniquely, or no such polynomial fits them.
    """
    if len(points) != len(values):
        raise DimensionMismatchError("One value per point is required", body=(len(points), len(values)))
    basis = monomials_up_to(len(variables), degree)
    rows = []
    for p in points:
        if len(p) != len(variables):
            raise DimensionMismatchError("Sample point length mismatch", body=(len(p), len(variables)))
        rows.append([MultiPoly.monomial(variables, e).evaluate(p) for e in basis])
    result = solve(Matrix.from_rows(rows, ncols=len(basis)), values)
    if result.status is SolveStatus.INCONSISTENT:
        raise SingularMatrixError("Samples do not lie on a polynomial of the given degree", body=degree)
    if result.status is not SolveStatus.UNIQUE or result.particular is None:
        raise SingularMatrixError("Samples do not determine the interpolant", body=len(result.kernel))
    logger.debug("Interpolated %d samples with %d monomials", len(points), len(basis))
    return MultiPoly(variables, dict(zip(basis, result.particular)))


def interpolate_function(
    f: typing.Callable[[Vector], Number],
    variables: typing.Sequence[str],
    degree: int,
    base: typing.Optional[typing.Sequence[Number]] = None,
) -> MultiPoly:
    """Interpolate ``f`` on the lattice ``base + {|k| <= degree}``; exact when ``f`` is such a polynomial."""
    points = lattice_points(len(variables), degree, base)
    return interpolate(points, [f(p) for p in points], variables, degree)
