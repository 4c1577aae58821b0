"""
Exact integration of polynomials over simplices and virtual chains.

On a simplex with vertices ``w_0, ..., w_n`` the substitution
``x = sum lambda_i w_i`` turns a polynomial into one in the barycentric
coordinates, and

    integral of lambda^a dx = |det(w_i - w_0)| * a_0! ... a_n! / (n + |a|)!

finishes the computation. The boundary route integrates ``P dx_2 ... dx_n``
with ``dP/dx_1 = Q`` over the oriented image of a subordinate map.
"""

import logging
import math
import typing
from fractions import Fraction

from ..core.errors import DimensionMismatchError, SingularMatrixError
from ..exact.linalg import Number, Vector, det_of, sub, vector
from ..exact.polynomial import Exponent, MultiPoly, multi_factorial
from .chain import VirtualChain
from .subordinate import SubordinateMap

logger = logging.getLogger(__name__)


def ambient_variables(n: int) -> typing.Tuple[str, ...]:
    return tuple(f"x{k + 1}" for k in range(n))


def _barycentric(q: MultiPoly, points: typing.Sequence[Vector]) -> MultiPoly:
    names = tuple(f"l{i}" for i in range(len(points)))
    forms = [MultiPoly.linear(names, [p[k] for p in points]) for k in range(q.nvars)]
    return q.compose(forms)


def _standard_moment(p: MultiPoly, dim: int) -> Fraction:
    """``sum c_a a! / (dim + |a|)!``: the integral over a ``dim``-simplex of unit Jacobian."""
    return sum((c * multi_factorial(a) / math.factorial(dim + sum(a)) for a, c in p.items()), Fraction(0))


def integrate_simplex(q: MultiPoly, simplex: typing.Sequence[typing.Sequence[Number]]) -> Fraction:
    """
    ``integral of q dx`` over an ``n``-simplex in ``R^n``.

    Raises:
        SingularMatrixError: if the simplex is degenerate.
    """
    points = [vector(p) for p in simplex]
    n = q.nvars
    if len(points) != n + 1 or any(len(p) != n for p in points):
        raise DimensionMismatchError("An n-simplex needs n + 1 points in R^n", body=(len(points), n))
    jacobian = abs(det_of([sub(p, points[0]) for p in points[1:]]))
    if jacobian == 0:
        raise SingularMatrixError("Degenerate simplex")
    return jacobian * _standard_moment(_barycentric(q, points), n)


def integrate_monomial_simplex(alpha: Exponent, simplex: typing.Sequence[typing.Sequence[Number]]) -> Fraction:
    return integrate_simplex(MultiPoly.monomial(ambient_variables(len(alpha)), tuple(alpha)), simplex)


def integrate(q: MultiPoly, chain: VirtualChain) -> Fraction:
    """``I_Q``: the weighted sum of the integrals of ``q`` over the regions of the chain."""
    if q.nvars != chain.dimension:
        raise DimensionMismatchError(
            "Integrand variables differ from the ambient dimension", body=(q.nvars, chain.dimension)
        )
    total = Fraction(0)
    for entry in chain.regions:
        region_integral = sum((integrate_simplex(q, s) for s in entry.region.simplices), Fraction(0))
        total += entry.weight * region_integral
    return total


def stokes_integral(q: MultiPoly, f: SubordinateMap) -> Fraction:
    """
    ``integral over the image of f of P dx_2 ... dx_n`` with ``dP/dx_1 = q``.

    Each image simplex ``(p_1, ..., p_n)`` is parametrized from ``p_1`` along
    ``p_j - p_1``; the form pulls back to ``det J`` times the standard measure,
    where ``J`` holds coordinates ``2..n`` of those edges.
    """
    n = f.pair.dimension
    if q.nvars != n:
        raise DimensionMismatchError("Integrand variables differ from the ambient dimension", body=(q.nvars, n))
    p = q.antiderivative(0)
    total = Fraction(0)
    for simplex in f.simplices:
        base = simplex.points[0]
        edges = [sub(x, base) for x in simplex.points[1:]]
        jacobian = det_of([e[1:] for e in edges])
        if jacobian == 0:
            continue
        total += simplex.sign * jacobian * _standard_moment(_barycentric(p, simplex.points), n - 1)
    logger.debug("Boundary integral over %d image simplices: %s", len(f.simplices), total)
    return total


def chain_volume(chain: VirtualChain) -> Fraction:
    """The oriented volume of the chain, ``I_1``."""
    return integrate(MultiPoly.constant(ambient_variables(chain.dimension), 1), chain)
