"""
The volume polynomial of a characteristic pair.

Every coefficient of ``Vol`` is a top derivative ``d^k Vol / k!``. Top
derivatives are zero off the faces of the sphere and equal the vertex weight
``sign(I) / |det l_I|`` on squarefree facets. A repeated index ``i`` with
support ``S`` is removed with translation invariance: for ``c`` with
``l_i(c) = 1`` and ``l_s(c) = 0`` on the rest of ``S``,

    d_i Vol = - sum over l not in S of l_l(c) d_l Vol,

which strictly enlarges the support, so the recursion ends.
"""

import logging
import typing
from fractions import Fraction

from ..arrangements.subspace import build_arrangement
from ..complexes.characteristic import CharacteristicPair
from ..core.errors import DimensionMismatchError
from ..core.options import RunOptions
from ..exact.interpolation import interpolate_function
from ..exact.linalg import Matrix, Number, Vector, dot, solve, unit_vector, vector
from ..exact.polynomial import Exponent, MultiPoly, monomials_of_degree, multi_factorial, polarize
from .chain import virtual_chain
from .integration import integrate
from .types import PolynomialTerm

logger = logging.getLogger(__name__)


def support_variables(m: int) -> typing.Tuple[str, ...]:
    return tuple(f"h{i + 1}" for i in range(m))


def _support(k: Exponent) -> typing.FrozenSet[int]:
    return frozenset(i for i, e in enumerate(k) if e)


def _translation_character(pair: CharacteristicPair, support: typing.FrozenSet[int], index: int) -> Vector:
    """A point ``c`` with ``l_index(c) = 1`` and ``l_s(c) = 0`` for the other ``s`` in ``support``."""
    ordered = sorted(support)
    rows = pair.face_functionals(support)
    target = unit_vector(len(ordered), ordered.index(index))
    result = solve(Matrix.from_rows(rows, ncols=pair.dimension), target)
    if result.particular is None:
        raise DimensionMismatchError("Functionals are dependent on a face", body=[i + 1 for i in ordered])
    return result.particular


class _TopDerivatives:
    def __init__(self, pair: CharacteristicPair):
        self._pair = pair
        self._memo: typing.Dict[Exponent, Fraction] = {}

    def __call__(self, k: Exponent) -> Fraction:
        if k not in self._memo:
            self._memo[k] = self._compute(k)
        return self._memo[k]

    @property
    def evaluated(self) -> int:
        return len(self._memo)

    def _compute(self, k: Exponent) -> Fraction:
        pair = self._pair
        support = _support(k)
        if not pair.complex.is_face(support):
            return Fraction(0)
        repeated = next((i for i in sorted(support) if k[i] > 1), None)
        if repeated is None:
            return pair.vertex_weight(support)
        c = _translation_character(pair, support, repeated)
        total = Fraction(0)
        for other in range(pair.vertex_count):
            if other in support:
                continue
            coefficient = dot(pair.functionals[other], c)
            if coefficient == 0:
                continue
            shifted = list(k)
            shifted[repeated] -= 1
            shifted[other] += 1
            total -= coefficient * self(tuple(shifted))
        return total


def volume_polynomial(pair: CharacteristicPair) -> MultiPoly:
    """``Vol(h)``, homogeneous of degree ``n`` in ``h_1, ..., h_m``."""
    m, n = pair.vertex_count, pair.dimension
    top = _TopDerivatives(pair)
    terms = {k: top(k) / multi_factorial(k) for k in monomials_of_degree(m, n)}
    logger.debug("Volume polynomial: %d top derivatives evaluated", top.evaluated)
    return MultiPoly(support_variables(m), terms)


def top_derivative(pair: CharacteristicPair, k: typing.Sequence[int]) -> Fraction:
    """``d^k Vol`` for ``|k| = n``."""
    exponent = tuple(k)
    if len(exponent) != pair.vertex_count or sum(exponent) != pair.dimension:
        raise DimensionMismatchError("Top derivatives need one order per vertex summing to n", body=exponent)
    return _TopDerivatives(pair)(exponent)


def mixed_volume(pair: CharacteristicPair, hs: typing.Sequence[typing.Sequence[Number]]) -> Fraction:
    """The symmetric multilinear form with diagonal ``Vol``."""
    if len(hs) != pair.dimension:
        raise DimensionMismatchError("Mixed volume needs n support vectors", body=(len(hs), pair.dimension))
    return polarize(volume_polynomial(pair), hs)


def integral_of(
    pair: CharacteristicPair,
    q: MultiPoly,
    h: typing.Sequence[Number],
    *,
    options: typing.Optional[RunOptions] = None,
) -> Fraction:
    """``I_Q(f_h)``."""
    return integrate(q, virtual_chain(pair, h, options=options))


def derivative_value(
    pair: CharacteristicPair,
    q: MultiPoly,
    k: typing.Sequence[int],
    h: typing.Sequence[Number],
    *,
    options: typing.Optional[RunOptions] = None,
) -> Fraction:
    """
    ``d^k I_Q`` at ``h``.

    Zero when the support of ``k`` is not a face. For a squarefree facet
    ``I`` the value is ``sign(I) Q(A) / |det l_I|`` with ``A`` the vertex
    ``H_I``. Otherwise ``I_Q`` is interpolated exactly in the support
    variables, with the others held at ``h``, and differentiated.
    """
    exponent = tuple(k)
    support_vector = vector(h)
    if len(exponent) != pair.vertex_count or len(support_vector) != pair.vertex_count:
        raise DimensionMismatchError("One entry per vertex is required", body=(len(exponent), len(support_vector)))
    if q.nvars != pair.dimension:
        raise DimensionMismatchError("Integrand variables differ from the ambient dimension", body=q.nvars)
    support = _support(exponent)
    if not pair.complex.is_face(support):
        return Fraction(0)
    if q.is_zero():
        return Fraction(0)
    if len(support) == pair.dimension and all(e <= 1 for e in exponent):
        vertex = build_arrangement(pair, support_vector).intersect(support).subspace
        assert vertex is not None
        return pair.vertex_weight(support) * q.evaluate(vertex.point)

    bound = pair.dimension + q.degree
    if sum(exponent) > bound:
        return Fraction(0)
    ordered = sorted(support)
    names = tuple(f"h{i + 1}" for i in ordered)

    def restricted(values: Vector) -> Fraction:
        point = list(support_vector)
        for i, x in zip(ordered, values):
            point[i] = x
        return integral_of(pair, q, point, options=options)

    local = interpolate_function(restricted, names, bound, base=[support_vector[i] for i in ordered])
    derivative = local.partial(tuple(exponent[i] for i in ordered))
    return derivative.evaluate([support_vector[i] for i in ordered])


def polynomial_terms(p: MultiPoly) -> typing.List[PolynomialTerm]:
    return [PolynomialTerm(monomial=label, coeff=c) for label, c in p.labelled().items()]