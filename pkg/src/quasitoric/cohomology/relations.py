"""Intersection numbers and the relations among the divisor classes ``[D_i]``."""

import math
import typing
from fractions import Fraction

from ..complexes.characteristic import CharacteristicPair, Mode
from ..complexes.simplicial import format_face
from ..complexes.types import ValidationReport
from ..core.errors import DimensionMismatchError
from ..exact.linalg import Number, dot, vector
from ..exact.polynomial import MultiPoly, monomial_label, monomials_of_degree, multi_factorial
from ..virtualpoly.volume import volume_polynomial
from .operators import apply, linear_operator, operator_monomial


def self_intersection(
    pair: CharacteristicPair, h: typing.Sequence[Number], vol: typing.Optional[MultiPoly] = None
) -> Fraction:
    """``<(h_1 [D_1] + ... + h_m [D_m])^n, [X]> = n! Vol(h)``."""
    polynomial = vol if vol is not None else volume_polynomial(pair)
    return math.factorial(pair.dimension) * polynomial.evaluate(vector(h))


def top_product(
    pair: CharacteristicPair, indices: typing.AbstractSet[int], vol: typing.Optional[MultiPoly] = None
) -> Fraction:
    """``eps(d_I)`` for an ``n``-subset ``I`` (0-based)."""
    if len(indices) != pair.dimension:
        raise DimensionMismatchError("Top products take n distinct indices", body=format_face(indices))
    polynomial = vol if vol is not None else volume_polynomial(pair)
    exponent = tuple(1 if i in indices else 0 for i in range(pair.vertex_count))
    return apply(operator_monomial(exponent), polynomial).coefficient((0,) * pair.vertex_count)


def linear_relation_check(
    pair: CharacteristicPair, chi: typing.Sequence[Number], vol: typing.Optional[MultiPoly] = None
) -> ValidationReport:
    """``sum_i chi(l_i) d_i`` must annihilate ``Vol``."""
    character = vector(chi)
    if len(character) != pair.dimension:
        raise DimensionMismatchError("Character length differs from the ambient dimension", body=len(character))
    polynomial = vol if vol is not None else volume_polynomial(pair)
    operator = linear_operator([dot(character, ell) for ell in pair.functionals])
    image = apply(operator, polynomial)
    problems = [] if image.is_zero() else [f"{operator} applied to the volume polynomial gives {image}"]
    return ValidationReport(subject="linear relation", problems=problems)


def integral_top_values(pair: CharacteristicPair, vol: typing.Optional[MultiPoly] = None) -> ValidationReport:
    """In integer mode every ``eps(d^k)`` with ``|k| = n`` is an integer."""
    if pair.mode is not Mode.INTEGER:
        return ValidationReport(subject="integral top values")
    polynomial = vol if vol is not None else volume_polynomial(pair)
    names = tuple(f"d{i + 1}" for i in range(pair.vertex_count))
    problems = []
    for k in monomials_of_degree(pair.vertex_count, pair.dimension):
        value = polynomial.coefficient(k) * multi_factorial(k)
        if value.denominator != 1:
            problems.append(f"eps({monomial_label(k, names)}) = {value} is not an integer")
    return ValidationReport(subject="integral top values", problems=problems)
