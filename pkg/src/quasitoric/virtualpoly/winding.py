"""
Winding numbers of a subordinate map around a point.

The degree of ``(f - a) / |f - a|`` is the signed number of times a ray from
``a`` crosses the oriented image of the sphere. A ray meets the image simplex
``(p_1, ..., p_n)`` transversally iff ``d = sum c_j (p_j - a)`` with every
``c_j > 0``; the crossing counts with the simplex sign times the sign of
``det(p_1 - a, ..., p_n - a)``. A ray through the boundary of a simplex, or
lying in the span of a flat one, is discarded and the next direction of a
fixed schedule is tried.
"""

import logging
import typing
from fractions import Fraction

from ..complexes.fan import format_vector
from ..core.constants import DEFAULT_SEED, MAX_RAY_RETRIES, RAY_EPSILON_DENOMINATOR
from ..core.errors import GenericPositionError, RayDegeneracyError
from ..core.options import RunOptions
from ..exact.feasibility import LinearSystem, eq, feasible, ge
from ..exact.linalg import Number, Vector, coordinates, det_of, rank_of, sign, sub, vector
from ..exact.sampling import random_nonzero_vector, seeded
from .subordinate import ImageSimplex, SubordinateMap

logger = logging.getLogger(__name__)


class _Degenerate(Exception):
    pass


def ray_directions(n: int, *, options: typing.Optional[RunOptions] = None) -> typing.Iterator[Vector]:
    """``(1, e, e^2, ...)`` with ``e = 1/97`` first, then seeded random directions."""
    retries = (options or {}).get("max_ray_retries", MAX_RAY_RETRIES)
    seed = (options or {}).get("seed", DEFAULT_SEED)
    epsilon = Fraction(1, RAY_EPSILON_DENOMINATOR)
    yield tuple(epsilon**k for k in range(n))
    rng = seeded(seed)
    for _ in range(retries - 1):
        yield random_nonzero_vector(rng, n)


def _contains(points: typing.Sequence[Vector], a: Vector) -> bool:
    k = len(points)
    constraints = [ge([1 if j == i else 0 for j in range(k)], 0) for i in range(k)]
    constraints.append(eq([1] * k, 1))
    for r in range(len(a)):
        constraints.append(eq([p[r] for p in points], a[r]))
    return feasible(LinearSystem.of(k, constraints)).feasible


def _crossing(simplex: ImageSimplex, a: Vector, d: Vector) -> int:
    columns = [sub(p, a) for p in simplex.points]
    determinant = det_of(columns)
    if determinant == 0:
        if _contains(simplex.points, a):
            raise GenericPositionError("Point lies on the image", body=[[str(x) for x in p] for p in simplex.points])
        if rank_of(columns + [d]) == rank_of(columns):
            raise _Degenerate()
        return 0
    c = coordinates(columns, d)
    if any(x < 0 for x in c):
        return 0
    if any(x == 0 for x in c):
        raise _Degenerate()
    return simplex.sign * sign(determinant)


def winding_number(
    f: SubordinateMap, a: typing.Sequence[Number], *, options: typing.Optional[RunOptions] = None
) -> int:
    """
    The mapping degree of ``f`` around ``a``.

    Raises:
        GenericPositionError: if ``a`` lies on the image of ``f``.
        RayDegeneracyError: if every ray of the schedule is degenerate.
    """
    point = vector(a)
    n = len(point)
    for attempt, d in enumerate(ray_directions(n, options=options)):
        try:
            return sum(_crossing(s, point, d) for s in f.simplices)
        except _Degenerate:
            logger.debug("Ray %d from %s is degenerate; retrying", attempt, format_vector(point))
    raise RayDegeneracyError("Every ray direction was degenerate", body=[str(x) for x in point])
