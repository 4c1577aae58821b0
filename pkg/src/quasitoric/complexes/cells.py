"""
The cell decomposition of a quasitoric manifold by a generic vector.

For a generic ``v`` every maximal cone ``tau`` gives one cell of real dimension
``2 ind(tau)``, where ``ind(tau)`` counts the incoming rays of ``tau``: ray
``u_i`` is incoming iff ``v`` translated along the facet of ``tau`` opposite to
``u_i`` meets ``tau``, i.e. ``tau`` and ``v + cone(u_j : j != i)`` intersect.
In cone coordinates this is the sign of the ``i``-th coordinate of ``v``.
"""

import logging
import typing
from dataclasses import dataclass

from ..core.errors import GenericPositionError
from ..core.options import RunOptions
from ..exact.linalg import Number, vector
from .fan import Fan, format_vector, generic_vector
from .simplicial import Face, format_face

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IncomingIndex:
    cone: Face
    index: int
    incoming: typing.Tuple[int, ...]


def incoming_index(fan: Fan, tau: typing.AbstractSet[int], v: typing.Sequence[Number]) -> IncomingIndex:
    """
    Incoming rays of ``tau`` with respect to ``v``.

    Raises:
        GenericPositionError: if ``v`` lies on a wall of the fan.
    """
    point = vector(v)
    wall = fan.wall_of(point)
    if wall is not None:
        raise GenericPositionError(f"Vector {format_vector(point)} is not generic", body=wall)
    cone = frozenset(tau)
    coords = fan.coordinates(cone, point)
    incoming = tuple(i for position, i in enumerate(sorted(cone)) if coords[position] > 0)
    return IncomingIndex(cone=cone, index=len(incoming), incoming=incoming)


def cell_vector(
    fan: Fan, v: typing.Optional[typing.Sequence[Number]] = None, *, options: typing.Optional[RunOptions] = None
) -> typing.Tuple[int, ...]:
    """``(c_0, ..., c_n)`` with ``c_k`` the number of maximal cones of index ``k``."""
    point = vector(v) if v is not None else generic_vector(fan, options=options)
    counts = [0] * (fan.dimension + 1)
    for cone in fan.cones:
        counts[incoming_index(fan, cone, point).index] += 1
    logger.debug("Cell vector for %s: %s", format_vector(point), counts)
    return tuple(counts)


def describe_indices(fan: Fan, v: typing.Sequence[Number]) -> typing.Dict[str, int]:
    return {format_face(cone): incoming_index(fan, cone, v).index for cone in fan.cones}
