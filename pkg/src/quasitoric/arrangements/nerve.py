import logging
import typing

from ..complexes.simplicial import Face, SimplicialComplex, face_key
from ..core.errors import DimensionMismatchError
from ..exact.linalg import unit_vector, zero_vector
from .subspace import AffineSubspace, SubspaceArrangement

logger = logging.getLogger(__name__)


def nerve(arrangement: SubspaceArrangement) -> SimplicialComplex:
    """
    The nerve: ``I`` is a face iff the members indexed by ``I`` meet.

    Built level by level; a subset is intersected only when all of its
    codimension-one subsets are faces.
    """
    level: typing.List[Face] = [frozenset([i]) for i in range(arrangement.size)]
    faces: typing.Set[Face] = set(level)
    tested = 0
    while level:
        candidates: typing.Set[Face] = set()
        for f in level:
            for j in range(max(f) + 1, arrangement.size):
                c = f | {j}
                if all(c - {v} in faces for v in c):
                    candidates.add(c)
        level = []
        for c in sorted(candidates, key=face_key):
            tested += 1
            if not arrangement.intersect(c).empty:
                level.append(c)
        faces.update(level)
    logger.debug("Nerve of %d members: %d faces, %d intersections tested", arrangement.size, len(faces), tested)
    facets = [f for f in faces if not any(f < g for g in faces)]
    return SimplicialComplex(arrangement.size, tuple(facets))


def _check_same_index_set(kx: SimplicialComplex, ky: SimplicialComplex) -> None:
    if kx.vertex_count != ky.vertex_count:
        raise DimensionMismatchError("Nerves are indexed by different sets", body=(kx.vertex_count, ky.vertex_count))


def dominates(kx: SimplicialComplex, ky: SimplicialComplex) -> bool:
    """``K_X >= K_Y``: every face of ``kx`` is a face of ``ky``."""
    _check_same_index_set(kx, ky)
    return all(ky.is_face(f) for f in kx.facets)


def nerve_isomorphic(k1: SimplicialComplex, k2: SimplicialComplex) -> bool:
    """Labeled isomorphism: the same faces on the same index set."""
    return k1.vertex_count == k2.vertex_count and set(k1.faces()) == set(k2.faces())


def compatible_map_exists(a: SubspaceArrangement, b: SubspaceArrangement) -> bool:
    """Whether a map from the union of ``a`` to the union of ``b`` compatible with both nerves exists."""
    if a.size != b.size:
        raise DimensionMismatchError("Arrangements are indexed by different sets", body=(a.size, b.size))
    return dominates(nerve(a), nerve(b))


def realize_nerve(d: SimplicialComplex) -> SubspaceArrangement:
    """
    An arrangement whose nerve is ``d``.

    The barycenters of the nonempty faces of ``d`` become the vertices
    ``0, e_1, ..., e_(N-1)`` of a simplex in ``R^(N-1)``; vertex ``i`` of ``d``
    maps to the affine hull of the barycenters of the faces containing ``i``.
    """
    labels = d.faces()
    if not labels:
        raise DimensionMismatchError("Cannot realize the empty complex")
    n = len(labels) - 1
    points = [zero_vector(n)] + [unit_vector(n, k) for k in range(n)]
    members = []
    for i in range(d.vertex_count):
        hull = [points[k] for k, f in enumerate(labels) if i in f]
        if not hull:
            raise DimensionMismatchError("Vertex lies in no face", body=i + 1)
        members.append(AffineSubspace.affine_hull(hull))
    return SubspaceArrangement(n, tuple(members))
