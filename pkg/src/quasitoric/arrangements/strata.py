import logging
import typing

from ..complexes.simplicial import Face, face_key
from .nerve import nerve
from .subspace import SubspaceArrangement
from .types import Stratum

logger = logging.getLogger(__name__)


def _closure(arrangement: SubspaceArrangement, face: Face) -> Face:
    """All members containing ``H_face``."""
    space = arrangement.intersect(face).subspace
    assert space is not None
    return frozenset(j for j, member in enumerate(arrangement.members) if space.is_subset(member))


def stratify(arrangement: SubspaceArrangement) -> typing.List[Stratum]:
    """
    The natural stratification of the union: points are grouped by the set of members they lie on.

    A label ``I`` occurs exactly when it is closed, i.e. ``I`` is every member
    containing ``H_I``; a proper affine subspace is never covered by finitely
    many smaller ones, so each closed label has a nonempty stratum. The rank of
    a stratum is the length of the longest strictly decreasing chain of strata
    starting at it.
    """
    labels: typing.Set[Face] = set()
    for face in nerve(arrangement).faces():
        labels.add(_closure(arrangement, face))
    ordered = sorted(labels, key=face_key)

    ranks: typing.Dict[Face, int] = {}
    for label in sorted(ordered, key=len, reverse=True):
        below = [ranks[other] for other in ranks if label < other]
        ranks[label] = 1 + max(below, default=0)

    strata = []
    for label in ordered:
        space = arrangement.intersect(label).subspace
        assert space is not None
        strata.append(
            Stratum(label=[i + 1 for i in sorted(label)], dimension=space.affine_dimension, rank=ranks[label])
        )
    logger.debug("Stratified %d members into %d strata", arrangement.size, len(strata))
    return strata
