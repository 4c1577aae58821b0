import itertools
import logging
import typing

from ..complexes.fan import primitive
from ..core.errors import ValidationFailedError
from ..exact.feasibility import LinearSystem, LPStatus, Relation, feasible, maximize
from ..exact.linalg import Matrix, Vector, dot, kernel, rank_of, scale
from .regions import Region
from .types import TailConeReport

logger = logging.getLogger(__name__)


def _recession_rows(system: LinearSystem) -> typing.Tuple[typing.List[Vector], typing.List[Vector]]:
    """Inequality rows ``a . d <= 0`` and equality rows ``a . d = 0`` of the recession cone."""
    inequalities = [c.functional for c in system.constraints if c.relation is not Relation.EQ]
    equalities = [c.functional for c in system.constraints if c.relation is Relation.EQ]
    return inequalities, equalities


def _extreme_rays(
    n: int, inequalities: typing.List[Vector], equalities: typing.List[Vector], lineality: typing.List[Vector]
) -> typing.List[Vector]:
    # rays of the pointed part, which lives in the orthogonal complement of the lineality space
    fixed = equalities + lineality
    needed = n - 1 - rank_of(fixed)
    if needed < 0:
        return []
    found: typing.Set[Vector] = set()
    for tight in itertools.combinations(range(len(inequalities)), needed):
        rows = fixed + [inequalities[j] for j in tight]
        line = kernel(Matrix.from_rows(rows, ncols=n))
        if len(line) != 1:
            continue
        for candidate in (line[0], scale(-1, line[0])):
            if all(dot(a, candidate) <= 0 for a in inequalities):
                found.add(primitive(candidate))
    return sorted(found)


def tail_cone(source: typing.Union[Region, LinearSystem]) -> TailConeReport:
    """
    The tail (recession) cone of a nonempty convex set given by linear constraints.

    The cone is ``{d : a . d <= 0}`` over the inequality rows and ``a . d = 0``
    over the equalities. It is a vector space iff no inequality row is strictly
    negative somewhere on it, which is decided by one LP per row.

    Raises:
        ValidationFailedError: if the set is empty.
    """
    system = source.system() if isinstance(source, Region) else source
    if not feasible(system).feasible:
        raise ValidationFailedError("Tail cone of an empty set")
    n = system.dimension
    inequalities, equalities = _recession_rows(system)
    cone = system.homogeneous()
    is_vector_space = True
    for a in inequalities:
        result = maximize(cone, [-x for x in a])
        if result.status is LPStatus.UNBOUNDED or (result.value is not None and result.value > 0):
            is_vector_space = False
            break
    all_rows = inequalities + equalities
    lineality = kernel(Matrix.from_rows(all_rows, ncols=n))
    rays = [] if is_vector_space else _extreme_rays(n, inequalities, equalities, list(lineality))
    logger.debug("Tail cone: lineality %d, rays %d, vector space %s", len(lineality), len(rays), is_vector_space)
    return TailConeReport(
        dimension=n,
        lineality=[list(v) for v in lineality],
        rays=[list(r) for r in rays],
        is_vector_space=is_vector_space,
    )
