"""
Homotopy types of unions of hyperplanes and of complements of convex sets.

A hyperplane arrangement whose normals span ``R^n`` has a union homotopy
equivalent to a wedge of ``(n-1)``-spheres, one per bounded region. When the
normals only span a subspace, the union splits off the common direction space
``V`` and the count is done on the quotient ``V^perp``.

For a union ``U`` of open convex sets, members whose tail cone is not a vector
space can be dropped; when the remaining tails share one subspace ``V`` the
complement of ``U`` is a transversal ``V^perp`` minus finitely many points.
"""

import logging
import typing
from fractions import Fraction

from ..core.errors import ValidationFailedError
from ..exact.feasibility import LinearSystem, feasible
from ..exact.linalg import Matrix, Vector, dot, kernel, orthogonal_complement, rank_of, solve, span_basis, sub
from .regions import bounded_regions
from .subspace import AffineSubspace, SubspaceArrangement
from .tail import tail_cone
from .types import ComplementHomotopyReport, ReducedMember, UnionHomotopyReport

logger = logging.getLogger(__name__)


def _project_onto(basis: typing.Sequence[Vector], point: Vector) -> Vector:
    """Orthogonal projection of ``point`` onto the span of ``basis``."""
    if not basis:
        return tuple(Fraction(0) for _ in point)
    gram = Matrix.from_rows([[dot(a, b) for b in basis] for a in basis])
    coefficients = solve(gram, [dot(a, point) for a in basis]).particular
    assert coefficients is not None
    return tuple(sum((c * a[k] for c, a in zip(coefficients, basis)), Fraction(0)) for k in range(len(point)))


def quotient_arrangement(arrangement: SubspaceArrangement) -> typing.Tuple[SubspaceArrangement, typing.List[Vector]]:
    """The arrangement restricted to the span of its normals, in coordinates of a basis of that span."""
    normals = [m.normal_and_offset()[0] for m in arrangement.members]
    basis = span_basis(normals, arrangement.dimension)
    hyperplanes = []
    for m in arrangement.members:
        a, b = m.normal_and_offset()
        hyperplanes.append(([dot(a, w) for w in basis], b))
    return SubspaceArrangement.of_hyperplanes(len(basis), hyperplanes), basis


def union_homotopy(arrangement: SubspaceArrangement) -> UnionHomotopyReport:
    """Wedge-of-spheres description of the union of a hyperplane arrangement."""
    n = arrangement.dimension
    if arrangement.size == 0:
        return UnionHomotopyReport(
            nondegenerate=False,
            linearity_space=[list(v) for v in orthogonal_complement([], n)],
            wedge_dim=-1,
            sphere_count=0,
            homology_ranks=[],
        )
    normals = [m.normal_and_offset()[0] for m in arrangement.members]
    linearity = kernel(Matrix.from_rows(normals, ncols=n))
    quotient, _ = quotient_arrangement(arrangement)
    wedge_dim = n - 1 - len(linearity)
    spheres = len(bounded_regions(quotient))
    if wedge_dim == 0:
        ranks = [1 + spheres]
    else:
        ranks = [1] + [0] * (wedge_dim - 1) + [spheres]
    logger.debug("Union of %d hyperplanes: wedge of %d spheres of dimension %d", arrangement.size, spheres, wedge_dim)
    return UnionHomotopyReport(
        nondegenerate=not linearity,
        linearity_space=[list(v) for v in linearity],
        wedge_dim=wedge_dim,
        sphere_count=spheres,
        homology_ranks=ranks,
    )


def complement_homotopy(members: typing.Sequence[LinearSystem]) -> ComplementHomotopyReport:
    """
    Reduce the complement of a union of open convex sets.

    Raises:
        ValidationFailedError: if a member is empty.
    """
    if not members:
        raise ValidationFailedError("No members given")
    n = members[0].dimension
    retained: typing.List[ReducedMember] = []
    tails: typing.List[AffineSubspace] = []
    for index, system in enumerate(members):
        witness = feasible(system).witness
        if witness is None:
            raise ValidationFailedError("Member is empty", body=index + 1)
        tail = tail_cone(system)
        if not tail.is_vector_space:
            continue
        directions = [tuple(Fraction(x) for x in v) for v in tail.lineality]
        retained.append(ReducedMember(index=index + 1, point=list(witness), directions=[list(d) for d in directions]))
        tails.append(AffineSubspace(n, (), witness, tuple(directions)))

    if not retained:
        return ComplementHomotopyReport(
            retained=[],
            conclusion=f"no member has a linear tail cone; the complement is homotopy equivalent to R^{n}",
        )

    if not all(_same_span(tails[0].directions, t.directions) for t in tails[1:]):
        return ComplementHomotopyReport(
            retained=retained,
            conclusion="retained tails differ; the complement of the union of the reduced members is the reduced form",
        )

    v_basis = list(tails[0].directions)
    transversal = orthogonal_complement(v_basis, n)
    points: typing.List[Vector] = []
    for t in tails:
        b = sub(t.point, _project_onto(v_basis, t.point))
        if b not in points:
            points.append(b)
    return ComplementHomotopyReport(
        retained=retained,
        common_tail=[list(v) for v in v_basis],
        transversal=[list(v) for v in transversal],
        points=[list(p) for p in points],
        removed_points=len(points),
        conclusion=f"complement is homotopy equivalent to R^{len(transversal)} minus {len(points)} point(s)",
    )


def _same_span(a: typing.Sequence[Vector], b: typing.Sequence[Vector]) -> bool:
    return len(a) == len(b) == rank_of(list(a) + list(b))
