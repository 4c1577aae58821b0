"""
Regions of a hyperplane arrangement.

Regions are the nonempty open cells ``{x : s_i (a_i . x - b_i) > 0}`` for sign
vectors ``s``. Coincident hyperplanes are merged into one wall before the
search and their signs are expanded afterwards, so every region still carries
one sign per original index. The search is a depth-first walk over sign
prefixes that stops as soon as a prefix is infeasible.

Bounded regions also get their vertices, a triangulation of their closure and
its exact volume. The closure is coned from the interior witness over its
facets; each face below the top level is pulled from its first vertex.
"""

from __future__ import annotations

import itertools
import logging
import math
import typing
from dataclasses import dataclass, field
from fractions import Fraction

from ..core.constants import MAX_ARRANGEMENT_SIZE
from ..core.errors import DimensionMismatchError
from ..exact.feasibility import Constraint, LinearSystem, LPStatus, Relation, feasible, gt, maximize
from ..exact.linalg import Matrix, Vector, det_of, dot, rank_of, solve_unique, sub, unit_vector
from .subspace import SubspaceArrangement
from .types import RegionReport

logger = logging.getLogger(__name__)

Simplex = typing.Tuple[Vector, ...]


@dataclass(frozen=True)
class Wall:
    """A hyperplane ``normal . x = offset`` shared by one or more arrangement members."""

    normal: Vector
    offset: Fraction
    members: typing.Tuple[typing.Tuple[int, int], ...]  # (member index, +1/-1 orientation relative to the wall)

    def value(self, x: typing.Sequence[Fraction]) -> Fraction:
        return dot(self.normal, x) - self.offset


def _normalized(normal: Vector, offset: Fraction) -> typing.Tuple[Vector, Fraction, int]:
    lead = next(x for x in normal if x != 0)
    factor = 1 / abs(lead) if lead > 0 else -1 / abs(lead)
    return tuple(x * factor for x in normal), offset * factor, (1 if lead > 0 else -1)


def merge_walls(arrangement: SubspaceArrangement) -> typing.List[Wall]:
    """Group coincident hyperplanes; walls come out in order of their first member."""
    if not arrangement.is_hyperplane_arrangement:
        raise DimensionMismatchError("Region enumeration needs a hyperplane arrangement")
    groups: typing.Dict[typing.Tuple[Vector, Fraction], typing.List[typing.Tuple[int, int]]] = {}
    for i, member in enumerate(arrangement.members):
        normal, offset = member.normal_and_offset()
        key_normal, key_offset, orientation = _normalized(normal, offset)
        groups.setdefault((key_normal, key_offset), []).append((i, orientation))
    return [Wall(normal=n, offset=b, members=tuple(m)) for (n, b), m in groups.items()]


@dataclass(frozen=True)
class Region:
    sign_vector: typing.Tuple[int, ...]
    witness: Vector
    bounded: bool
    vertices: typing.Tuple[Vector, ...] = ()
    simplices: typing.Tuple[Simplex, ...] = ()
    volume: typing.Optional[Fraction] = None
    walls: typing.Tuple[Wall, ...] = field(default=(), repr=False, compare=False)
    wall_signs: typing.Tuple[int, ...] = field(default=(), repr=False, compare=False)

    @property
    def label(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.sign_vector)

    def system(self) -> LinearSystem:
        """The open region as a strict linear system."""
        n = len(self.witness)
        constraints = [gt([s * a for a in w.normal], s * w.offset) for w, s in zip(self.walls, self.wall_signs)]
        return LinearSystem.of(n, constraints)


def region_system(region: Region) -> LinearSystem:
    return region.system()


def _expand_signs(walls: typing.Sequence[Wall], wall_signs: typing.Sequence[int], size: int) -> typing.Tuple[int, ...]:
    signs = [0] * size
    for wall, s in zip(walls, wall_signs):
        for index, orientation in wall.members:
            signs[index] = s * orientation
    return tuple(signs)


def _is_bounded(walls: typing.Sequence[Wall], wall_signs: typing.Sequence[int], n: int) -> bool:
    # recession cone {d : s_j normal_j . d >= 0} is {0} iff every coordinate is bounded on it
    rows = [Constraint(tuple(-s * a for a in w.normal), Relation.LE, Fraction(0)) for w, s in zip(walls, wall_signs)]
    cone = LinearSystem.of(n, rows)
    for k in range(n):
        for direction in (1, -1):
            objective = [direction * x for x in unit_vector(n, k)]
            if maximize(cone, objective).status is LPStatus.UNBOUNDED:
                return False
    return True


def _closure_vertices(walls: typing.Sequence[Wall], wall_signs: typing.Sequence[int], n: int) -> typing.List[Vector]:
    found: typing.Set[Vector] = set()
    for subset in itertools.combinations(range(len(walls)), n):
        normals = [walls[j].normal for j in subset]
        if rank_of(normals) < n:
            continue
        point = solve_unique(Matrix.from_rows(normals, ncols=n), [walls[j].offset for j in subset])
        if all(s * w.value(point) >= 0 for w, s in zip(walls, wall_signs)):
            found.add(point)
    return sorted(found)


def _affine_rank(points: typing.Sequence[Vector]) -> int:
    if not points:
        return -1
    return rank_of([sub(p, points[0]) for p in points[1:]]) if len(points) > 1 else 0


def _triangulate_face(points: typing.List[Vector], dim: int, walls: typing.Sequence[Wall]) -> typing.List[Simplex]:
    """Triangulate a ``dim``-dimensional face given by its vertex list, pulling from its first vertex."""
    if dim == 0:
        return [(points[0],)]
    apex = points[0]
    facets: typing.Dict[typing.FrozenSet[Vector], typing.List[Vector]] = {}
    for w in walls:
        on = [p for p in points if w.value(p) == 0]
        if len(on) == len(points) or apex in on:
            continue
        if _affine_rank(on) == dim - 1:
            facets.setdefault(frozenset(on), on)
    out: typing.List[Simplex] = []
    for on in facets.values():
        for simplex in _triangulate_face(on, dim - 1, walls):
            out.append((apex,) + simplex)
    return out


def triangulate_region(
    witness: Vector, vertices: typing.List[Vector], walls: typing.Sequence[Wall], n: int
) -> typing.List[Simplex]:
    """Triangulate a bounded region's closure into ``n``-simplices coned from the interior witness."""
    if n == 0:
        return [(witness,)]
    facets: typing.Dict[typing.FrozenSet[Vector], typing.List[Vector]] = {}
    for w in walls:
        on = [p for p in vertices if w.value(p) == 0]
        if _affine_rank(on) == n - 1:
            facets.setdefault(frozenset(on), on)
    out: typing.List[Simplex] = []
    for on in facets.values():
        for simplex in _triangulate_face(on, n - 1, walls):
            out.append((witness,) + simplex)
    return out


def simplex_volume(simplex: Simplex) -> Fraction:
    n = len(simplex) - 1
    if n == 0:
        return Fraction(1)
    base = simplex[0]
    return abs(det_of([sub(p, base) for p in simplex[1:]])) / math.factorial(n)


def _search(walls: typing.Sequence[Wall], n: int) -> typing.List[typing.Tuple[typing.Tuple[int, ...], Vector]]:
    results: typing.List[typing.Tuple[typing.Tuple[int, ...], Vector]] = []
    nodes = 0

    def visit(prefix: typing.Tuple[int, ...], system: LinearSystem) -> None:
        nonlocal nodes
        depth = len(prefix)
        if depth == len(walls):
            witness = feasible(system).witness
            assert witness is not None
            results.append((prefix, witness))
            return
        w = walls[depth]
        for s in (1, -1):
            nodes += 1
            extended = system.extended(gt([s * a for a in w.normal], s * w.offset))
            if feasible(extended).feasible:
                visit(prefix + (s,), extended)

    visit((), LinearSystem.of(n, []))
    logger.debug("Sign search over %d walls visited %d nodes, %d regions", len(walls), nodes, len(results))
    return results


def enumerate_regions(arrangement: SubspaceArrangement, *, bounded_only: bool = False) -> typing.List[Region]:
    """
    Every region of a hyperplane arrangement, ordered by sign vector (``+`` before ``-``).

    Raises:
        DimensionMismatchError: if a member is not a hyperplane.
    """
    n = arrangement.dimension
    walls = merge_walls(arrangement)
    if len(walls) > MAX_ARRANGEMENT_SIZE:
        logger.warning(
            "Enumerating regions of %d walls; intended scale is at most %d", len(walls), MAX_ARRANGEMENT_SIZE
        )
    regions = []
    for wall_signs, witness in _search(walls, n):
        bounded = _is_bounded(walls, wall_signs, n)
        if bounded_only and not bounded:
            continue
        signs = _expand_signs(walls, wall_signs, arrangement.size)
        if not bounded:
            regions.append(Region(signs, witness, False, walls=tuple(walls), wall_signs=wall_signs))
            continue
        vertices = _closure_vertices(walls, wall_signs, n)
        simplices = triangulate_region(witness, vertices, walls, n)
        volume = sum((simplex_volume(s) for s in simplices), Fraction(0))
        regions.append(
            Region(
                signs,
                witness,
                True,
                vertices=tuple(vertices),
                simplices=tuple(simplices),
                volume=volume,
                walls=tuple(walls),
                wall_signs=wall_signs,
            )
        )
    regions.sort(key=lambda r: r.label)
    return regions


def bounded_regions(arrangement: SubspaceArrangement) -> typing.List[Region]:
    return enumerate_regions(arrangement, bounded_only=True)


def region_report(region: Region) -> RegionReport:
    return RegionReport(
        sign_vector=region.label,
        bounded=region.bounded,
        witness=list(region.witness),
        vertices=[list(v) for v in region.vertices],
        volume=region.volume,
    )
