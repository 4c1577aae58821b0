"""
Complete simplicial fans.

A fan is stored as its primitive integer ray generators and its maximal cones
(``n``-subsets of ray indices). The ambient space carries the standard
orientation: a cone's sign is the sign of the determinant of its rays listed
in increasing index order.
"""

from __future__ import annotations

import logging
import math
import typing
from dataclasses import dataclass, field
from fractions import Fraction

from ..core.constants import (
    COMPLETENESS_RANDOM_DIRECTIONS,
    COMPLETENESS_SEED,
    MAX_GENERIC_ATTEMPTS,
    MAX_PERTURBATIONS,
    RAY_EPSILON_DENOMINATOR,
)
from ..core.errors import DimensionMismatchError, GenericPositionError, NotAFaceError, ValidationFailedError
from ..core.options import RunOptions
from ..core.rationals import format_rational
from ..exact.linalg import Number, Vector, add, coordinates, det_of, rank_of, scale, sign, unit_vector, vector
from ..exact.sampling import random_nonzero_vector, seeded
from .simplicial import Face, SimplicialComplex, format_face
from .sphere import OrientedSphere, pseudomanifold_problems
from .types import ValidationReport

logger = logging.getLogger(__name__)


def primitive(v: typing.Sequence[Number]) -> typing.Tuple[Fraction, ...]:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    values = vector(v)
    if all(x == 0 for x in values):
        raise DimensionMismatchError("Zero vector does not span a ray")
    common = math.lcm(*(x.denominator for x in values))
    integers = [int(x * common) for x in values]
    g = math.gcd(*integers)
    return tuple(Fraction(x // g) for x in integers)


def format_vector(v: typing.Sequence[Fraction]) -> str:
    return "(" + ",".join(format_rational(Fraction(x)) for x in v) + ")"


@dataclass(frozen=True)
class Fan:
    dimension: int
    rays: typing.Tuple[Vector, ...]
    cones: typing.Tuple[Face, ...]
    complex: SimplicialComplex = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        for r in self.rays:
            if len(r) != self.dimension:
                raise DimensionMismatchError("Ray length differs from the fan dimension", body=(len(r), self.dimension))
        object.__setattr__(self, "complex", SimplicialComplex(len(self.rays), self.cones))
        object.__setattr__(self, "cones", self.complex.facets)

    @classmethod
    def from_data(
        cls,
        dimension: int,
        rays: typing.Sequence[typing.Sequence[Number]],
        cones: typing.Iterable[typing.Iterable[int]],
    ) -> "Fan":
        """Build a fan from raw rays (normalized to primitive) and 0-based cones."""
        return cls(
            dimension=dimension,
            rays=tuple(primitive(r) for r in rays),
            cones=tuple(frozenset(c) for c in cones),
        )

    @property
    def ray_count(self) -> int:
        return len(self.rays)

    def cone_rays(self, cone: typing.AbstractSet[int]) -> typing.List[Vector]:
        return [self.rays[i] for i in sorted(cone)]

    def cone_det(self, cone: typing.AbstractSet[int]) -> Fraction:
        return det_of(self.cone_rays(cone))

    def cone_sign(self, cone: typing.AbstractSet[int]) -> int:
        return sign(self.cone_det(cone))

    def coordinates(self, cone: typing.AbstractSet[int], v: typing.Sequence[Number]) -> Vector:
        """Coefficients of ``v`` in the ray basis of a maximal cone (increasing ray order)."""
        if frozenset(cone) not in self.cones:
            raise NotAFaceError("Not a maximal cone", body=format_face(cone))
        return coordinates(self.cone_rays(cone), v)

    def contains(self, cone: typing.AbstractSet[int], v: typing.Sequence[Number], *, strict: bool = False) -> bool:
        c = self.coordinates(cone, v)
        return all(x > 0 for x in c) if strict else all(x >= 0 for x in c)

    def cones_containing(self, v: typing.Sequence[Number], *, strict: bool = False) -> typing.List[Face]:
        return [c for c in self.cones if self.contains(c, v, strict=strict)]

    def sphere(self) -> OrientedSphere:
        """The underlying sphere, each facet signed by its ray determinant.

        Raises:
            ValidationFailedError: if some maximal cone is not full-dimensional.
        """
        signs = []
        for cone in self.cones:
            s = self.cone_sign(cone)
            if s == 0:
                raise ValidationFailedError("Maximal cone is not full-dimensional", body=format_face(cone))
            signs.append(s)
        return OrientedSphere(self.complex, tuple(signs))

    def wall_of(self, v: typing.Sequence[Number]) -> typing.Optional[str]:
        """Describe a linear wall through ``v`` (a vanishing cone coordinate), or ``None`` if ``v`` is generic."""
        for cone in self.cones:
            for i, x in zip(sorted(cone), self.coordinates(cone, v)):
                if x == 0:
                    return f"cone {format_face(cone)} without ray {i + 1}"
        return None


def _independence_problems(fan: Fan) -> typing.List[str]:
    problems = []
    for cone in fan.cones:
        if len(cone) != fan.dimension:
            problems.append(f"cone {format_face(cone)} has {len(cone)} rays, expected {fan.dimension}")
        elif rank_of(fan.cone_rays(cone)) < fan.dimension:
            problems.append(f"rays of cone {format_face(cone)} are linearly dependent")
    return problems


def _completeness_directions(n: int) -> typing.List[Vector]:
    directions = []
    for i in range(n):
        directions.append(unit_vector(n, i))
        directions.append(scale(-1, unit_vector(n, i)))
    rng = seeded(COMPLETENESS_SEED)
    directions.extend(random_nonzero_vector(rng, n) for _ in range(COMPLETENESS_RANDOM_DIRECTIONS))
    return directions


def _on_cone_boundary(fan: Fan, d: Vector) -> bool:
    for cone in fan.cones:
        c = fan.coordinates(cone, d)
        if all(x >= 0 for x in c) and any(x == 0 for x in c):
            return True
    return False


def completeness_problems(fan: Fan) -> typing.List[str]:
    """Sampled completeness: every battery direction lies in the interior of exactly one cone."""
    problems = []
    rng = seeded(COMPLETENESS_SEED + 1)
    for d in _completeness_directions(fan.dimension):
        perturbed = d
        attempts = 0
        while _on_cone_boundary(fan, perturbed):
            attempts += 1
            if attempts > MAX_PERTURBATIONS:
                break
            step = Fraction(1, RAY_EPSILON_DENOMINATOR**attempts)
            perturbed = add(d, scale(step, random_nonzero_vector(rng, fan.dimension)))
            logger.debug("Completeness direction %s on a cone wall; perturbed to %s", d, perturbed)
        if attempts > MAX_PERTURBATIONS:
            problems.append(f"direction {format_vector(d)} could not be moved off the cone walls")
            continue
        covering = fan.cones_containing(perturbed, strict=True)
        if len(covering) != 1:
            problems.append(f"not complete: direction {format_vector(perturbed)} lies in {len(covering)} maximal cones")
    return problems


def validate_fan(fan: Fan) -> ValidationReport:
    """
    Check ray independence per cone, the pseudomanifold and orientation
    conditions, and sampled completeness.

    Completeness is tested on the ``2n`` signed unit directions plus a fixed
    battery of seeded random directions, so it is a semi-decision: a passing
    report means no sampled direction was uncovered or doubly covered.
    """
    problems = _independence_problems(fan)
    if problems:
        return ValidationReport(subject="fan", problems=problems)
    structure = pseudomanifold_problems(fan.complex)
    if not structure:
        structure = fan.sphere().coherence_problems()
    problems.extend(structure)
    problems.extend(completeness_problems(fan))
    return ValidationReport(subject="fan", problems=problems)


def generic_vector(
    fan: Fan, seed: typing.Optional[int] = None, *, options: typing.Optional[RunOptions] = None
) -> Vector:
    """
    A rational vector with a nonzero coordinate in every maximal cone basis.

    Without a seed the first candidate is the sum of the rays of the first
    maximal cone; with one it is a seeded random vector. Seeded perturbations
    of shrinking size follow until no cone coordinate vanishes.

    Raises:
        GenericPositionError: if every attempt lies on a wall.
    """
    if options is not None and "seed" in options:
        seed = options["seed"]
    if not fan.cones:
        raise GenericPositionError("Fan has no maximal cones")
    rng = seeded(seed)
    if seed is None:
        base = fan.cone_rays(fan.cones[0])
        start = tuple(sum(column, Fraction(0)) for column in zip(*base))
    else:
        start = random_nonzero_vector(rng, fan.dimension)
    v = start
    for attempt in range(1, MAX_GENERIC_ATTEMPTS + 1):
        wall = fan.wall_of(v)
        if wall is None:
            return v
        logger.debug("Candidate %s lies on %s; perturbing", format_vector(v), wall)
        step = Fraction(1, RAY_EPSILON_DENOMINATOR * attempt)
        v = add(start, scale(step, random_nonzero_vector(rng, fan.dimension)))
    raise GenericPositionError("No generic vector found", body=MAX_GENERIC_ATTEMPTS)
