"""
Affine subspaces and arrangements of them.

An :class:`AffineSubspace` keeps both descriptions: a system of linear
equations and a base point with a basis of its direction space. Subspaces are
always nonempty; operations that can produce the empty set return ``None`` or
an :class:`Intersection` carrying a certificate.
"""

from __future__ import annotations

import logging
import typing
from dataclasses import dataclass
from fractions import Fraction

from ..complexes.characteristic import CharacteristicPair
from ..core.errors import DimensionMismatchError
from ..exact.linalg import (
    Matrix,
    Number,
    SolveStatus,
    Vector,
    dot,
    is_zero,
    orthogonal_complement,
    rank_of,
    solve,
    span_basis,
    sub,
    vector,
    zero_vector,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineSubspace:
    dimension: int
    equations: typing.Tuple[typing.Tuple[Vector, Fraction], ...]
    point: Vector
    directions: typing.Tuple[Vector, ...]

    @classmethod
    def ambient(cls, n: int) -> "AffineSubspace":
        return cls(n, (), zero_vector(n), tuple(orthogonal_complement([], n)))

    @classmethod
    def from_equations(
        cls, n: int, equations: typing.Sequence[typing.Tuple[typing.Sequence[Number], Number]]
    ) -> typing.Optional["AffineSubspace"]:
        """The solution set of ``a . x = b`` for every ``(a, b)``, or ``None`` if it is empty."""
        rows = [vector(a) for a, _ in equations]
        for r in rows:
            if len(r) != n:
                raise DimensionMismatchError("Equation length differs from the ambient dimension", body=(len(r), n))
        if not rows:
            return cls.ambient(n)
        result = solve(Matrix.from_rows(rows, ncols=n), [b for _, b in equations])
        if result.status is SolveStatus.INCONSISTENT or result.particular is None:
            return None
        reduced = _independent_equations(rows, [Fraction(b) for _, b in equations])
        return cls(n, reduced, result.particular, tuple(result.kernel))

    @classmethod
    def hyperplane(cls, normal: typing.Sequence[Number], offset: Number) -> "AffineSubspace":
        a = vector(normal)
        if is_zero(a):
            raise DimensionMismatchError("Hyperplane normal must be nonzero")
        space = cls.from_equations(len(a), [(a, offset)])
        assert space is not None
        return space

    @classmethod
    def affine_hull(cls, points: typing.Sequence[typing.Sequence[Number]]) -> "AffineSubspace":
        if not points:
            raise DimensionMismatchError("Affine hull of no points")
        base = vector(points[0])
        n = len(base)
        directions = tuple(span_basis([sub(vector(p), base) for p in points[1:]], n))
        normals = orthogonal_complement(list(directions), n)
        return cls(n, tuple((w, dot(w, base)) for w in normals), base, directions)

    # queries

    @property
    def affine_dimension(self) -> int:
        return len(self.directions)

    @property
    def is_hyperplane(self) -> bool:
        return self.affine_dimension == self.dimension - 1

    def normal_and_offset(self) -> typing.Tuple[Vector, Fraction]:
        if not self.is_hyperplane:
            raise DimensionMismatchError("Not a hyperplane", body=self.affine_dimension)
        return self.equations[0]

    def contains(self, point: typing.Sequence[Number]) -> bool:
        return all(dot(a, point) == b for a, b in self.equations)

    def is_subset(self, other: "AffineSubspace") -> bool:
        if not other.contains(self.point):
            return False
        return all(dot(a, d) == 0 for a, _ in other.equations for d in self.directions)

    def same_as(self, other: "AffineSubspace") -> bool:
        return self.is_subset(other) and other.is_subset(self)

    def intersect(self, other: "AffineSubspace") -> typing.Optional["AffineSubspace"]:
        if self.dimension != other.dimension:
            raise DimensionMismatchError(
                "Subspaces live in different dimensions", body=(self.dimension, other.dimension)
            )
        return AffineSubspace.from_equations(self.dimension, list(self.equations) + list(other.equations))

    def nearest_to_origin(self) -> Vector:
        """The orthogonal projection of the origin onto the subspace."""
        if not self.equations:
            return zero_vector(self.dimension)
        rows = [a for a, _ in self.equations]
        gram = Matrix.from_rows([[dot(a, b) for b in rows] for a in rows])
        y = solve(gram, [b for _, b in self.equations]).particular
        assert y is not None
        return tuple(sum((c * a[k] for c, a in zip(y, rows)), Fraction(0)) for k in range(self.dimension))


def _independent_equations(
    rows: typing.List[Vector], bounds: typing.List[Fraction]
) -> typing.Tuple[typing.Tuple[Vector, Fraction], ...]:
    kept: typing.List[typing.Tuple[Vector, Fraction]] = []
    for a, b in zip(rows, bounds):
        if rank_of([k for k, _ in kept] + [a]) > len(kept):
            kept.append((a, b))
    return tuple(kept)


@dataclass(frozen=True)
class Intersection:
    """
    ``H_I`` for the member indices ``I``.

    ``subspace`` is ``None`` when the intersection is empty; ``certificate`` then
    combines the equations to ``0 = c`` with ``c != 0``.
    """

    indices: typing.FrozenSet[int]
    subspace: typing.Optional[AffineSubspace]
    certificate: typing.Optional[Vector] = None

    @property
    def empty(self) -> bool:
        return self.subspace is None


@dataclass(frozen=True)
class SubspaceArrangement:
    dimension: int
    members: typing.Tuple[AffineSubspace, ...]

    def __post_init__(self) -> None:
        for m in self.members:
            if m.dimension != self.dimension:
                raise DimensionMismatchError("Arrangement members must share the ambient dimension")

    @classmethod
    def of_hyperplanes(
        cls, n: int, hyperplanes: typing.Sequence[typing.Tuple[typing.Sequence[Number], Number]]
    ) -> "SubspaceArrangement":
        return cls(n, tuple(AffineSubspace.hyperplane(a, b) for a, b in hyperplanes))

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_hyperplane_arrangement(self) -> bool:
        return all(m.is_hyperplane for m in self.members)

    def intersect(self, indices: typing.Iterable[int]) -> Intersection:
        """``H_I``: the intersection of the members indexed by ``indices`` (the ambient space for none)."""
        chosen = frozenset(indices)
        if any(i < 0 or i >= self.size for i in chosen):
            raise DimensionMismatchError("Index outside the arrangement", body=sorted(chosen))
        equations = [e for i in sorted(chosen) for e in self.members[i].equations]
        space = AffineSubspace.from_equations(self.dimension, equations)
        if space is not None:
            return Intersection(chosen, space)
        rows = [a for a, _ in equations]
        result = solve(Matrix.from_rows(rows, ncols=self.dimension), [b for _, b in equations])
        return Intersection(chosen, None, result.certificate)


def intersect(arrangement: SubspaceArrangement, indices: typing.Iterable[int]) -> Intersection:
    return arrangement.intersect(indices)


def build_arrangement(pair: CharacteristicPair, h: typing.Sequence[Number]) -> SubspaceArrangement:
    """``AP(h)``: the hyperplanes ``H_i = {l_i(x) = h_i}``."""
    if len(h) != pair.vertex_count:
        raise DimensionMismatchError("Support vector needs one entry per vertex", body=(len(h), pair.vertex_count))
    return SubspaceArrangement.of_hyperplanes(pair.dimension, list(zip(pair.functionals, h)))
