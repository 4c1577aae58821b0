from __future__ import annotations

import enum
import typing
from dataclasses import dataclass
from fractions import Fraction

from ..core.errors import DimensionMismatchError, NotAFaceError
from ..exact.linalg import Number, Vector, det_of, rank_of, sign, vector
from .fan import Fan
from .simplicial import Face, SimplicialComplex, face_key, format_face
from .sphere import OrientedSphere
from .types import ValidationReport


class Mode(str, enum.Enum):
    INTEGER = "integer"
    REAL = "real"


@dataclass(frozen=True)
class CharacteristicPair:
    """
    An oriented sphere with one functional ``l_i`` per vertex.

    ``fan`` is present when the sphere comes from a complete fan; the cell
    decomposition needs it, everything else only uses the sphere and the
    functionals.
    """

    sphere: OrientedSphere
    functionals: typing.Tuple[Vector, ...]
    mode: Mode = Mode.INTEGER
    fan: typing.Optional[Fan] = None

    def __post_init__(self) -> None:
        if len(self.functionals) != self.sphere.vertex_count:
            raise DimensionMismatchError(
                "One functional per vertex is required", body=(len(self.functionals), self.sphere.vertex_count)
            )
        n = self.sphere.rank
        for ell in self.functionals:
            if len(ell) != n:
                raise DimensionMismatchError("Functional length differs from the sphere rank", body=(len(ell), n))

    @classmethod
    def from_fan(
        cls,
        fan: Fan,
        functionals: typing.Optional[typing.Sequence[typing.Sequence[Number]]] = None,
        mode: Mode = Mode.INTEGER,
    ) -> "CharacteristicPair":
        """Pair a fan with functionals, defaulting to the rays themselves."""
        ells = tuple(vector(f) for f in functionals) if functionals is not None else fan.rays
        return cls(sphere=fan.sphere(), functionals=ells, mode=mode, fan=fan)

    @property
    def dimension(self) -> int:
        """Ambient dimension ``n``."""
        return self.sphere.rank

    @property
    def vertex_count(self) -> int:
        return self.sphere.vertex_count

    @property
    def complex(self) -> SimplicialComplex:
        return self.sphere.base

    @property
    def facets(self) -> typing.Tuple[Face, ...]:
        return self.sphere.facets

    def face_functionals(self, face: typing.AbstractSet[int]) -> typing.List[Vector]:
        return [self.functionals[i] for i in sorted(face)]

    def facet_det(self, facet: typing.AbstractSet[int]) -> Fraction:
        """``det(l_i : i in facet)`` with the functionals in increasing vertex order."""
        return det_of(self.face_functionals(facet))

    def sign_of(self, facet: typing.AbstractSet[int]) -> int:
        """
        ``sign(I)``: the sign of ``det(l_I)`` with ``I`` ordered positively.

        Equals the facet's orientation sign times the sign of the determinant in
        increasing order.

        Raises:
            NotAFaceError: if ``facet`` is not a facet.
        """
        f = frozenset(facet)
        if not self.sphere.base.is_facet(f):
            raise NotAFaceError("sign is defined on facets only", body=format_face(f))
        return self.sphere.sign(f) * sign(self.facet_det(f))

    def vertex_weight(self, facet: typing.AbstractSet[int]) -> Fraction:
        """``sign(I) * |det e_I|`` with ``e_I`` dual to ``l_I``; equals ``orientation / det(l_I)``."""
        f = frozenset(facet)
        return Fraction(self.sign_of(f)) / abs(self.facet_det(f))

    def flipped(self) -> "CharacteristicPair":
        """The same data with the sphere orientation reversed."""
        return CharacteristicPair(self.sphere.reversed(), self.functionals, self.mode, self.fan)


def validate_characteristic(pair: CharacteristicPair) -> ValidationReport:
    """Independence of the functionals on every face, and unimodularity per facet in integer mode."""
    problems: typing.List[str] = []
    dependent: typing.List[Face] = []
    for face in sorted(pair.complex.faces(), key=face_key):
        if any(d <= face for d in dependent):
            continue
        if rank_of(pair.face_functionals(face)) < len(face):
            dependent.append(face)
            problems.append(f"functionals dependent on face {format_face(face)}")
    if pair.mode is Mode.INTEGER:
        for i, ell in enumerate(pair.functionals):
            if any(x.denominator != 1 for x in ell):
                problems.append(f"functional {i + 1} is not integral")
        for facet in pair.facets:
            if any(d <= facet for d in dependent):
                continue
            d = pair.facet_det(facet)
            if abs(d) != 1:
                problems.append(f"facet {format_face(facet)} has determinant {d}, expected +1 or -1")
    problems.extend(pair.sphere.coherence_problems())
    return ValidationReport(subject="characteristic pair", problems=problems)
