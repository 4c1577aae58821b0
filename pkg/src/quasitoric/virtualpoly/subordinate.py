"""
Subordinate maps of a characteristic pair.

For a support vector ``h`` the face ``I`` of the sphere gives the affine
subspace ``H_I = {x : l_i(x) = h_i, i in I}``. The canonical subordinate map
sends the barycenter of ``I`` to ``x_I``, the point of ``H_I`` nearest to the
origin, and extends linearly over every simplex of the barycentric
subdivision. Projection is linear in the offsets, so the map is additive in
``h``.
"""

from __future__ import annotations

import typing
from dataclasses import dataclass

from ..arrangements.subspace import SubspaceArrangement, build_arrangement
from ..complexes.characteristic import CharacteristicPair
from ..complexes.dual import oriented_chains
from ..complexes.simplicial import EMPTY_FACE, Face, face_key
from ..core.errors import DimensionMismatchError
from ..exact.linalg import Number, Vector, add, vector, zero_vector


@dataclass(frozen=True)
class ImageSimplex:
    """The image ``(x_I1, ..., x_In)`` of one top simplex of the subdivision, with its orientation sign."""

    chain: typing.Tuple[Face, ...]
    points: typing.Tuple[Vector, ...]
    sign: int


@dataclass(frozen=True)
class SubordinateMap:
    pair: CharacteristicPair
    h: Vector
    vertex_images: typing.Dict[Face, Vector]
    simplices: typing.Tuple[ImageSimplex, ...]

    def image(self, face: typing.AbstractSet[int]) -> Vector:
        return self.vertex_images[frozenset(face)]

    def __add__(self, other: "SubordinateMap") -> "SubordinateMap":
        if self.pair.sphere != other.pair.sphere or self.pair.functionals != other.pair.functionals:
            raise DimensionMismatchError("Subordinate maps of different pairs cannot be added")
        images = {face: add(x, other.vertex_images[face]) for face, x in self.vertex_images.items()}
        return _assemble(self.pair, add(self.h, other.h), images)

    def flipped(self) -> "SubordinateMap":
        """The same map on the sphere with reversed orientation."""
        return _assemble(self.pair.flipped(), self.h, dict(self.vertex_images))


def _assemble(pair: CharacteristicPair, h: Vector, images: typing.Dict[Face, Vector]) -> SubordinateMap:
    simplices = tuple(
        ImageSimplex(chain=chain.faces, points=tuple(images[f] for f in chain.faces), sign=chain.sign)
        for chain in oriented_chains(pair.sphere)
    )
    return SubordinateMap(pair=pair, h=h, vertex_images=images, simplices=simplices)


def _check_support(pair: CharacteristicPair, h: typing.Sequence[Number]) -> Vector:
    if len(h) != pair.vertex_count:
        raise DimensionMismatchError("Support vector needs one entry per vertex", body=(len(h), pair.vertex_count))
    return vector(h)


def distinguished_points(
    pair: CharacteristicPair,
    h: typing.Sequence[Number],
    arrangement: typing.Optional[SubspaceArrangement] = None,
) -> typing.Dict[Face, Vector]:
    """``x_I`` for every face ``I`` of the sphere, the empty face included (it maps to the origin)."""
    support = _check_support(pair, h)
    arr = arrangement if arrangement is not None else build_arrangement(pair, support)
    points: typing.Dict[Face, Vector] = {EMPTY_FACE: zero_vector(pair.dimension)}
    for face in sorted(pair.complex.faces(), key=face_key):
        space = arr.intersect(face).subspace
        if space is None:
            raise DimensionMismatchError("Functionals are dependent on a face", body=sorted(i + 1 for i in face))
        points[face] = space.nearest_to_origin()
    return points


def subordinate_map(pair: CharacteristicPair, h: typing.Sequence[Number]) -> SubordinateMap:
    support = _check_support(pair, h)
    return _assemble(pair, support, distinguished_points(pair, support))
