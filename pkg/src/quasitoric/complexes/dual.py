from __future__ import annotations

import itertools
import typing
from dataclasses import dataclass

from .simplicial import EMPTY_FACE, Face, SimplicialComplex, face_key
from .sphere import OrientedSphere


@dataclass(frozen=True)
class OrientedChain:
    """
    A top simplex of the barycentric subdivision: the chain ``I_1 < ... < I_n``
    obtained by adding the facet's vertices in ``order``, with ``sign`` equal to
    the facet sign times the sign of the permutation.
    """

    facet: Face
    order: typing.Tuple[int, ...]
    sign: int

    @property
    def faces(self) -> typing.Tuple[Face, ...]:
        return tuple(frozenset(self.order[: k + 1]) for k in range(len(self.order)))


def permutation_sign(order: typing.Sequence[int]) -> int:
    """Sign of the permutation taking ``sorted(order)`` to ``order``."""
    s = 1
    items = list(order)
    for i, j in itertools.combinations(range(len(items)), 2):
        if items[i] > items[j]:
            s = -s
    return s


def oriented_chains(sphere: OrientedSphere) -> typing.List[OrientedChain]:
    """Every top simplex of the subdivision, oriented compatibly with the sphere."""
    out = []
    for facet, s in sphere.signed_facets():
        for order in itertools.permutations(sorted(facet)):
            out.append(OrientedChain(facet=facet, order=order, sign=s * permutation_sign(order)))
    return out


@dataclass(frozen=True)
class DualComplex:
    """
    The dual cell ``G_I`` of every face ``I`` of the sphere, realized in the
    barycentric subdivision as the chains whose faces all contain ``I``.
    ``G_empty`` is the whole subdivision.
    """

    sphere: OrientedSphere
    subdivision: SimplicialComplex
    labels: typing.Tuple[Face, ...]
    cells: typing.Dict[Face, SimplicialComplex]

    def cell(self, face: typing.AbstractSet[int]) -> SimplicialComplex:
        return self.cells[frozenset(face)]

    def cell_dimension(self, face: typing.AbstractSet[int]) -> int:
        f = frozenset(face)
        if not f:
            return self.sphere.dimension
        return self.sphere.rank - len(f)

    def contains(self, larger: typing.AbstractSet[int], smaller: typing.AbstractSet[int]) -> bool:
        """``G_larger`` contains ``G_smaller`` (as sets of simplices)."""
        big = self.cell(larger)
        return all(big.is_face(f) for f in self.cell(smaller).facets)


def dual_complex(sphere: OrientedSphere) -> DualComplex:
    subdivision, labels = sphere.base.barycentric_subdivision()
    cells: typing.Dict[Face, SimplicialComplex] = {}
    for face in sorted(sphere.base.faces(include_empty=True), key=face_key):
        if face == EMPTY_FACE:
            cells[face] = subdivision
            continue
        members = [k for k, label in enumerate(labels) if face <= label]
        facets = []
        for chain in subdivision.facets:
            inside = frozenset(k for k in chain if k in members)
            if inside:
                facets.append(inside)
        maximal = [f for f in set(facets) if not any(f < g for g in facets)]
        cells[face] = SimplicialComplex(len(labels), tuple(maximal))
    return DualComplex(sphere=sphere, subdivision=subdivision, labels=labels, cells=cells)
