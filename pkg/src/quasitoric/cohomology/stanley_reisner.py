"""
The Stanley-Reisner presentation ``Q[v_1..v_m] / (I_K + (theta_1..theta_n))``.

``I_K`` is generated by the monomials of the minimal non-faces, and
``theta_j = sum_i l_i[j] v_i`` for the coordinate characters. Modulo ``I_K``
the degree ``d`` part is spanned by the monomials supported on faces, and the
linear relations in degree ``d`` are spanned by ``theta_j`` times the
face-supported monomials of degree ``d - 1``, with non-face terms dropped.
"""

import logging
import typing
from dataclasses import dataclass

from ..complexes.characteristic import CharacteristicPair
from ..complexes.simplicial import Face
from ..exact.linalg import Vector, rank_of
from ..exact.polynomial import Exponent, MultiPoly, monomials_of_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SRPresentation:
    generators: int
    non_faces: typing.Tuple[Face, ...]
    linear_forms: typing.Tuple[Vector, ...]

    @property
    def variables(self) -> typing.Tuple[str, ...]:
        return tuple(f"v{i + 1}" for i in range(self.generators))

    def linear_relations(self) -> typing.List[MultiPoly]:
        return [MultiPoly.linear(self.variables, theta) for theta in self.linear_forms]

    def monomial_relations(self) -> typing.List[MultiPoly]:
        return [
            MultiPoly.monomial(self.variables, tuple(1 if i in face else 0 for i in range(self.generators)))
            for face in self.non_faces
        ]


def sr_presentation(pair: CharacteristicPair) -> SRPresentation:
    forms = tuple(tuple(ell[j] for ell in pair.functionals) for j in range(pair.dimension))
    return SRPresentation(
        generators=pair.vertex_count, non_faces=tuple(pair.complex.minimal_non_faces()), linear_forms=forms
    )


def _face_monomials(pair: CharacteristicPair, degree: int) -> typing.List[Exponent]:
    return [
        k
        for k in monomials_of_degree(pair.vertex_count, degree)
        if pair.complex.is_face(frozenset(i for i, e in enumerate(k) if e))
    ]


def sr_quotient_dims(pair: CharacteristicPair) -> typing.Tuple[int, ...]:
    """``(dim B_0, ..., dim B_n)``."""
    presentation = sr_presentation(pair)
    dims = []
    previous: typing.List[Exponent] = []
    for degree in range(pair.dimension + 1):
        current = _face_monomials(pair, degree)
        index = {k: position for position, k in enumerate(current)}
        rows = []
        for theta in presentation.linear_forms:
            for k in previous:
                row = [0] * len(current)
                for i, c in enumerate(theta):
                    if c == 0:
                        continue
                    product = tuple(e + (1 if j == i else 0) for j, e in enumerate(k))
                    if product in index:
                        row[index[product]] += c
                rows.append(row)
        dims.append(len(current) - rank_of(rows))
        previous = current
    logger.debug("Stanley-Reisner quotient dims: %s", dims)
    return tuple(dims)
