from __future__ import annotations

import collections
import logging
import typing
from dataclasses import dataclass

from ..core.errors import NotAFaceError, ValidationFailedError
from .simplicial import Face, SimplicialComplex, face_key, format_face
from .types import ValidationReport

logger = logging.getLogger(__name__)


def induced_sign(facet_sign: int, facet: Face, dropped: int) -> int:
    """Sign induced on ``facet - {dropped}`` by ``facet`` listed in increasing order."""
    position = sorted(facet).index(dropped)
    return facet_sign * (-1) ** position


def pseudomanifold_problems(c: SimplicialComplex) -> typing.List[str]:
    problems: typing.List[str] = []
    if not c.facets:
        return ["complex has no facets"]
    if not c.is_pure:
        problems.append("complex is not pure")
        return problems
    for ridge, facets in c.ridges().items():
        if len(facets) != 2:
            problems.append(f"ridge {format_face(ridge)} lies in {len(facets)} facet(s), expected 2")
    return problems


@dataclass(frozen=True)
class OrientedSphere:
    """A pseudomanifold of dimension ``n - 1`` with a sign on every facet (facets listed in increasing vertex order)."""

    base: SimplicialComplex
    orientation: typing.Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.orientation) != len(self.base.facets):
            raise ValidationFailedError("One orientation sign per facet is required", body=len(self.orientation))
        if any(s not in (1, -1) for s in self.orientation):
            raise ValidationFailedError("Orientation signs must be +1 or -1", body=self.orientation)

    @property
    def vertex_count(self) -> int:
        return self.base.vertex_count

    @property
    def facets(self) -> typing.Tuple[Face, ...]:
        return self.base.facets

    @property
    def dimension(self) -> int:
        return self.base.dimension

    @property
    def rank(self) -> int:
        """Vertices per facet (``n``)."""
        return self.base.dimension + 1

    def sign(self, facet: typing.AbstractSet[int]) -> int:
        f = frozenset(facet)
        try:
            return self.orientation[self.base.facets.index(f)]
        except ValueError:
            raise NotAFaceError("Not a facet of the sphere", body=format_face(f)) from None

    def signed_facets(self) -> typing.List[typing.Tuple[Face, int]]:
        return list(zip(self.base.facets, self.orientation))

    def reversed(self) -> "OrientedSphere":
        return OrientedSphere(self.base, tuple(-s for s in self.orientation))

    def coherence_problems(self) -> typing.List[str]:
        problems = pseudomanifold_problems(self.base)
        if problems:
            return problems
        for ridge, (a, b) in self.base.ridges().items():
            sa = induced_sign(self.sign(a), a, next(iter(a - ridge)))
            sb = induced_sign(self.sign(b), b, next(iter(b - ridge)))
            if sa + sb != 0:
                problems.append(
                    f"orientation is not coherent across ridge {format_face(ridge)} "
                    f"(facets {format_face(a)} and {format_face(b)})"
                )
        return problems

    def validate(self) -> ValidationReport:
        return ValidationReport(subject="oriented sphere", problems=self.coherence_problems())


def orient(c: SimplicialComplex) -> OrientedSphere:
    """
    Coherently orient a pseudomanifold by propagating signs across ridges.

    Each connected component gets ``+1`` on its first facet in canonical order.

    Raises:
        ValidationFailedError: if ``c`` is not a pseudomanifold or not orientable.
    """
    problems = pseudomanifold_problems(c)
    if problems:
        raise ValidationFailedError("Not a pseudomanifold", body=ValidationReport(subject="complex", problems=problems))
    ridges = c.ridges()
    neighbours: typing.Dict[Face, typing.List[typing.Tuple[Face, Face]]] = collections.defaultdict(list)
    for ridge, (a, b) in ridges.items():
        neighbours[a].append((ridge, b))
        neighbours[b].append((ridge, a))

    signs: typing.Dict[Face, int] = {}
    for start in sorted(c.facets, key=face_key):
        if start in signs:
            continue
        signs[start] = 1
        queue = collections.deque([start])
        while queue:
            f = queue.popleft()
            for ridge, g in neighbours[f]:
                wanted = -induced_sign(signs[f], f, next(iter(f - ridge)))
                # choose sign(g) so that g induces ``wanted`` on the shared ridge
                s = wanted * (-1) ** sorted(g).index(next(iter(g - ridge)))
                if g not in signs:
                    signs[g] = s
                    queue.append(g)
                elif signs[g] != s:
                    raise ValidationFailedError("Complex is not orientable", body=format_face(ridge))
    logger.debug("Oriented %d facets", len(signs))
    return OrientedSphere(c, tuple(signs[f] for f in c.facets))
