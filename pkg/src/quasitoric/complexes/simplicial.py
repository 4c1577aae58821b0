"""
Finite abstract simplicial complexes.

Vertices are ``0 .. m-1`` internally; every message and serialized face uses
the 1-based labels ``1 .. m``. A complex is given by its facets and a subset
is a face iff it lies in some facet.
"""

from __future__ import annotations

import itertools
import logging
import math
import typing
from dataclasses import dataclass, field

from ..core.errors import NotAFaceError
from .types import ValidationReport

logger = logging.getLogger(__name__)

Face = typing.FrozenSet[int]

EMPTY_FACE: Face = frozenset()


def face_key(face: typing.AbstractSet[int]) -> typing.Tuple[int, typing.Tuple[int, ...]]:
    """Canonical order on faces: by size, then lexicographically."""
    return (len(face), tuple(sorted(face)))


def format_face(face: typing.AbstractSet[int]) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(face)) + "}"


def face_from_labels(labels: typing.Iterable[int]) -> Face:
    """1-based labels to an internal face."""
    return frozenset(int(i) - 1 for i in labels)


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facets: typing.Tuple[Face, ...]
    _faces: typing.Tuple[Face, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ordered = tuple(sorted({frozenset(f) for f in self.facets}, key=face_key))
        object.__setattr__(self, "facets", ordered)
        closure: typing.Set[Face] = set()
        for f in ordered:
            items = sorted(f)
            for k in range(len(items) + 1):
                closure.update(frozenset(c) for c in itertools.combinations(items, k))
        object.__setattr__(self, "_faces", tuple(sorted(closure, key=face_key)))

    @classmethod
    def from_facets(cls, vertex_count: int, facets: typing.Iterable[typing.Iterable[int]]) -> "SimplicialComplex":
        return cls(vertex_count=vertex_count, facets=tuple(frozenset(f) for f in facets))

    @classmethod
    def simplex(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, (frozenset(range(vertex_count)),))

    @classmethod
    def simplex_boundary(cls, vertex_count: int) -> "SimplicialComplex":
        full = frozenset(range(vertex_count))
        return cls(vertex_count, tuple(full - {v} for v in range(vertex_count)))

    # faces

    @property
    def vertices(self) -> typing.List[int]:
        return sorted({v for f in self.facets for v in f})

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self, size: typing.Optional[int] = None, *, include_empty: bool = False) -> typing.List[Face]:
        """Faces in canonical order, optionally only those with ``size`` vertices."""
        if size is not None:
            return [f for f in self._faces if len(f) == size]
        return [f for f in self._faces if include_empty or f]

    def is_face(self, face: typing.AbstractSet[int]) -> bool:
        s = frozenset(face)
        return any(s <= f for f in self.facets)

    def require_face(self, face: typing.AbstractSet[int]) -> Face:
        if not self.is_face(face):
            raise NotAFaceError("Not a face of the complex", body=format_face(face))
        return frozenset(face)

    def is_facet(self, face: typing.AbstractSet[int]) -> bool:
        return frozenset(face) in self.facets

    def ridges(self) -> typing.Dict[Face, typing.List[Face]]:
        """Codimension-one faces of the facets, mapped to the facets containing them."""
        out: typing.Dict[Face, typing.List[Face]] = {}
        for f in self.facets:
            for v in sorted(f):
                out.setdefault(f - {v}, []).append(f)
        return dict(sorted(out.items(), key=lambda kv: face_key(kv[0])))

    # numerical invariants

    def f_vector(self) -> typing.List[int]:
        """``(f_-1, f_0, ..., f_d)``: face counts by dimension, the empty face first."""
        counts = [0] * (self.dimension + 2)
        for f in self._faces:
            counts[len(f)] += 1
        return counts

    def h_vector(self) -> typing.List[int]:
        """``h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_(i-1)`` with ``d = dim + 1``."""
        f = self.f_vector()
        d = self.dimension + 1
        return [sum((-1) ** (k - i) * math.comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(f) - 1) for f in self._faces if f)

    def minimal_non_faces(self) -> typing.List[Face]:
        """Vertex sets that are not faces although every proper subset is."""
        out: typing.List[Face] = []
        faces = set(self._faces)
        for size in range(1, self.dimension + 3):
            for candidate in itertools.combinations(range(self.vertex_count), size):
                c = frozenset(candidate)
                if c in faces:
                    continue
                if all(c - {v} in faces for v in c):
                    out.append(c)
        return out

    # local structure

    def star(self, face: typing.AbstractSet[int]) -> "SimplicialComplex":
        """Closed star: the facets containing ``face``."""
        s = self.require_face(face)
        return SimplicialComplex(self.vertex_count, tuple(f for f in self.facets if s <= f))

    def link(self, face: typing.AbstractSet[int]) -> "SimplicialComplex":
        s = self.require_face(face)
        return SimplicialComplex(self.vertex_count, tuple(f - s for f in self.facets if s <= f and f != s))

    def barycentric_subdivision(self) -> typing.Tuple["SimplicialComplex", typing.Tuple[Face, ...]]:
        """
        The barycentric subdivision and its vertex labels.

        Vertex ``k`` of the result is the barycenter of ``labels[k]``, a nonempty
        face of this complex; simplices are chains of faces under inclusion.
        """
        labels = tuple(self.faces())
        index = {f: k for k, f in enumerate(labels)}
        chains: typing.List[Face] = []
        for facet in self.facets:
            items = sorted(facet)
            for order in itertools.permutations(items):
                chain = [frozenset(order[: k + 1]) for k in range(len(order))]
                chains.append(frozenset(index[c] for c in chain))
        subdivision = SimplicialComplex(len(labels), tuple(chains))
        logger.debug("Barycentric subdivision: %d vertices, %d facets", len(labels), len(subdivision.facets))
        return subdivision, labels


def validate_complex(
    c: SimplicialComplex, *, facets: typing.Optional[typing.Sequence[Face]] = None
) -> ValidationReport:
    """
    Check vertex coverage and that the facet list is an antichain.

    ``facets`` may carry the facet list exactly as it was supplied, before the
    complex deduplicated it.
    """
    given = list(facets) if facets is not None else list(c.facets)
    problems: typing.List[str] = []
    for f in given:
        if any(v < 0 or v >= c.vertex_count for v in f):
            problems.append(f"facet {format_face(f)} uses a vertex outside 1..{c.vertex_count}")
    covered = {v for f in given for v in f}
    for v in range(c.vertex_count):
        if v not in covered:
            problems.append(f"vertex {v + 1} lies in no facet")
    for a, b in itertools.permutations(sorted(set(given), key=face_key), 2):
        if a < b:
            problems.append(f"facet {format_face(a)} is contained in facet {format_face(b)}")
    if len(set(given)) != len(given):
        problems.append("duplicate facets")
    return ValidationReport(subject="complex", problems=problems)
