import random
from fractions import Fraction

import pytest

from quasitoric.arrangements import (
    AffineSubspace,
    SubspaceArrangement,
    build_arrangement,
    compatible_map_exists,
    dominates,
    nerve,
    nerve_isomorphic,
    realize_nerve,
    stratify,
)
from quasitoric.complexes import CharacteristicPair, SimplicialComplex
from quasitoric.core.errors import DimensionMismatchError

GENERIC = SubspaceArrangement.of_hyperplanes(2, [([1, 0], 0), ([0, 1], 0), ([1, 1], 1)])
CONCURRENT = SubspaceArrangement.of_hyperplanes(2, [([1, 0], 0), ([0, 1], 0), ([1, 1], 0)])
HOLLOW_TRIANGLE = SimplicialComplex.simplex_boundary(3)
FULL_TRIANGLE = SimplicialComplex.simplex(3)


def test_build_arrangement(projective_plane: CharacteristicPair) -> None:
    arrangement = build_arrangement(projective_plane, [0, 0, 1])
    assert arrangement.size == 3
    assert arrangement.members[2].contains([-1, 0])
    assert arrangement.members[2].contains([0, -1])
    with pytest.raises(DimensionMismatchError):
        build_arrangement(projective_plane, [0, 0])


def test_intersections(projective_plane: CharacteristicPair) -> None:
    arrangement = build_arrangement(projective_plane, [0, 0, 1])
    assert arrangement.intersect([]).subspace == AffineSubspace.ambient(2)
    point = arrangement.intersect([0, 1]).subspace
    assert point is not None
    assert point.affine_dimension == 0
    assert point.point == (0, 0)
    assert arrangement.intersect([0, 1, 2]).empty


def test_parallel_lines_have_a_certificate() -> None:
    parallel = SubspaceArrangement.of_hyperplanes(2, [([1, 0], 0), ([2, 0], 1)])
    meet = parallel.intersect([0, 1])
    assert meet.empty
    assert meet.certificate is not None
    assert meet.certificate[0] * 0 + meet.certificate[1] * 1 != 0


def test_subspace_relations() -> None:
    line = AffineSubspace.hyperplane([1, -1], 0)
    point = AffineSubspace.from_equations(2, [([1, 0], 2), ([0, 1], 2)])
    assert point is not None
    assert point.is_subset(line)
    assert not line.is_subset(point)
    assert line.same_as(AffineSubspace.affine_hull([[1, 1], [3, 3]]))
    assert AffineSubspace.hyperplane([1, 1], 2).nearest_to_origin() == (1, 1)
    assert AffineSubspace.from_equations(2, [([1, 0], 0), ([1, 0], 1)]) is None


def test_nerves() -> None:
    assert nerve_isomorphic(nerve(GENERIC), HOLLOW_TRIANGLE)
    assert nerve_isomorphic(nerve(CONCURRENT), FULL_TRIANGLE)


def test_domination() -> None:
    assert dominates(HOLLOW_TRIANGLE, FULL_TRIANGLE)
    assert not dominates(FULL_TRIANGLE, HOLLOW_TRIANGLE)
    assert dominates(HOLLOW_TRIANGLE, HOLLOW_TRIANGLE)
    assert compatible_map_exists(GENERIC, CONCURRENT)
    assert not compatible_map_exists(CONCURRENT, GENERIC)
    with pytest.raises(DimensionMismatchError):
        dominates(HOLLOW_TRIANGLE, SimplicialComplex.simplex(2))


@pytest.mark.parametrize(
    "complex_",
    [
        SimplicialComplex.from_facets(2, [{0}, {1}]),
        SimplicialComplex.simplex(2),
        SimplicialComplex.simplex_boundary(3),
        SimplicialComplex.from_facets(4, [{0, 1}, {1, 2}, {2, 3}, {0, 3}]),
        SimplicialComplex.simplex_boundary(4),
    ],
)
def test_realized_nerve_is_isomorphic(complex_: SimplicialComplex) -> None:
    assert nerve_isomorphic(nerve(realize_nerve(complex_)), complex_)


def test_realized_hollow_triangle_has_no_triple_point() -> None:
    arrangement = realize_nerve(HOLLOW_TRIANGLE)
    assert arrangement.dimension == 5
    assert all(not arrangement.intersect(pair).empty for pair in ([0, 1], [0, 2], [1, 2]))
    assert arrangement.intersect([0, 1, 2]).empty


def test_strata_of_crossing_lines() -> None:
    crossing = SubspaceArrangement.of_hyperplanes(2, [([1, 0], 0), ([0, 1], 0)])
    strata = {tuple(s.label): (s.dimension, s.rank) for s in stratify(crossing)}
    assert strata == {(1,): (1, 2), (2,): (1, 2), (1, 2): (0, 1)}


def test_strata_of_concurrent_lines() -> None:
    strata = stratify(CONCURRENT)
    assert len(strata) == 4
    center = [s for s in strata if s.label == [1, 2, 3]]
    assert len(center) == 1
    assert center[0].rank == 1
    assert center[0].dimension == 0
    assert sorted(s.rank for s in strata) == [1, 2, 2, 2]


def test_single_line_has_one_stratum() -> None:
    line = SubspaceArrangement.of_hyperplanes(2, [([1, 2], Fraction(1, 3))])
    strata = stratify(line)
    assert [(s.label, s.rank) for s in strata] == [([1], 1)]


def _random_complex(rng: random.Random, vertex_count: int, facet_count: int) -> SimplicialComplex:
    facets = [frozenset(rng.sample(range(vertex_count), rng.randint(1, 3))) for _ in range(facet_count)]
    covered = {v for f in facets for v in f}
    facets.extend(frozenset({v}) for v in range(vertex_count) if v not in covered)
    return SimplicialComplex.from_facets(vertex_count, facets)


@pytest.mark.parametrize("seed", range(4))
def test_realized_nerve_of_a_random_complex(seed: int) -> None:
    complex_ = _random_complex(random.Random(seed), 6, 4)
    assert nerve_isomorphic(nerve(realize_nerve(complex_)), complex_)


@pytest.mark.parametrize("seed", range(10))
def test_domination_is_transitive(seed: int) -> None:
    rng = random.Random(seed)
    smallest = _random_complex(rng, 5, 3)
    middle = SimplicialComplex.from_facets(5, list(smallest.facets) + list(_random_complex(rng, 5, 2).facets))
    largest = SimplicialComplex.from_facets(5, list(middle.facets) + list(_random_complex(rng, 5, 2).facets))
    assert dominates(smallest, middle)
    assert dominates(middle, largest)
    assert dominates(smallest, largest)
    triple = [_random_complex(rng, 5, 3) for _ in range(3)]
    if dominates(triple[0], triple[1]) and dominates(triple[1], triple[2]):
        assert dominates(triple[0], triple[2])
