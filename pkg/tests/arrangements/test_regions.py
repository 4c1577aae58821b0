import random
import typing
from fractions import Fraction
from math import comb

import pytest

from quasitoric.arrangements import (
    AffineSubspace,
    SubspaceArrangement,
    bounded_regions,
    build_arrangement,
    complement_homotopy,
    enumerate_regions,
    region_report,
    region_system,
    tail_cone,
    union_homotopy,
)
from quasitoric.complexes import CharacteristicPair
from quasitoric.core.errors import DimensionMismatchError, ValidationFailedError
from quasitoric.exact import LinearSystem, feasible, gt, lt

# normals in general position: no two parallel, no three concurrent lines (planes) for these offsets
GENERIC_LINES = [([1, 0], 0), ([0, 1], 0), ([1, 1], 1), ([1, -1], 3), ([1, 2], -5)]
GENERIC_PLANES = [([1, 0, 0], 0), ([0, 1, 0], 0), ([0, 0, 1], 0), ([1, 1, 1], 1)]


def test_one_line_splits_the_plane() -> None:
    regions = enumerate_regions(SubspaceArrangement.of_hyperplanes(2, [([1, 1], 0)]))
    assert [r.label for r in regions] == ["+", "-"]
    assert not any(r.bounded for r in regions)


def test_projective_plane_arrangement(projective_plane: CharacteristicPair) -> None:
    regions = enumerate_regions(build_arrangement(projective_plane, [0, 0, 1]))
    assert len(regions) == 7
    bounded = [r for r in regions if r.bounded]
    assert len(bounded) == 1
    triangle = bounded[0]
    assert set(triangle.vertices) == {(0, 0), (-1, 0), (0, -1)}
    assert triangle.volume == Fraction(1, 2)
    report = region_report(triangle)
    assert report.bounded
    assert report.volume == Fraction(1, 2)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_generic_lines_have_binomial_bounded_regions(m: int) -> None:
    arrangement = SubspaceArrangement.of_hyperplanes(2, GENERIC_LINES[:m])
    regions = enumerate_regions(arrangement)
    assert len(regions) == 1 + m + comb(m, 2)
    assert len(bounded_regions(arrangement)) == comb(m - 1, 2)
    assert union_homotopy(arrangement).sphere_count == comb(m - 1, 2)


def test_generic_planes() -> None:
    arrangement = SubspaceArrangement.of_hyperplanes(3, GENERIC_PLANES)
    bounded = bounded_regions(arrangement)
    assert len(bounded) == comb(3, 3)
    assert bounded[0].volume == Fraction(1, 6)
    report = union_homotopy(arrangement)
    assert report.wedge_dim == 2
    assert report.homology_ranks == [1, 0, 1]


def test_coincident_hyperplanes_share_a_wall() -> None:
    doubled = SubspaceArrangement.of_hyperplanes(2, [([1, 0], 0), ([0, 1], 0), ([-2, 0], 0), ([0, 1], 0)])
    regions = enumerate_regions(doubled)
    assert [r.label for r in regions] == ["++-+", "+---", "-+++", "--+-"]


def test_region_enumeration_needs_hyperplanes() -> None:
    origin = AffineSubspace.from_equations(2, [([1, 0], 0), ([0, 1], 0)])
    assert origin is not None
    with pytest.raises(DimensionMismatchError):
        enumerate_regions(SubspaceArrangement(2, (origin,)))


def test_tail_cones() -> None:
    triangle = LinearSystem.of(2, [gt([1, 0], 0), gt([0, 1], 0), lt([1, 1], 1)])
    report = tail_cone(triangle)
    assert report.is_vector_space
    assert report.is_origin

    strip = LinearSystem.of(2, [gt([1, 0], 0), lt([1, 0], 1)])
    report = tail_cone(strip)
    assert report.is_vector_space
    assert report.lineality == [[0, 1]]

    quadrant = LinearSystem.of(2, [gt([1, 0], 0), gt([0, 1], 0)])
    report = tail_cone(quadrant)
    assert not report.is_vector_space
    assert sorted(report.rays) == [[0, 1], [1, 0]]

    with pytest.raises(ValidationFailedError):
        tail_cone(LinearSystem.of(1, [gt([1], 1), lt([1], 0)]))


def test_union_of_crossing_lines_is_contractible() -> None:
    report = union_homotopy(SubspaceArrangement.of_hyperplanes(2, [([1, 0], 0), ([0, 1], 0)]))
    assert report.nondegenerate
    assert report.sphere_count == 0
    assert report.homology_ranks == [1, 0]


def test_union_of_parallel_lines() -> None:
    report = union_homotopy(SubspaceArrangement.of_hyperplanes(2, [([1, 0], 0), ([1, 0], 1)]))
    assert not report.nondegenerate
    assert report.linearity_space == [[0, 1]]
    assert report.wedge_dim == 0
    assert report.sphere_count == 1
    assert report.homology_ranks == [2]


def test_empty_arrangement_union() -> None:
    report = union_homotopy(SubspaceArrangement(2, ()))
    assert report.wedge_dim == -1
    assert report.homology_ranks == []


def test_complement_of_the_regions_of_parallel_lines() -> None:
    regions = enumerate_regions(SubspaceArrangement.of_hyperplanes(2, [([1, 0], 0), ([1, 0], 1)]))
    report = complement_homotopy([r.system() for r in regions])
    assert [m.directions for m in report.retained] == [[[0, 1]]]
    assert report.common_tail == [[0, 1]]
    assert report.transversal == [[1, 0]]
    assert report.removed_points == 1


def test_complement_of_half_planes_keeps_nothing() -> None:
    regions = enumerate_regions(SubspaceArrangement.of_hyperplanes(2, [([1, 1], 0)]))
    report = complement_homotopy([r.system() for r in regions])
    assert report.retained == []
    assert report.removed_points is None
    assert "no member" in report.conclusion


def test_complement_of_a_triangle_is_a_circle() -> None:
    triangle = LinearSystem.of(2, [gt([1, 0], 0), gt([0, 1], 0), lt([1, 1], 1)])
    report = complement_homotopy([triangle])
    assert report.removed_points == 1
    assert len(report.transversal or []) == 2
    assert report.conclusion == "complement is homotopy equivalent to R^2 minus 1 point(s)"


def test_complement_rejects_empty_members() -> None:
    with pytest.raises(ValidationFailedError):
        complement_homotopy([LinearSystem.of(1, [gt([1], 1), lt([1], 0)])])
    with pytest.raises(ValidationFailedError):
        complement_homotopy([])


def test_region_system_describes_the_open_region(projective_plane: CharacteristicPair) -> None:
    (triangle,) = bounded_regions(build_arrangement(projective_plane, [0, 0, 1]))
    system = region_system(triangle)
    assert system.dimension == 2
    assert len(system.constraints) == 3
    assert feasible(system).feasible
    assert not feasible(system.extended(gt([1, 0], 0))).feasible
    assert tail_cone(system).is_vector_space


STRIPS = [([1, 0], 0), ([1, 0], 2), ([0, 1], 0), ([0, 1], 1), ([1, 1], 5)]


def _bounded_volumes(hyperplanes) -> typing.List[Fraction]:
    regions = bounded_regions(SubspaceArrangement.of_hyperplanes(2, hyperplanes))
    volumes = [r.volume for r in regions if r.volume is not None]
    assert len(volumes) == len(regions)
    return sorted(volumes)


@pytest.mark.parametrize("hyperplanes", [GENERIC_LINES, STRIPS, GENERIC_PLANES])
def test_tail_cone_is_the_origin_exactly_for_bounded_regions(hyperplanes) -> None:
    arrangement = SubspaceArrangement.of_hyperplanes(len(hyperplanes[0][0]), hyperplanes)
    for region in enumerate_regions(arrangement):
        assert tail_cone(region).is_origin == region.bounded, region.label


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("hyperplanes", [GENERIC_LINES, STRIPS])
def test_bounded_volumes_do_not_depend_on_the_order_of_hyperplanes(hyperplanes, seed: int) -> None:
    shuffled = list(hyperplanes)
    random.Random(seed).shuffle(shuffled)
    original = _bounded_volumes(hyperplanes)
    relabeled = _bounded_volumes(shuffled)
    assert original
    assert relabeled == original
    assert sum(relabeled) == sum(original)
