import itertools
import typing
from fractions import Fraction

import pytest

from quasitoric.cohomology import (
    algebra_report,
    betti_report,
    integral_top_values,
    linear_operator,
    linear_relation_check,
    macaulay_algebra,
    self_intersection,
    sr_presentation,
    sr_quotient_dims,
    top_product,
)
from quasitoric.complexes import CharacteristicPair
from quasitoric.core.errors import DimensionMismatchError
from quasitoric.virtualpoly import volume_polynomial

FIXTURES = ["projective_plane", "quadrant", "hirzebruch", "octahedral"]


@pytest.mark.parametrize("name", FIXTURES)
def test_stanley_reisner_dims_match_macaulay_dims(pairs: typing.Dict[str, CharacteristicPair], name: str) -> None:
    pair = pairs[name]
    assert sr_quotient_dims(pair) == macaulay_algebra(volume_polynomial(pair)).dims


def test_stanley_reisner_presentation(projective_plane: CharacteristicPair) -> None:
    presentation = sr_presentation(projective_plane)
    assert presentation.variables == ("v1", "v2", "v3")
    assert presentation.non_faces == (frozenset({0, 1, 2}),)
    assert presentation.linear_forms == ((1, 0, -1), (0, 1, -1))
    assert [str(p) for p in presentation.monomial_relations()] == ["v1*v2*v3"]
    assert len(presentation.linear_relations()) == 2


@pytest.mark.parametrize("name", FIXTURES)
def test_top_products_are_vertex_weights_on_facets(pairs: typing.Dict[str, CharacteristicPair], name: str) -> None:
    pair = pairs[name]
    vol = volume_polynomial(pair)
    for subset in itertools.combinations(range(pair.vertex_count), pair.dimension):
        face = frozenset(subset)
        expected = pair.vertex_weight(face) if pair.complex.is_face(face) else 0
        assert top_product(pair, face, vol) == expected


def test_top_product_needs_n_indices(projective_plane: CharacteristicPair) -> None:
    with pytest.raises(DimensionMismatchError):
        top_product(projective_plane, frozenset({0}))


@pytest.mark.parametrize("name", FIXTURES)
def test_linear_relations_annihilate_the_volume(pairs: typing.Dict[str, CharacteristicPair], name: str) -> None:
    pair = pairs[name]
    for chi in itertools.product((0, 1, -2), repeat=pair.dimension):
        assert linear_relation_check(pair, chi).ok


def test_linear_relation_check_rejects_wrong_length(quadrant: CharacteristicPair) -> None:
    with pytest.raises(DimensionMismatchError):
        linear_relation_check(quadrant, (1, 0, 0))


@pytest.mark.parametrize("name", FIXTURES)
def test_top_values_are_integers(pairs: typing.Dict[str, CharacteristicPair], name: str) -> None:
    assert integral_top_values(pairs[name]).ok


def test_self_intersection(projective_plane: CharacteristicPair, quadrant: CharacteristicPair) -> None:
    assert self_intersection(projective_plane, (0, 0, 1)) == 1
    assert self_intersection(projective_plane, (1, 1, 1)) == 9
    assert self_intersection(quadrant, (1, 1, 1, 1)) == 8


@pytest.mark.parametrize("h", [(1, 2, 3), (Fraction(1, 2), -1, 4)])
def test_self_intersection_is_the_top_power_of_a_divisor(projective_plane: CharacteristicPair, h) -> None:
    algebra = macaulay_algebra(volume_polynomial(projective_plane))
    assert self_intersection(projective_plane, h) == algebra.epsilon(linear_operator(h) ** 2)


@pytest.mark.parametrize("name", FIXTURES)
def test_betti_routes_agree(pairs: typing.Dict[str, CharacteristicPair], name: str) -> None:
    report = betti_report(pairs[name])
    assert report.agree
    assert report.cells == report.macaulay
    assert report.maximal_cones == len(pairs[name].facets)


def test_algebra_report(projective_plane: CharacteristicPair) -> None:
    report = algebra_report(projective_plane)
    assert report.betti == [1, 1, 1]
    assert report.pairing_ok
    assert report.problems == []
    assert len(report.relations_deg1) == 2
    assert report.top_products == {"{1,2}": 1, "{1,3}": 1, "{2,3}": 1}


def test_algebra_report_of_quadrant(quadrant: CharacteristicPair) -> None:
    report = algebra_report(quadrant)
    assert report.betti == [1, 2, 1]
    assert report.top_products["{1,3}"] == 0
    assert report.top_products["{1,2}"] == 1
