import itertools
import typing
from fractions import Fraction

import pytest

from quasitoric.complexes import CharacteristicPair
from quasitoric.core.errors import DimensionMismatchError
from quasitoric.exact.interpolation import interpolate_function
from quasitoric.exact.parsing import parse_polynomial
from quasitoric.exact.polynomial import MultiPoly
from quasitoric.virtualpoly import (
    ambient_variables,
    chain_volume,
    cross_check_volume,
    derivative_value,
    integral_of,
    integral_polynomiality,
    mixed_volume,
    polynomial_terms,
    support_variables,
    top_derivative,
    translation_problems,
    virtual_chain,
    volume_polynomial,
)

ONE_IN_THE_PLANE = MultiPoly.constant(ambient_variables(2), 1)
X1 = MultiPoly.variable(ambient_variables(2), 0)


def test_volume_polynomial_of_projective_plane(projective_plane: CharacteristicPair) -> None:
    vol = volume_polynomial(projective_plane)
    h = [MultiPoly.variable(support_variables(3), i) for i in range(3)]
    assert vol == ((h[0] + h[1] + h[2]) ** 2) / 2
    assert vol.labelled() == {
        "h1^2": Fraction(1, 2),
        "h1h2": 1,
        "h1h3": 1,
        "h2^2": Fraction(1, 2),
        "h2h3": 1,
        "h3^2": Fraction(1, 2),
    }
    assert polynomial_terms(vol)[0].monomial == "h1^2"
    assert polynomial_terms(vol)[0].coeff == Fraction(1, 2)


def test_volume_polynomial_of_quadrant(quadrant: CharacteristicPair) -> None:
    assert volume_polynomial(quadrant).labelled() == {"h1h2": 1, "h1h4": 1, "h2h3": 1, "h3h4": 1}


def test_volume_polynomial_of_hirzebruch(pairs: typing.Dict[str, CharacteristicPair]) -> None:
    assert volume_polynomial(pairs["hirzebruch"]).labelled() == {
        "h1h2": 1,
        "h1h4": 1,
        "h2^2": Fraction(-1, 2),
        "h2h3": 1,
        "h3h4": 1,
        "h4^2": Fraction(1, 2),
    }


def test_volume_polynomial_of_octahedral_fan(pairs: typing.Dict[str, CharacteristicPair]) -> None:
    vol = volume_polynomial(pairs["octahedral"])
    assert vol.is_homogeneous(3)
    assert vol.labelled() == {
        "h1h2h3": 1,
        "h1h2h6": 1,
        "h1h3h5": 1,
        "h1h5h6": 1,
        "h2h3h4": 1,
        "h2h4h6": 1,
        "h3h4h5": 1,
        "h4h5h6": 1,
    }


def test_top_derivatives(projective_plane: CharacteristicPair, quadrant: CharacteristicPair) -> None:
    assert top_derivative(projective_plane, (1, 1, 0)) == 1
    assert top_derivative(projective_plane, (2, 0, 0)) == 1
    assert top_derivative(quadrant, (1, 0, 1, 0)) == 0
    assert top_derivative(quadrant, (2, 0, 0, 0)) == 0
    with pytest.raises(DimensionMismatchError):
        top_derivative(projective_plane, (1, 1))
    with pytest.raises(DimensionMismatchError):
        top_derivative(projective_plane, (1, 1, 1))


@pytest.mark.parametrize("name", ["projective_plane", "quadrant", "hirzebruch", "octahedral"])
def test_flipped_orientation_negates_volume(pairs: typing.Dict[str, CharacteristicPair], name: str) -> None:
    pair = pairs[name]
    assert volume_polynomial(pair.flipped()) == -volume_polynomial(pair)


@pytest.mark.parametrize("name", ["projective_plane", "quadrant", "hirzebruch", "octahedral"])
def test_volume_is_translation_invariant(pairs: typing.Dict[str, CharacteristicPair], name: str) -> None:
    assert translation_problems(pairs[name]) == []


def test_translation_problems_flag_a_wrong_polynomial(projective_plane: CharacteristicPair) -> None:
    wrong = MultiPoly.monomial(support_variables(3), (2, 0, 0))
    problems = translation_problems(projective_plane, wrong)
    assert problems
    assert problems[0].startswith("translation along x1 changes the volume")


def test_mixed_volume(projective_plane: CharacteristicPair) -> None:
    assert mixed_volume(projective_plane, [(1, 0, 0), (0, 1, 0)]) == Fraction(1, 2)
    assert mixed_volume(projective_plane, [(0, 1, 0), (1, 0, 0)]) == Fraction(1, 2)
    assert mixed_volume(projective_plane, [(1, 1, 1), (1, 1, 1)]) == Fraction(9, 2)
    with pytest.raises(DimensionMismatchError):
        mixed_volume(projective_plane, [(1, 0, 0)])


def test_integral_of(projective_plane: CharacteristicPair) -> None:
    assert integral_of(projective_plane, ONE_IN_THE_PLANE, (0, 0, 1)) == Fraction(1, 2)
    assert integral_of(projective_plane, X1, (0, 0, 1)) == Fraction(-1, 6)


@pytest.mark.parametrize(
    "fixture, q, k, h, expected",
    [
        ("projective_plane", ONE_IN_THE_PLANE, (1, 1, 0), (0, 0, 1), 1),
        ("quadrant", ONE_IN_THE_PLANE, (1, 0, 1, 0), (1, 1, 1, 1), 0),
        ("projective_plane", X1, (1, 1, 0), (0, 0, 1), 0),
        ("projective_plane", X1, (1, 0, 1), (2, 0, 1), 2),
        ("projective_plane", ONE_IN_THE_PLANE, (2, 0, 0), (0, 0, 1), 1),
        ("projective_plane", X1, (2, 1, 0), (0, 0, 1), 1),
    ],
)
def test_derivative_value(
    pairs: typing.Dict[str, CharacteristicPair], fixture: str, q: MultiPoly, k, h, expected: int
) -> None:
    assert derivative_value(pairs[fixture], q, k, h) == expected


def test_derivative_value_rejects_wrong_lengths(projective_plane: CharacteristicPair) -> None:
    with pytest.raises(DimensionMismatchError):
        derivative_value(projective_plane, ONE_IN_THE_PLANE, (1, 1), (0, 0, 1))
    with pytest.raises(DimensionMismatchError):
        derivative_value(projective_plane, MultiPoly.constant(ambient_variables(3), 1), (1, 1, 0), (0, 0, 1))


@pytest.mark.parametrize("index", [0, 1, 2])
def test_integral_is_polynomial_along_each_support(projective_plane: CharacteristicPair, index: int) -> None:
    report = integral_polynomiality(projective_plane, X1 * X1 + 1, (1, 2, 3), index)
    assert report.degree_bound == 4
    assert report.index == index + 1
    assert report.ok


@pytest.mark.parametrize("name", ["projective_plane", "quadrant", "hirzebruch", "octahedral"])
def test_chain_volume_matches_volume_polynomial(pairs: typing.Dict[str, CharacteristicPair], name: str) -> None:
    report = cross_check_volume(pairs[name], samples=100, seed=7)
    assert report.samples == 100
    assert report.seed == 7
    assert report.ok, report.mismatches


@pytest.mark.parametrize("name", ["projective_plane", "quadrant", "hirzebruch"])
def test_volume_polynomial_matches_interpolated_chain_volumes(
    pairs: typing.Dict[str, CharacteristicPair], name: str
) -> None:
    pair = pairs[name]
    base = [Fraction(1, 3), Fraction(2, 7), Fraction(-1, 5), Fraction(3, 11)][: pair.vertex_count]
    oracle = interpolate_function(
        lambda h: chain_volume(virtual_chain(pair, h)), support_variables(pair.vertex_count), 2, base=base
    )
    assert oracle == volume_polynomial(pair)
    for i, j in itertools.combinations(range(pair.vertex_count), 2):
        face = frozenset({i, j})
        expected = pair.vertex_weight(face) if face in pair.facets else 0
        assert oracle.derivative(i).derivative(j) == MultiPoly.constant(oracle.variables, expected)


@pytest.mark.parametrize("index", [0, 1, 2])
@pytest.mark.parametrize("q_text", ["1", "x1", "x1*x2"])
def test_integral_of_each_test_function_is_polynomial(
    projective_plane: CharacteristicPair, q_text: str, index: int
) -> None:
    q = parse_polynomial(q_text, ambient_variables(2))
    report = integral_polynomiality(projective_plane, q, (Fraction(1, 2), 2, 3), index)
    assert report.degree_bound == 2 + q.degree
    assert report.ok, report.failures
