import typing

import pytest

from quasitoric.cli.documents import InputDocument, characteristic_pair, parse_document
from quasitoric.complexes import CharacteristicPair
from quasitoric.fixtures import fixture_text

PAIR_FIXTURES = ("projective_plane", "quadrant", "hirzebruch", "octahedral")


def load_pair(name: str) -> CharacteristicPair:
    doc = parse_document(fixture_text(name))
    assert isinstance(doc, InputDocument)
    return characteristic_pair(doc)


@pytest.fixture(scope="session")
def pairs() -> typing.Dict[str, CharacteristicPair]:
    return {name: load_pair(name) for name in PAIR_FIXTURES}


@pytest.fixture(scope="session")
def projective_plane(pairs: typing.Dict[str, CharacteristicPair]) -> CharacteristicPair:
    return pairs["projective_plane"]


@pytest.fixture(scope="session")
def quadrant(pairs: typing.Dict[str, CharacteristicPair]) -> CharacteristicPair:
    return pairs["quadrant"]
