import random

import pytest

from quasitoric.core.errors import DimensionMismatchError
from quasitoric.exact.sampling import random_nonzero_vector, seeded


@pytest.mark.parametrize("n", [0, -1])
def test_nonzero_vector_needs_a_positive_dimension(n: int) -> None:
    with pytest.raises(DimensionMismatchError):
        random_nonzero_vector(random.Random(0), n)


def test_nonzero_vector_is_seeded() -> None:
    first = random_nonzero_vector(seeded(5), 3)
    assert first == random_nonzero_vector(seeded(5), 3)
    assert len(first) == 3
    assert any(x != 0 for x in first)
