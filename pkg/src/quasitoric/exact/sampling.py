import random
import typing
from fractions import Fraction

from ..core.constants import RANDOM_DENOMINATOR_BOUND, RANDOM_NUMERATOR_BOUND
from ..core.errors import DimensionMismatchError
from .linalg import Vector


def random_rational(rng: random.Random, bound: int = RANDOM_NUMERATOR_BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, RANDOM_DENOMINATOR_BOUND))


def random_vector(rng: random.Random, n: int, bound: int = RANDOM_NUMERATOR_BOUND) -> Vector:
    return tuple(random_rational(rng, bound) for _ in range(n))


def random_nonzero_vector(rng: random.Random, n: int) -> Vector:
    if n < 1:
        raise DimensionMismatchError("A nonzero vector needs a positive dimension", body=n)
    while True:
        v = random_vector(rng, n)
        if any(x != 0 for x in v):
            return v


def seeded(seed: typing.Optional[int]) -> random.Random:
    return random.Random(0 if seed is None else seed)
