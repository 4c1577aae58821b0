"""Consistency checks between the independent routes to volumes and integrals."""

import logging
import typing
from fractions import Fraction

from ..complexes.characteristic import CharacteristicPair
from ..complexes.fan import format_vector
from ..core.constants import DEFAULT_SAMPLES, DEFAULT_SEED
from ..core.options import RunOptions
from ..exact.interpolation import newton_interpolate
from ..exact.linalg import Number, add, scale, unit_vector, vector
from ..exact.polynomial import MultiPoly
from ..exact.sampling import random_vector, seeded
from .chain import virtual_chain
from .integration import chain_volume
from .types import CrossCheckReport, PolynomialityReport, VolumeMismatch
from .volume import integral_of, volume_polynomial

logger = logging.getLogger(__name__)


def integral_polynomiality(
    pair: CharacteristicPair,
    q: MultiPoly,
    h: typing.Sequence[Number],
    index: int,
    *,
    options: typing.Optional[RunOptions] = None,
) -> PolynomialityReport:
    """
    Sample ``t -> I_Q(h + t e_index)`` at ``deg Q + n + 1`` points, interpolate,
    and compare the interpolant with fresh samples.
    """
    base = vector(h)
    direction = unit_vector(pair.vertex_count, index)
    bound = pair.dimension + max(q.degree, 0)

    def sample(t: Fraction) -> Fraction:
        return integral_of(pair, q, add(base, scale(t, direction)), options=options)

    nodes = [Fraction(t) for t in range(bound + 1)]
    interpolant = newton_interpolate(nodes, [sample(t) for t in nodes])
    failures = []
    for t in (Fraction(-1), Fraction(1, 2), Fraction(bound + 2)):
        if interpolant.evaluate([t]) != sample(t):
            failures.append(t)
    return PolynomialityReport(index=index + 1, degree_bound=bound, interpolant=str(interpolant), failures=failures)


def cross_check_volume(
    pair: CharacteristicPair,
    samples: typing.Optional[int] = None,
    seed: typing.Optional[int] = None,
    *,
    options: typing.Optional[RunOptions] = None,
) -> CrossCheckReport:
    """Compare the chain volume with the volume polynomial on seeded random support vectors."""
    count = samples if samples is not None else (options or {}).get("samples", DEFAULT_SAMPLES)
    actual_seed = seed if seed is not None else (options or {}).get("seed", DEFAULT_SEED)
    rng = seeded(actual_seed)
    polynomial = volume_polynomial(pair)
    mismatches = []
    for _ in range(count):
        h = random_vector(rng, pair.vertex_count)
        by_chain = chain_volume(virtual_chain(pair, h, options=options))
        by_polynomial = polynomial.evaluate(h)
        if by_chain != by_polynomial:
            logger.warning("Volume routes disagree at h=%s: %s != %s", format_vector(h), by_chain, by_polynomial)
            mismatches.append(VolumeMismatch(h=list(h), chain_volume=by_chain, polynomial_value=by_polynomial))
    return CrossCheckReport(samples=count, seed=actual_seed, mismatches=mismatches)


def translation_problems(pair: CharacteristicPair, polynomial: typing.Optional[MultiPoly] = None) -> typing.List[str]:
    """``sum_i l_i(e_j) d_i Vol`` must vanish for every coordinate ``j``."""
    vol = polynomial if polynomial is not None else volume_polynomial(pair)
    problems = []
    for j in range(pair.dimension):
        image = MultiPoly.zero(vol.variables)
        for i, ell in enumerate(pair.functionals):
            if ell[j] != 0:
                image = image + vol.derivative(i).scale(ell[j])
        if not image.is_zero():
            problems.append(f"translation along x{j + 1} changes the volume: {image}")
    return problems
