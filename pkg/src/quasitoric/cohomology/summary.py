import itertools
import logging
import typing

from ..complexes.cells import cell_vector
from ..complexes.characteristic import CharacteristicPair
from ..complexes.simplicial import format_face
from ..core.options import RunOptions
from ..virtualpoly.volume import volume_polynomial
from .algebra import annihilator_dimension, betti, macaulay_algebra, poincare_check
from .relations import integral_top_values, top_product
from .stanley_reisner import sr_quotient_dims
from .types import AlgebraReport, BettiReport

logger = logging.getLogger(__name__)


def betti_report(pair: CharacteristicPair, *, options: typing.Optional[RunOptions] = None) -> BettiReport:
    """Betti numbers from the Macaulay algebra, the Stanley-Reisner quotient and, for fans, the cell vector."""
    algebra = macaulay_algebra(volume_polynomial(pair))
    cells = list(cell_vector(pair.fan, options=options)) if pair.fan is not None else None
    report = BettiReport(
        macaulay=list(betti(algebra)),
        stanley_reisner=list(sr_quotient_dims(pair)),
        cells=cells,
        maximal_cones=len(pair.facets),
    )
    if not report.agree:
        logger.warning("Betti routes disagree: %s", report.dict())
    return report


def algebra_report(pair: CharacteristicPair) -> AlgebraReport:
    vol = volume_polynomial(pair)
    algebra = macaulay_algebra(vol)
    relations = [str(op) for op in annihilator_dimension(vol, 1).basis] if algebra.top_degree >= 1 else []
    products = {
        format_face(subset): top_product(pair, frozenset(subset), vol)
        for subset in itertools.combinations(range(pair.vertex_count), pair.dimension)
    }
    duality = poincare_check(algebra)
    integrality = integral_top_values(pair, vol)
    return AlgebraReport(
        betti=list(betti(algebra)),
        relations_deg1=relations,
        top_products=products,
        pairing_ok=duality.ok,
        problems=duality.problems + integrality.problems,
    )
