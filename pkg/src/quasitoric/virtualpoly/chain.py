"""
Generalized virtual polytopes as weighted chains of bounded regions.

The chain of ``h`` assigns every bounded region ``U`` of the arrangement
``{l_i(x) = h_i}`` the winding number of the canonical subordinate map around
a point of ``U``. Unbounded regions always have weight zero because the image
of the sphere is compact, so they are never visited.
"""

from __future__ import annotations

import logging
import typing
from dataclasses import dataclass

from ..arrangements.regions import Region, bounded_regions
from ..arrangements.subspace import build_arrangement
from ..complexes.characteristic import CharacteristicPair
from ..complexes.fan import format_vector
from ..core.options import RunOptions
from ..exact.linalg import Number, Vector, vector
from .subordinate import subordinate_map
from .types import ChainRegionReport
from .winding import winding_number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightedRegion:
    region: Region
    weight: int


@dataclass(frozen=True)
class VirtualChain:
    """Bounded regions with nonzero winding number, ordered by sign vector."""

    h: Vector
    dimension: int
    regions: typing.Tuple[WeightedRegion, ...]

    @property
    def is_empty(self) -> bool:
        return not self.regions

    def weight_of(self, sign_vector: str) -> int:
        return next((r.weight for r in self.regions if r.region.label == sign_vector), 0)


def virtual_chain(
    pair: CharacteristicPair, h: typing.Sequence[Number], *, options: typing.Optional[RunOptions] = None
) -> VirtualChain:
    support = vector(h)
    arrangement = build_arrangement(pair, support)
    f = subordinate_map(pair, support)
    weighted = []
    regions = bounded_regions(arrangement)
    for region in regions:
        w = winding_number(f, region.witness, options=options)
        if w != 0:
            weighted.append(WeightedRegion(region=region, weight=w))
    logger.debug(
        "Chain of h=%s: %d of %d bounded regions carry weight", format_vector(support), len(weighted), len(regions)
    )
    return VirtualChain(h=support, dimension=pair.dimension, regions=tuple(weighted))


def chain_report(chain: VirtualChain) -> typing.List[ChainRegionReport]:
    return [
        ChainRegionReport(
            sign_vector=entry.region.label,
            weight=entry.weight,
            volume=entry.region.volume,
            vertices=[list(v) for v in entry.region.vertices],
        )
        for entry in chain.regions
    ]
