from .homotopy import complement_homotopy, quotient_arrangement, union_homotopy
from .nerve import compatible_map_exists, dominates, nerve, nerve_isomorphic, realize_nerve
from .regions import (
    Region,
    Wall,
    bounded_regions,
    enumerate_regions,
    merge_walls,
    region_report,
    region_system,
    simplex_volume,
)
from .strata import stratify
from .subspace import AffineSubspace, Intersection, SubspaceArrangement, build_arrangement, intersect
from .tail import tail_cone
from .types import ComplementHomotopyReport, ReducedMember, RegionReport, Stratum, TailConeReport, UnionHomotopyReport

__all__ = [
    "AffineSubspace",
    "ComplementHomotopyReport",
    "Intersection",
    "ReducedMember",
    "Region",
    "RegionReport",
    "Stratum",
    "SubspaceArrangement",
    "TailConeReport",
    "UnionHomotopyReport",
    "Wall",
    "bounded_regions",
    "build_arrangement",
    "compatible_map_exists",
    "complement_homotopy",
    "dominates",
    "enumerate_regions",
    "intersect",
    "merge_walls",
    "nerve",
    "nerve_isomorphic",
    "quotient_arrangement",
    "realize_nerve",
    "region_report",
    "region_system",
    "simplex_volume",
    "stratify",
    "tail_cone",
    "union_homotopy",
]
