from .complement_homotopy_report import ComplementHomotopyReport, ReducedMember
from .region_report import RegionReport
from .stratum import Stratum
from .tail_cone_report import TailConeReport
from .union_homotopy_report import UnionHomotopyReport

__all__ = [
    "ComplementHomotopyReport",
    "ReducedMember",
    "RegionReport",
    "Stratum",
    "TailConeReport",
    "UnionHomotopyReport",
]
