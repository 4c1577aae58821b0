from . import arrangements, cohomology, complexes, core, exact, virtualpoly
from .arrangements import (
    SubspaceArrangement,
    build_arrangement,
    complement_homotopy,
    dominates,
    enumerate_regions,
    nerve,
    realize_nerve,
    union_homotopy,
)
from .cohomology import betti, macaulay_algebra, poincare_check, sr_quotient_dims
from .complexes import CharacteristicPair, Fan, OrientedSphere, SimplicialComplex, cell_vector, validate_fan
from .core import (
    CrossCheckError,
    DimensionMismatchError,
    GenericPositionError,
    InputParseError,
    NonHomogeneousError,
    NotAFaceError,
    QuasitoricError,
    RayDegeneracyError,
    RunOptions,
    SingularMatrixError,
    ValidationFailedError,
)
from .exact import LinearSystem, Matrix, MultiPoly, feasible, maximize, solve
from .virtualpoly import (
    chain_volume,
    integrate,
    subordinate_map,
    virtual_chain,
    volume_polynomial,
    winding_number,
)
from .version import __version__

__all__ = [
    "CharacteristicPair",
    "CrossCheckError",
    "DimensionMismatchError",
    "Fan",
    "GenericPositionError",
    "InputParseError",
    "LinearSystem",
    "Matrix",
    "MultiPoly",
    "NonHomogeneousError",
    "NotAFaceError",
    "OrientedSphere",
    "QuasitoricError",
    "RayDegeneracyError",
    "RunOptions",
    "SimplicialComplex",
    "SingularMatrixError",
    "SubspaceArrangement",
    "ValidationFailedError",
    "__version__",
    "arrangements",
    "betti",
    "build_arrangement",
    "cell_vector",
    "chain_volume",
    "cohomology",
    "complement_homotopy",
    "complexes",
    "core",
    "dominates",
    "enumerate_regions",
    "exact",
    "feasible",
    "integrate",
    "macaulay_algebra",
    "maximize",
    "nerve",
    "poincare_check",
    "realize_nerve",
    "solve",
    "sr_quotient_dims",
    "subordinate_map",
    "union_homotopy",
    "validate_fan",
    "virtual_chain",
    "volume_polynomial",
    "winding_number",
]
