from .cells import IncomingIndex, cell_vector, describe_indices, incoming_index
from .characteristic import CharacteristicPair, Mode, validate_characteristic
from .dual import DualComplex, OrientedChain, dual_complex, oriented_chains, permutation_sign
from .fan import Fan, generic_vector, primitive, validate_fan
from .simplicial import (
    EMPTY_FACE,
    Face,
    SimplicialComplex,
    face_from_labels,
    face_key,
    format_face,
    validate_complex,
)
from .sphere import OrientedSphere, orient
from .types import ValidationReport

__all__ = [
    "CharacteristicPair",
    "DualComplex",
    "EMPTY_FACE",
    "Face",
    "Fan",
    "IncomingIndex",
    "Mode",
    "OrientedChain",
    "OrientedSphere",
    "SimplicialComplex",
    "ValidationReport",
    "cell_vector",
    "describe_indices",
    "dual_complex",
    "face_from_labels",
    "face_key",
    "format_face",
    "generic_vector",
    "incoming_index",
    "orient",
    "oriented_chains",
    "permutation_sign",
    "primitive",
    "validate_characteristic",
    "validate_complex",
    "validate_fan",
]
