DEFAULT_SEED = 0
DEFAULT_SAMPLES = 100  # random h per bkkcheck

# winding numbers
RAY_EPSILON_DENOMINATOR = 97  # first ray is (1, e, e^2, ...) with e = 1/97
MAX_RAY_RETRIES = 32

# fan validation
COMPLETENESS_RANDOM_DIRECTIONS = 10
COMPLETENESS_SEED = 20240611
MAX_PERTURBATIONS = 16

# generic vectors for the cell decomposition
MAX_GENERIC_ATTEMPTS = 64

# arrangements
MAX_ARRANGEMENT_SIZE = 16

# random rationals used by checks: numerators in [-RANDOM_NUMERATOR_BOUND, RANDOM_NUMERATOR_BOUND]
RANDOM_NUMERATOR_BOUND = 12
RANDOM_DENOMINATOR_BOUND = 6
