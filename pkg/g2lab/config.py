from typing import Dict, Literal


DEFAULT_CONDUCTOR = 24

# scalars
TOWER_DEPTH_CAP = 8
ROOT_PRIME_START = 10007
ROOT_RETRY_BUDGET = 4
HENSEL_START_BITS = 96
HENSEL_MAX_BITS = 1536
MATCH_TABLE_CAP = 200_000
SPLIT_PRIME_ATTEMPTS = 400

# groups
ORDER_CAP = 20_000
CENTRAL_SWEEP = 24

# clifford
MAX_CLIFFORD_DIM = 8

SCHEMA = 'g2lab/1'

Family = Literal['torus', 'alpha', 'beta-gl', 'beta-sl', 'gamma', 'd8', 'g2sample']
SuiteLevel = Literal['fast', 'full']
Case = Literal['A_contained', 'B_gl2_or_sl2', 'C_z4xz2', 'D_o2pm']
BetaVariant = Literal['GL', 'SL']

# per-check sample counts of the verification suite
SUITE_SIZES: Dict[str, Dict[str, int]] = {
    'fast': {
        'type_g2_instances': 100,
        'spin_lifts': 10,
        'torus_elements': 5,
        'eigen_square': 10,
        'lambda_identities': 10,
        'fuzzed_subgroups': 10,
        'fuzzed_classify': 10,
    },
    'full': {
        'type_g2_instances': 1000,
        'spin_lifts': 100,
        'torus_elements': 50,
        'eigen_square': 100,
        'lambda_identities': 100,
        'fuzzed_subgroups': 200,
        'fuzzed_classify': 500,
    },
}

# exit codes of the command line front end
EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_NOT_TYPE_G2 = 3
EXIT_THEOREM_VIOLATION = 4
EXIT_ORDER_CAP = 5
