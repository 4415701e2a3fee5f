import numpy as np


# Ai(0) and -Ai'(0)
AIRY_AI_ZERO = 0.355028053887817239
AIRY_AIP_ZERO = 0.258819403792806798

# Ai evaluation regions: series on (SERIES_LOWER, SERIES_UPPER), steepest
# descent integral on [SERIES_UPPER, ASYMPTOTIC_LOWER), asymptotics beyond
SERIES_LOWER = -7.
SERIES_UPPER = 2.
ASYMPTOTIC_LOWER = 8.
UNDERFLOW_LIMIT = 200.

SQRT_PI = np.sqrt(np.pi)


######################################################################
# Quadrature defaults
######################################################################
REL_TOL_SCALAR = 1e-8
REL_TOL_FIELD = 1e-6
ABS_FLOOR = 1e-14
MAX_PANELS = 2 ** 16
N_SIGMAS = 8.
WIDEN_FACTOR = 1.5
WIDEN_THRESHOLD = 1e-12

# Window on x for intensity and orthogonality integrals
X_WINDOW = (-60., 20.)


######################################################################
# Beam defaults
######################################################################
# Spread used as the fully coherent surrogate
COHERENT_SIGMA = 1e-3
SIGMA_RANGE = (1e-6, 1e6)
CLI_SIGMA_MAX = 1e3
# Width of the Gaussian surrogate of delta(lambda - lambda')
DELTA_WIDTH = 1e-5
DISCREPANCY_TOL = 1e-6


######################################################################
# Grid defaults
######################################################################
PROFILE_GRID = (-15., 15., 601)
DENSITY_GRID = (-12., 12., 241)
FD_STEP = 1e-3

CSV_FORMAT = '%.17g'
SIDECAR_SCHEMA_VERSION = 1
