import os
from dotenv import load_dotenv

load_dotenv()

ENV_PREFIX = "FOLIATION_"


def _env(name: str, default: str) -> str:
    return os.getenv(ENV_PREFIX + name, default)


# Numerical verifier defaults (overridable by env var or CLI flag)
SEED = int(_env("SEED", "0"))
TOL_RESIDUAL = float(_env("TOL_RESIDUAL", "1e-10"))
TOL_DEDUP = float(_env("TOL_DEDUP", "1e-6"))      # chordal distance
TOL_RANK = float(_env("TOL_RANK", "1e-8"))        # relative to largest singular value
STARTS_PER_CHART = int(_env("STARTS_PER_CHART", "200"))
MAX_RETRIES = int(_env("MAX_RETRIES", "0"))       # each retry doubles the start count
NEWTON_MAX_ITER = int(_env("NEWTON_MAX_ITER", "60"))
START_RADIUS = 1.5                                # starts drawn inside |z_i| <~ START_RADIUS
CHART_ACCEPT_RATIO = 1.5                          # accept a point in chart c only if |p_i| <= ratio * |p_c|

OUTPUT_FORMAT = _env("FORMAT", "table")

# Identity grids (acceptance suites and the `identities` subcommand)
GRID_MAX_N = 8
GRID_DEGREES = range(1, 6)
GRID_FOLIATION_DEGREES = range(2, 7)
LEMMA_MAX_K = 4
LEMMA_MAX_X = 6
LEMMA_MAX_J = 8
TODD_MAX_P = 6
TODD_MAX_K = 3
STIFEL_MAX_M = 30

# CLI exit codes
EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_MISMATCH = 3
