"""Configuration constants for GroupRank.

Values that callers may want to change per environment are read from
``GROUPRANK_*`` variables once, at import time.
"""

# Import built-in modules
import os

# Import local modules
from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError

APP_NAME = "grouprank_mcp"
APP_DESCRIPTION = (
    "Betti number, co-rank and rank of finitely presented groups, "
    "and explicit presentations realizing admissible (corank, betti, rank) triples."
)

# Ascending primes tried by the homomorphism-counting oracle.
DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)

# Generator names emitted for realized presentations: g1, g2, ...
DEFAULT_GENERATOR_PREFIX = "g"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise GroupRankError(f"{name} must be an integer, got {raw!r}", ErrorCode.CONFIGURATION_ERROR) from e
    if value < 1:
        raise GroupRankError(f"{name} must be positive, got {value}", ErrorCode.CONFIGURATION_ERROR)
    return value


# Maximum prime**generators assignments one oracle count may enumerate.
DEFAULT_BUDGET = _env_int("GROUPRANK_BUDGET", 10**6)
