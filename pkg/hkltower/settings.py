"""This module contains the general calculator settings."""
import logging
import os

from hkltower.enums.output_format import OutputFormat

logger = logging.getLogger(__name__)

# process exit codes
EXIT_OK = 0
EXIT_SELF_CHECK = 2
EXIT_USAGE = 64

# environment overrides, read at call time
FORMAT_ENV_VAR = "HKL_FORMAT"
LOG_LEVEL_ENV_VAR = "HKL_LOG_LEVEL"

DEFAULT_OUTPUT_FORMAT = OutputFormat.table
DEFAULT_LOG_LEVEL = "WARNING"

# smallest N of a D-lattice
MIN_N = 3

# N ranges of the two Borcherds embeddings
FIRST_RELATION_MAX_N = 25
SECOND_RELATION_MAX_N = 17

# the wall predictions start here
TOWER_MIN_N = 15
# strata of the tower have inner index at least this
TOWER_MIN_M = 11

# the reference rank table covers 3..20
RANK_TABLE_MAX_N = 20

# brute-force box search is only attempted up to this rank
ORACLE_MAX_RANK = 6

# LLL parameter, exact
LLL_DELTA = (3, 4)

# β values sampled by the restriction and audit suites
BETA_SAMPLE = ("0", "1/9", "1/7", "1/6", "1/5", "1/4", "1/3", "1/2", "1")

# ambient signature of both Borcherds embeddings
AMBIENT_SIGNATURE = (2, 26)

# coordinate box used when searching for vectors of a given kind
FIND_VECTOR_U_BOX = 8


def default_output_format() -> OutputFormat:
    """Get the default output format.

    Returns
    -------
    output_format: OutputFormat
        The format named by HKL_FORMAT, or the built in default
    """
    value = os.environ.get(FORMAT_ENV_VAR)
    if not value:
        return DEFAULT_OUTPUT_FORMAT
    try:
        return OutputFormat[value.strip().lower()]
    except KeyError:
        logger.warning(
            "ignoring %s=%r, falling back to %s",
            FORMAT_ENV_VAR,
            value,
            DEFAULT_OUTPUT_FORMAT.name,
        )
        return DEFAULT_OUTPUT_FORMAT


def log_level() -> int:
    """Get the logging level requested through HKL_LOG_LEVEL."""
    value = os.environ.get(LOG_LEVEL_ENV_VAR, DEFAULT_LOG_LEVEL).strip().upper()
    level = logging.getLevelName(value)
    if isinstance(level, int):
        return level
    logger.warning(
        "ignoring %s=%r, falling back to %s",
        LOG_LEVEL_ENV_VAR,
        value,
        DEFAULT_LOG_LEVEL,
    )
    return logging.getLevelName(DEFAULT_LOG_LEVEL)
