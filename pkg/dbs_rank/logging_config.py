"""
Logging setup for dbs_rank.

Library modules only ask for named loggers under ``dbs_rank``. The command-line
entry point attaches one stderr handler to the package logger through
setup_logging(); calling it again replaces that handler.
"""

import logging
import sys
from typing import Optional

PACKAGE_LOGGER = "dbs_rank"

HUMAN_FORMAT = "%(levelname)s:%(name)s:%(message)s"
VERBOSE_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

PRODUCTION_LEVEL = "WARNING"
DEVELOPMENT_LEVEL = "INFO"
DEBUG_LEVEL = "DEBUG"

LOG_FORMATS = {"human": HUMAN_FORMAT, "verbose": VERBOSE_FORMAT}
LEVELS = {name: getattr(logging, name) for name in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")}


def _level(name: str) -> int:
    return LEVELS.get(name.upper(), logging.WARNING)


def level_for_verbosity(verbosity: int, default: str = PRODUCTION_LEVEL) -> str:
    """-v means DEVELOPMENT_LEVEL, -vv or more DEBUG_LEVEL, none keeps ``default``."""
    if verbosity >= 2:
        return DEBUG_LEVEL
    if verbosity == 1:
        return DEVELOPMENT_LEVEL
    return default


def format_for(log_format: str) -> str:
    """Record format for a settings format name; unknown names get the human one."""
    return LOG_FORMATS.get(log_format.lower(), HUMAN_FORMAT)


def setup_logging(level: str = PRODUCTION_LEVEL, format_string: Optional[str] = None) -> logging.Logger:
    """
    Attach a stderr handler to the package logger.

    Args:
        level: "DEBUG", "INFO", "WARNING", "ERROR" or "CRITICAL"; anything else
            means WARNING.
        format_string: record format, HUMAN_FORMAT when omitted.

    Returns:
        The ``dbs_rank`` logger.
    """
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(package_logger.handlers):
        if getattr(handler, "_dbs_rank", False):
            package_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(format_string or HUMAN_FORMAT))
    handler._dbs_rank = True
    package_logger.addHandler(handler)

    set_logging_level(level)
    return package_logger


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def set_logging_level(level: str) -> None:
    """Change the level of the package logger and of every handler on it."""
    numeric_level = _level(level)
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    package_logger.setLevel(numeric_level)
    for handler in package_logger.handlers:
        handler.setLevel(numeric_level)
