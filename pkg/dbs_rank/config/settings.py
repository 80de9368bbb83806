import os
from pathlib import Path

from dotenv import load_dotenv

from ..logging_config import PRODUCTION_LEVEL, get_logger

logger = get_logger(__name__)

# Determine environment and load appropriate .cfg file
app_env = os.getenv("DBS_ENV", "development")

# Package directory (dbs_rank/)
current_dir = Path(__file__).parent.parent

if app_env == "production":
    env_file = current_dir / "environment_production.cfg"
else:
    env_file = current_dir / "environment.cfg"

# Explicit environment variables take precedence over the file
load_dotenv(env_file, override=False)

_TRUE_VALUES = {"1", "true", "yes", "on"}
_FALSE_VALUES = {"0", "false", "no", "off"}


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring invalid integer for {name}: {raw!r}. Using {default}.")
        return default
    if value < 0:
        logger.warning(f"Ignoring negative value for {name}: {raw!r}. Using {default}.")
        return default
    return value


def _bool_from_env(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    lowered = raw.strip().lower()
    if lowered in _TRUE_VALUES:
        return True
    if lowered in _FALSE_VALUES:
        return False
    logger.warning(f"Ignoring invalid boolean for {name}: {raw!r}. Using {default}.")
    return default


class Settings:
    def __init__(self):
        # Application settings
        # Fixed at import, when the matching .cfg file was loaded
        self.app_env: str = app_env
        self.log_level: str = os.getenv("DBS_LOG_LEVEL", PRODUCTION_LEVEL)
        self.log_format: str = os.getenv("DBS_LOG_FORMAT", "human")

        # Walk enumeration oracle
        self.walk_enumeration_cap: int = _int_from_env("DBS_WALK_ENUMERATION_CAP", 1_000_000)

        # Automata back-end: drop states that cannot reach the accepting vertex
        self.restrict_to_ancestors: bool = _bool_from_env("DBS_RESTRICT_TO_ANCESTORS", True)

        # CLI
        default_format = os.getenv("DBS_DEFAULT_FORMAT", "text").lower()
        if default_format not in ("text", "json"):
            logger.warning(f"Ignoring invalid DBS_DEFAULT_FORMAT: {default_format!r}. Using 'text'.")
            default_format = "text"
        self.default_output_format: str = default_format


def get_settings() -> Settings:
    return Settings()
