"""
Tests for environment-driven settings and logging setup
"""
import logging

import dbs_rank.config.settings as settings_module
from dbs_rank.config import get_settings
from dbs_rank.logging_config import (
    DEBUG_LEVEL,
    DEVELOPMENT_LEVEL,
    HUMAN_FORMAT,
    VERBOSE_FORMAT,
    format_for,
    get_logger,
    level_for_verbosity,
    set_logging_level,
    setup_logging,
)


class TestSettings:
    """Settings read from DBS_* variables."""

    def test_defaults(self, clean_env):
        settings = get_settings()
        assert settings.log_level == "WARNING"
        assert settings.log_format == "human"
        assert settings.walk_enumeration_cap == 1_000_000
        assert settings.restrict_to_ancestors is True
        assert settings.default_output_format == "text"

    def test_environment_overrides(self, clean_env):
        clean_env.setenv("DBS_WALK_ENUMERATION_CAP", "42")
        clean_env.setenv("DBS_RESTRICT_TO_ANCESTORS", "no")
        clean_env.setenv("DBS_DEFAULT_FORMAT", "JSON")
        settings = get_settings()
        assert settings.walk_enumeration_cap == 42
        assert settings.restrict_to_ancestors is False
        assert settings.default_output_format == "json"

    def test_invalid_values_fall_back(self, clean_env, caplog):
        clean_env.setenv("DBS_WALK_ENUMERATION_CAP", "many")
        clean_env.setenv("DBS_RESTRICT_TO_ANCESTORS", "maybe")
        clean_env.setenv("DBS_DEFAULT_FORMAT", "yaml")
        with caplog.at_level(logging.WARNING):
            settings = get_settings()
        assert settings.walk_enumeration_cap == 1_000_000
        assert settings.restrict_to_ancestors is True
        assert settings.default_output_format == "text"
        assert "DBS_WALK_ENUMERATION_CAP" in caplog.text

    def test_negative_cap_falls_back(self, clean_env):
        clean_env.setenv("DBS_WALK_ENUMERATION_CAP", "-1")
        assert get_settings().walk_enumeration_cap == 1_000_000

    def test_environment_is_fixed_at_import(self, clean_env):
        clean_env.setenv("DBS_ENV", "production" if settings_module.app_env != "production" else "development")
        settings = get_settings()
        assert settings.app_env == settings_module.app_env
        expected = "environment_production.cfg" if settings.app_env == "production" else "environment.cfg"
        assert settings_module.env_file.name == expected


class TestLogging:
    """Logger setup helpers."""

    def test_format_names(self):
        assert format_for("verbose") == VERBOSE_FORMAT
        assert format_for("human") == HUMAN_FORMAT
        assert format_for("anything-else") == HUMAN_FORMAT

    def test_verbosity_levels(self):
        assert level_for_verbosity(0, "ERROR") == "ERROR"
        assert level_for_verbosity(1) == DEVELOPMENT_LEVEL == "INFO"
        assert level_for_verbosity(2) == level_for_verbosity(5) == DEBUG_LEVEL == "DEBUG"

    def test_module_loggers_are_named(self):
        assert get_logger("dbs_rank.ranking").name == "dbs_rank.ranking"

    def test_setup_sets_package_level(self):
        logger = setup_logging("DEBUG")
        assert logger.name == "dbs_rank"
        assert logger.level == logging.DEBUG
        setup_logging("WARNING")
        assert logging.getLogger("dbs_rank").level == logging.WARNING

    def test_setup_replaces_its_handler(self):
        setup_logging("INFO")
        logger = setup_logging("INFO", VERBOSE_FORMAT)
        owned = [h for h in logger.handlers if getattr(h, "_dbs_rank", False)]
        assert len(owned) == 1
        assert owned[0].formatter._fmt == VERBOSE_FORMAT
        setup_logging("WARNING")

    def test_set_logging_level(self):
        setup_logging("WARNING")
        set_logging_level("error")
        logger = logging.getLogger("dbs_rank")
        assert logger.level == logging.ERROR
        assert all(h.level == logging.ERROR for h in logger.handlers)
        set_logging_level("nonsense")
        assert logger.level == logging.WARNING
