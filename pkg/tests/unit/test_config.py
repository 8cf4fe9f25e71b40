"""Unit tests for configuration management."""

import pytest

from smashcalc.core import config as core_config
from smashcalc.cycompletion import config as completion_config
from smashcalc.homology import config as homology_config
from smashcalc.hopf import config as hopf_config
from smashcalc.koszul import config as koszul_config
from smashcalc.smash import config as smash_config
from smashcalc.tasks import config as task_config

ALL_CONFIGS = [core_config, hopf_config, smash_config, homology_config, koszul_config,
               completion_config, task_config]


class TestValidateConfig:
    """Test the validate_config functions of every package."""

    @pytest.mark.parametrize("module", ALL_CONFIGS, ids=lambda m: m.__name__)
    def test_defaults_valid(self, module):
        """Test that the loaded settings validate."""
        module.validate_config()

    @pytest.mark.parametrize("module, name, value", [
        (core_config, "ENVIRONMENT", "staging"),
        (core_config, "DEFAULT_TRUNCATION", -1),
        (core_config, "RESOLUTION_BOUND", 0),
        (hopf_config, "MATRIX_GROUP_LIMIT", 0),
        (smash_config, "DELTA_INDICES", []),
        (homology_config, "AUTOMORPHISM_ORDER_LIMIT", 0),
        (koszul_config, "KOSZUL_MAX_VARIABLES", -1),
        (completion_config, "PATH_LENGTH_BOUND", -1),
        (task_config, "REPORT_FORMAT", "yaml"),
        (task_config, "PARALLEL_WORKERS", 0),
        (task_config, "SMASHCALC_VERSION", "9"),
    ])
    def test_invalid_value(self, monkeypatch, module, name, value):
        """Test that an out-of-range setting raises ValueError."""
        monkeypatch.setattr(module, name, value)
        with pytest.raises(ValueError):
            module.validate_config()


class TestEnvironmentConfig:
    """Test per-environment overrides."""

    def test_known_environment(self, monkeypatch):
        """Test that development raises the resolution bound."""
        monkeypatch.setattr(core_config, "ENVIRONMENT", "development")
        assert core_config.get_environment_config()["resolution_bound"] == 8

    def test_unknown_environment_falls_back(self, monkeypatch):
        """Test that an unknown environment reads the production table."""
        monkeypatch.setattr(task_config, "TASK_ENVIRONMENT", "staging")
        assert task_config.get_environment_config() == task_config.TASK_ENV_CONFIGS["production"]

    def test_exit_codes(self):
        """Test the documented exit codes."""
        assert (task_config.EXIT_PASS, task_config.EXIT_FAIL, task_config.EXIT_INPUT_ERROR) == (0, 1, 2)
