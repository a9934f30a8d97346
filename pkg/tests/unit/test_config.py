"""
Unit tests for configuration module.
"""

import pytest
from pydantic import ValidationError

from config import (
    settings,
    EnumerationSettings,
    ObservabilitySettings,
    SpecializationSettings,
    TensorSettings,
)


class TestSettings:
    """Test configuration settings."""

    def test_default_settings(self):
        """Defaults match the documented bounds."""
        assert settings.enumeration.partition_bound == 7
        assert settings.enumeration.closure_cap == 10 ** 6
        assert settings.specialization.prime_min == 2 ** 30
        assert settings.specialization.resample_attempts == 3
        assert settings.quotients.structure_table_max_n == 4

    def test_observability_settings(self):
        """Test observability configuration."""
        assert settings.observability.log_level in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        assert settings.observability.log_format in ["json", "text"]

    def test_tensor_settings(self):
        """Tensor defaults: m = 2 and the consistent operator table."""
        assert settings.tensor.m == 2
        assert settings.tensor.operator_table == 'consistent'
        assert settings.tensor.column_sample > 0

    def test_environment_variable_override(self, monkeypatch):
        """Environment variables override defaults on a fresh instance."""
        monkeypatch.setenv("PH_PARTITION_BOUND", "5")
        assert EnumerationSettings().partition_bound == 5


class TestValidation:
    """Field validators reject out-of-range values."""

    def test_partition_bound_range(self, monkeypatch):
        monkeypatch.setenv("PH_PARTITION_BOUND", "11")
        with pytest.raises(ValidationError):
            EnumerationSettings()

    def test_zero_must_stay_excluded(self, monkeypatch):
        monkeypatch.setenv("PH_EXCLUDED_VALUES", "[1, -1]")
        with pytest.raises(ValidationError):
            SpecializationSettings()

    def test_operator_table_normalized(self, monkeypatch):
        monkeypatch.setenv("PH_TENSOR_OPERATOR_TABLE", "FLAT")
        assert TensorSettings().operator_table == 'flat'

    def test_unknown_operator_table(self, monkeypatch):
        monkeypatch.setenv("PH_TENSOR_OPERATOR_TABLE", "other")
        with pytest.raises(ValidationError):
            TensorSettings()

    def test_log_level_uppercased(self, monkeypatch):
        monkeypatch.setenv("LOG_LEVEL", "debug")
        assert ObservabilitySettings().log_level == "DEBUG"
