"""
Centralized configuration using Pydantic settings.

All configuration is loaded from environment variables or .env file
with type validation and sensible defaults.
"""

from typing import List, Optional
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class EnumerationSettings(BaseSettings):
    """Bounds for exhaustive enumeration and closure."""

    partition_bound: int = Field(7, validation_alias='PH_PARTITION_BOUND',
                                 description='Largest n for set partition / permutation streams')
    closure_cap: int = Field(10 ** 6, validation_alias='PH_CLOSURE_CAP',
                             description='Maximum number of elements a closure may produce')
    green_party_bound: int = Field(5, validation_alias='PH_GREEN_PARTY_BOUND')
    green_tied_bound: int = Field(4, validation_alias='PH_GREEN_TIED_BOUND')
    maxsub_bound: int = Field(7, validation_alias='PH_MAXSUB_BOUND',
                              description='Largest n for brute-force stabilizers')

    model_config = SettingsConfigDict(env_prefix='ph_', case_sensitive=False)

    @field_validator('partition_bound', 'green_party_bound', 'green_tied_bound', 'maxsub_bound')
    @classmethod
    def validate_bound(cls, v):
        if v < 1 or v > 10:
            raise ValueError('Enumeration bounds must be between 1 and 10')
        return v

    @field_validator('closure_cap')
    @classmethod
    def validate_cap(cls, v):
        if v <= 0:
            raise ValueError('Closure cap must be positive')
        return v


class SpecializationSettings(BaseSettings):
    """Random specialization points for rank and dimension certificates."""

    prime_min: int = Field(2 ** 30, validation_alias='PH_PRIME_MIN',
                           description='Prime moduli are drawn above this value')
    resample_attempts: int = Field(3, validation_alias='PH_RESAMPLE_ATTEMPTS')
    rational_height: int = Field(97, validation_alias='PH_RATIONAL_HEIGHT',
                                 description='Numerators/denominators of random rationals are below this')
    excluded_values: List[int] = Field(default=[0, 1, -1], validation_alias='PH_EXCLUDED_VALUES')

    model_config = SettingsConfigDict(env_prefix='ph_', case_sensitive=False)

    @field_validator('prime_min')
    @classmethod
    def validate_prime_min(cls, v):
        if v < 3:
            raise ValueError('Prime lower bound must be at least 3')
        return v

    @field_validator('resample_attempts')
    @classmethod
    def validate_attempts(cls, v):
        if v < 1 or v > 20:
            raise ValueError('Resample attempts must be between 1 and 20')
        return v

    @field_validator('excluded_values')
    @classmethod
    def validate_excluded(cls, v):
        if isinstance(v, str):
            v = [int(x.strip()) for x in v.split(',')]
        if 0 not in v:
            raise ValueError('Zero must always be excluded (parameters are invertible)')
        return v


class TensorSettings(BaseSettings):
    """Tensor representation configuration."""

    m: int = Field(2, validation_alias='PH_TENSOR_M', description='dim V = m^2')
    operator_table: str = Field('consistent', validation_alias='PH_TENSOR_OPERATOR_TABLE')
    column_sample: int = Field(4096, validation_alias='PH_COLUMN_SAMPLE',
                               description='Columns sampled when V^n is larger than this')

    model_config = SettingsConfigDict(env_prefix='ph_', case_sensitive=False)

    @field_validator('m')
    @classmethod
    def validate_m(cls, v):
        if v < 1 or v > 4:
            raise ValueError('m must be between 1 and 4')
        return v

    @field_validator('operator_table')
    @classmethod
    def validate_table(cls, v):
        v = v.lower()
        if v not in ['consistent', 'flat']:
            raise ValueError('Operator table must be "consistent" or "flat"')
        return v


class QuotientSettings(BaseSettings):
    """Ideal closure and structure-table configuration."""

    iteration_cap: int = Field(200000, validation_alias='PH_IDEAL_ITERATION_CAP')
    structure_table_max_n: int = Field(4, validation_alias='PH_STRUCTURE_TABLE_MAX_N',
                                       description='Largest n whose basis products are memoized')

    model_config = SettingsConfigDict(env_prefix='ph_', case_sensitive=False)


class ObservabilitySettings(BaseSettings):
    """Observability configuration."""

    log_level: str = Field('WARNING', validation_alias='LOG_LEVEL')
    log_format: str = Field('text', validation_alias='LOG_FORMAT', description='Log format: json or text')
    log_dir: Optional[str] = Field(None, validation_alias='LOG_DIR', description='Rotating file log directory; none by default')
    metrics_enabled: bool = Field(True, validation_alias='METRICS_ENABLED')

    model_config = SettingsConfigDict(env_prefix='observability_', case_sensitive=False)

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v):
        valid_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
        v = v.upper()
        if v not in valid_levels:
            raise ValueError(f'Log level must be one of {valid_levels}')
        return v

    @field_validator('log_format')
    @classmethod
    def validate_log_format(cls, v):
        v = v.lower()
        if v not in ['json', 'text']:
            raise ValueError('Log format must be "json" or "text"')
        return v


class Settings(BaseSettings):
    """Main engine settings."""

    default_seed: int = Field(0, validation_alias='PH_DEFAULT_SEED')

    # Sub-settings
    enumeration: EnumerationSettings = Field(default_factory=EnumerationSettings)
    specialization: SpecializationSettings = Field(default_factory=SpecializationSettings)
    tensor: TensorSettings = Field(default_factory=TensorSettings)
    quotients: QuotientSettings = Field(default_factory=QuotientSettings)
    observability: ObservabilitySettings = Field(default_factory=ObservabilitySettings)

    model_config = SettingsConfigDict(
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=False,
        extra='ignore'
    )

    @field_validator('default_seed')
    @classmethod
    def validate_seed(cls, v):
        if v < 0 or v >= 2 ** 64:
            raise ValueError('Seed must be a 64-bit unsigned integer')
        return v


# Global settings instance
settings = Settings()
