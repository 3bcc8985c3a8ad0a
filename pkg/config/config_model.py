# config/config_model.py
"""
Runtime configuration.

config.json supplies the values; environment variables with the AGPOINTS_
prefix override them, nested keys joined by '__':

    AGPOINTS_FIELD__KIND=QQ
    AGPOINTS_LOGGING__LEVEL=DEBUG
    AGPOINTS_VERIFY__MAX_CONCURRENT=8

Library code never reads this model; the CLI passes the relevant numbers
down as arguments.
"""
from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict
from sympy import isprime

from algebra.fields import DEFAULT_PRIME, FieldSpec


class FieldKind(str, Enum):
    prime = "Fp"
    rationals = "QQ"


class FieldConfig(BaseModel):
    """Coefficient field used where no input document names one."""

    model_config = ConfigDict(extra="ignore")

    kind: FieldKind = Field(FieldKind.prime, description="'Fp' for a prime field, 'QQ' for the rationals")
    prime: int = Field(DEFAULT_PRIME, description="Characteristic when kind is 'Fp'; p = 1 mod 4 gives sqrt(-1)")

    @field_validator("prime")
    @classmethod
    def check_prime(cls, p: int) -> int:
        if p in (2, 3) or not isprime(p):
            raise ValueError(f"{p} is not an admissible prime (must be prime and not 2 or 3)")
        return p

    def to_spec(self) -> FieldSpec:
        return FieldSpec.rationals() if self.kind is FieldKind.rationals else FieldSpec.prime(self.prime)


class LimitsConfig(BaseModel):
    model_config = ConfigDict(extra="ignore")

    saturation_cap: int = Field(50, ge=1, description="Maximum colon iterations in saturate")


class RandomConfig(BaseModel):
    model_config = ConfigDict(extra="ignore")

    seed: int = Field(0, description="Seed for every randomized step (regular forms, charts, random data)")


class LoggingConfig(BaseModel):
    model_config = ConfigDict(extra="ignore")

    level: str = Field("INFO", description="Console log level (stderr)")
    log_dir: Path = Field(Path("LOGS"), description="Directory for the rotating log files")
    file_sink: bool = Field(True, description="Write LOGS/agpoints.log and LOGS/verify.log")
    retention: str = Field("30 days", description="How long rotated log files are kept")

    @field_validator("level")
    @classmethod
    def upper_level(cls, level: str) -> str:
        level = level.upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level '{level}'")
        return level


class VerifyConfig(BaseModel):
    model_config = ConfigDict(extra="ignore")

    max_concurrent: int = Field(4, ge=1, description="Checks running at the same time in verify-paper")
    seeds: list[int] = Field(default_factory=lambda: [0], min_length=1, description="verify-paper runs once per seed")


class ConfigModel(BaseSettings):
    """
    Top-level configuration for the ag-points tool
    """

    model_config = SettingsConfigDict(
        env_prefix="AGPOINTS_",
        env_nested_delimiter="__",
        extra="ignore",
    )

    version: str = Field("1.0.0", description="Configuration schema version")
    field: FieldConfig = Field(default_factory=FieldConfig, description="Default coefficient field")
    limits: LimitsConfig = Field(default_factory=LimitsConfig, description="Iteration and trial limits")
    random: RandomConfig = Field(default_factory=RandomConfig, description="Seeding of randomized steps")
    logging: LoggingConfig = Field(default_factory=LoggingConfig, description="Log sinks")
    verify: VerifyConfig = Field(default_factory=VerifyConfig, description="verify runner settings")

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # environment wins over the values read from config.json
        return env_settings, init_settings

    # --- convenience properties ---
    @property
    def field_spec(self) -> FieldSpec:
        return self.field.to_spec()

    @property
    def seed(self) -> int:
        return self.random.seed

    @property
    def saturation_cap(self) -> int:
        return self.limits.saturation_cap
