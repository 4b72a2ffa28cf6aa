"""Configuration management."""

import hashlib
import json
import os
import re
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from hazard_rate.errors import ErrorCode, InputError

DATA_DIR_ENV = "HAZARDRATE_DATA_DIR"

_RESOLUTION_PATTERN = re.compile(r"^(week|[1-9]\d*h)$")


class DataConfig(BaseModel):
    """Input file locations. Relative names resolve against data_dir."""

    data_dir: str | None = Field(default=None, description="Input root (falls back to HAZARDRATE_DATA_DIR)")
    damodaran: str = Field(default="damodaran.csv")
    wikirating: str = Field(default="wikirating.csv")
    credendo: str = Field(default="credendo.csv")
    wri: str = Field(default="wri.csv")
    overrides: str = Field(default="overrides.csv")
    grade_table: str = Field(default="grade_table.csv")
    regions: str = Field(default="regions.csv")
    country_regions: str | None = Field(default=None, description="iso3,region map; registry default if unset")
    inflation: str = Field(default="inflation.csv")
    potentials: str = Field(default="potentials.csv")
    profiles_dir: str = Field(default="profiles", description="Directory of <ISO3>.csv profiles")

    def root(self) -> Path:
        """Resolve the input root directory."""
        root = self.data_dir or os.environ.get(DATA_DIR_ENV) or "."
        return Path(root)

    def path(self, name: str) -> Path:
        """Resolve one configured file name against the input root."""
        candidate = Path(name)
        if candidate.is_absolute():
            return candidate
        return self.root() / candidate


class RatesConfig(BaseModel):
    """Configuration for discount-rate synthesis."""

    end_year: int = Field(default=2024, description="Last year of the averaging window")
    window: int = Field(default=10, ge=1, description="Averaging window in years")
    blend_a: float = Field(default=0.75, ge=0.0, le=1.0, description="Economic share a of the blend")
    wri_denominator: str = Field(default="observed", description="'observed' max score or '100'")
    base_year: int = Field(default=2023, description="Cost base year for inflation adjustment")

    @field_validator("wri_denominator")
    @classmethod
    def _check_denominator(cls, value: str) -> str:
        if value not in {"observed", "100"}:
            raise ValueError("wri_denominator must be 'observed' or '100'")
        return value


class ModelConfig(BaseModel):
    """Configuration for the per-country capacity-expansion model."""

    resolution: str = Field(default="1h", description="'1h', '<k>h' block means, or 'week'")
    uniform_rate: float = Field(default=0.08, ge=0.0, description="Uniform discount rate baseline")
    scheme: str = Field(default="final", description="Rate column applied: final, economic, hazard")
    lhv_kwh_per_kg: float = Field(default=33.33, gt=0.0)
    demand_share: float = Field(default=0.25, gt=0.0, le=1.0, description="Share of potential served")

    @field_validator("resolution")
    @classmethod
    def _check_resolution(cls, value: str) -> str:
        if not _RESOLUTION_PATTERN.match(value):
            raise ValueError("resolution must be '1h', '<k>h' or 'week'")
        return value

    @field_validator("scheme")
    @classmethod
    def _check_scheme(cls, value: str) -> str:
        if value not in {"final", "economic", "hazard"}:
            raise ValueError("scheme must be 'final', 'economic' or 'hazard'")
        return value


class TechnologyConfig(BaseModel):
    """Techno-economic parameters of one technology."""

    capex: float = Field(gt=0.0, description="USD per kW (per kWh for storage)")
    opex_frac: float = Field(ge=0.0, lt=1.0, description="Fraction of capex per year")
    lifetime: int = Field(ge=1, description="Economic lifetime in years")
    efficiency: float = Field(default=1.0, gt=0.0, le=1.0)
    discharge_efficiency: float = Field(default=1.0, gt=0.0, le=1.0)
    cost_year: int = Field(default=2023, description="Currency year of capex")
    capex_overrides: dict[str, float] = Field(default_factory=dict, description="iso3 -> capex")


class TechnologiesConfig(BaseModel):
    """Country-independent parameters. Wind and PV capex come from the region table."""

    electrolyzer: TechnologyConfig = Field(
        default_factory=lambda: TechnologyConfig(
            capex=470.0, opex_frac=0.03, lifetime=10, efficiency=0.7,
            capex_overrides={"CHN": 330.0},
        )
    )
    storage: TechnologyConfig = Field(
        default_factory=lambda: TechnologyConfig(
            capex=20.0, opex_frac=0.02, lifetime=30, efficiency=0.98, discharge_efficiency=0.998,
        )
    )
    wind_lifetime: int = Field(default=20, ge=1)
    pv_lifetime: int = Field(default=20, ge=1)


class OutputConfig(BaseModel):
    """Configuration for output."""

    out_dir: str = Field(default="output")
    float_decimals: int = Field(default=6, ge=0)
    top_n: int = Field(default=10, ge=1)


class LoggingConfig(BaseModel):
    """Configuration for logging."""

    level: str = Field(default="INFO")
    json_output: bool = Field(default=False)


class ParallelConfig(BaseModel):
    """Configuration for parallel solves."""

    jobs: int = Field(default=4, ge=1, description="Maximum concurrent country solves")


class RunConfig(BaseModel):
    """Main settings container."""

    data: DataConfig = Field(default_factory=DataConfig)
    rates: RatesConfig = Field(default_factory=RatesConfig)
    model: ModelConfig = Field(default_factory=ModelConfig)
    technologies: TechnologiesConfig = Field(default_factory=TechnologiesConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    parallel: ParallelConfig = Field(default_factory=ParallelConfig)

    def config_hash(self) -> str:
        """Short SHA-256 of the canonical JSON dump, stamped on every output file."""
        payload = json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]

    def with_overrides(self, **sections: dict[str, Any]) -> "RunConfig":
        """
        Return a validated copy with per-section overrides applied.

        None values are ignored so CLI flags left unset keep the file values.

        Args:
            sections: Section name -> {field: value}

        Returns:
            New RunConfig
        """
        data = self.model_dump()
        for section, values in sections.items():
            data[section].update({k: v for k, v in values.items() if v is not None})
        return build_config(data)


def build_config(data: dict[str, Any]) -> RunConfig:
    """Validate a raw mapping into a RunConfig, raising CONFIG_ERROR on failure."""
    try:
        return RunConfig(**data)
    except ValidationError as e:
        raise InputError(ErrorCode.CONFIG_ERROR, str(e)) from e


def load_config(config_path: Path | str | None = None) -> RunConfig:
    """
    Load the run configuration from a YAML file.

    Args:
        config_path: Path to config file. If None, uses default config/settings.yaml

    Returns:
        RunConfig with validated configuration
    """
    if config_path is None:
        # Look for config relative to project root
        config_path = Path(__file__).parent.parent.parent / "config" / "settings.yaml"

    config_path = Path(config_path)

    if not config_path.exists():
        # Return defaults if no config file
        return RunConfig()

    with open(config_path, encoding="utf-8") as f:
        try:
            data: dict[str, Any] = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise InputError(ErrorCode.CONFIG_ERROR, f"invalid YAML: {e}", path=str(config_path)) from e

    return build_config(data)
