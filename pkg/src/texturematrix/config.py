import os
import re
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, field_validator

from texturematrix.corpus import PoolingScheme
from texturematrix.errors import ContractError
from texturematrix.pixel_grid import SymmetricAxis
from texturematrix.renderers import RENDERER_NAMES


def _substitute_env_vars(value: str) -> str:
    """Replace ${ENV_VAR} patterns with environment variable values."""

    def replacer(match: re.Match) -> str:
        var_name = match.group(1)
        env_val = os.environ.get(var_name)
        if env_val is None:
            raise ValueError(f"Environment variable {var_name!r} is not set")
        return env_val

    return re.sub(r"\$\{([^}]+)}", replacer, value)


def _walk_and_substitute(obj: object) -> object:
    """Recursively substitute env vars in all string values."""
    if isinstance(obj, str):
        return _substitute_env_vars(obj)
    if isinstance(obj, dict):
        return {k: _walk_and_substitute(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_walk_and_substitute(item) for item in obj]
    return obj


class AnalysisConfig(BaseModel):
    # Axis names as accepted by --axis; "all" expands to the three standard axes.
    axes: list[str] = Field(default_factory=lambda: ["horizontal", "vertical", "diagonal"])
    luma: bool = False
    workers: int = 1

    @field_validator("axes")
    @classmethod
    def validate_axes(cls, v: list[str]) -> list[str]:
        if not v:
            raise ValueError("axes must name at least one axis")
        normalized = []
        for name in v:
            if name.strip().lower() == "all":
                normalized.append("all")
                continue
            try:
                normalized.append(SymmetricAxis.from_label(name).label)
            except ContractError as exc:
                raise ValueError(str(exc)) from None
        return normalized

    @field_validator("workers")
    @classmethod
    def validate_workers(cls, v: int) -> int:
        if v < 1:
            raise ValueError("workers must be at least 1")
        return v


class OutputConfig(BaseModel):
    format: str = "json"
    display_precision: bool = False

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        v = v.lower()
        if v not in RENDERER_NAMES:
            raise ValueError(f"format must be one of {', '.join(RENDERER_NAMES)}")
        return v


class ChartConfig(BaseModel):
    width: int = 800
    height: int = 400
    gutter: int = 20
    bar_fill: str = "#4c78a8"

    @field_validator("width", "height")
    @classmethod
    def validate_size(cls, v: int) -> int:
        if v < 200:
            raise ValueError("chart width and height must be at least 200")
        return v

    @field_validator("gutter")
    @classmethod
    def validate_gutter(cls, v: int) -> int:
        if v < 0:
            raise ValueError("gutter must not be negative")
        return v


class CorpusConfig(BaseModel):
    pooling: PoolingScheme = PoolingScheme.ALL


class AppConfig(BaseModel):
    analysis: AnalysisConfig = Field(default_factory=AnalysisConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    chart: ChartConfig = Field(default_factory=ChartConfig)
    corpus: CorpusConfig = Field(default_factory=CorpusConfig)


def load_config(path: str | Path | None = None) -> AppConfig:
    """Load and validate configuration from a YAML file; all defaults without one."""
    if path is None:
        return AppConfig()

    path = Path(path)
    with path.open() as f:
        raw = yaml.safe_load(f)

    if raw is None:
        raw = {}

    raw = _walk_and_substitute(raw)
    return AppConfig.model_validate(raw)
