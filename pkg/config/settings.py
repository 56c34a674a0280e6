"""Workbench settings: check grid, tolerances, convergence table, generating series."""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, Field, PlainSerializer, PlainValidator, WithJsonSchema

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
SETTINGS_PATH = DATA_DIR / "settings.json"


def _parse_rational(value: object) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("a rational is expected, got a boolean")
    if isinstance(value, float):
        # shortest repr, so 0.05 reads as 1/20
        value = repr(value)
    if isinstance(value, (Fraction, int, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


# Written as "1/20" in JSON, held as an exact Fraction in memory.
RationalField = Annotated[
    Fraction,
    PlainValidator(_parse_rational),
    PlainSerializer(str, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+(\.\d+)?(/\d+)?$"}),
]


class CheckSettings(BaseModel):
    """Case grid for the identity suites."""

    k: int = Field(default=2, ge=1)
    n_max: int = Field(default=5, ge=0)
    seed: int = 0x5EED
    points_per_case: int = Field(default=5, ge=1)
    max_denominator: int = Field(default=64, ge=1)
    q_values: list[RationalField] = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    exact_q_roots: list[RationalField] = [Fraction(1, 2), Fraction(2, 3)]
    sampled_permutations: int = Field(default=6, ge=1)
    weight: Literal["convolution", "printed", "perturbed"] = "convolution"


class ToleranceSettings(BaseModel):
    """Comparison tolerances for the float passes."""

    float_identity: float = Field(default=1e-12, gt=0)
    q_relative: float = Field(default=1e-11, gt=0)


class ConvergenceSettings(BaseModel):
    """Defaults of the ``table`` subcommand."""

    degrees: list[int] = [4, 8, 16, 32]
    grid_step: RationalField = Fraction(1, 20)
    functions: list[str] = ["const", "coord", "affine", "prod", "exp", "cone"]


class GeneratingSettings(BaseModel):
    """Defaults of the ``genfun`` subcommand."""

    truncation: int = Field(default=40, ge=0)
    t: float = 1.0


class AppSettings(BaseModel):
    """Top-level container for all workbench settings."""

    checks: CheckSettings = CheckSettings()
    tolerances: ToleranceSettings = ToleranceSettings()
    convergence: ConvergenceSettings = ConvergenceSettings()
    generating: GeneratingSettings = GeneratingSettings()
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    @property
    def log_level_value(self) -> int:
        return logging.getLevelName(self.log_level)


def load_settings(path: Path | None = None) -> AppSettings:
    """Load settings from disk, returning defaults if the file is missing."""
    path = path or SETTINGS_PATH
    if path.exists():
        raw = path.read_text(encoding="utf-8")
        return AppSettings.model_validate_json(raw)
    return AppSettings()

