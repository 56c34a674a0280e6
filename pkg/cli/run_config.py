"""RunConfig: one validated CLI invocation."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.settings import RationalField
from simplex.errors import DimensionMismatch
from simplex.multiindex import MultiIndex, SimplexPoint


class RunConfig(BaseModel):
    """Settings defaults merged with the flags of one subcommand."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    subcommand: Literal["eval", "approx", "check", "table", "genfun"]
    k: int = Field(ge=1)
    output: Path | None = None
    format: Literal["json", "csv"] = "json"
    seed: int = 0x5EED

    # eval / approx / genfun
    n: int | None = Field(default=None, ge=0)
    v: MultiIndex | None = None
    x: SimplexPoint | None = None
    q: float | None = None
    function: str | None = None
    t: float = 1.0
    truncation: int = Field(default=40, ge=0)

    # check
    suites: list[str] = []
    n_max: int = Field(default=5, ge=0)
    points: int = Field(default=5, ge=1)
    weight: Literal["convolution", "printed", "perturbed"] = "convolution"
    qs: list[float] = []

    # table
    functions: list[str] = []
    degrees: list[int] = []
    grid_step: RationalField = Fraction(1, 20)

    @model_validator(mode="after")
    def _check_subcommand_fields(self) -> RunConfig:
        if self.subcommand == "eval" and (self.n is None or self.v is None or self.x is None):
            raise ValueError("eval needs --n, --v and --x")
        if self.subcommand == "approx" and None in (self.function, self.n, self.x):
            raise ValueError("approx needs --f, --n and --x")
        if self.subcommand == "genfun" and (self.v is None or self.x is None):
            raise ValueError("genfun needs --v and --x")
        if self.subcommand == "check" and not self.suites:
            raise ValueError("check needs at least one of --thm1 --thm2 --thm3 --thm4 --all")
        if self.subcommand == "check" and self.format == "csv":
            raise ValueError("check writes JSON only; --format csv is not supported")
        if self.subcommand == "table" and not self.functions:
            raise ValueError("table needs at least one function label")
        for name, value in (("v", self.v), ("x", self.x)):
            if value is not None and value.k != self.k:
                raise DimensionMismatch(f"--{name} has dimension {value.k}, but --k is {self.k}")
        return self
