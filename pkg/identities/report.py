"""Counterexample records and check reports.

Records serialize to the JSON schema shipped in ``schemas/``; exact values are
written as ``{"num": ..., "den": ...}`` objects and float values as numbers.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Literal, Sequence, Union

from pydantic import BaseModel, ConfigDict

from simplex.multiindex import MultiIndex, Scalar, SimplexPoint

logger = logging.getLogger(__name__)


class Rational(BaseModel):
    """An exact rational as numerator / denominator."""

    model_config = ConfigDict(frozen=True)

    num: int
    den: int

    @classmethod
    def of(cls, value: Fraction | int) -> Rational:
        value = Fraction(value)
        return cls(num=value.numerator, den=value.denominator)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


Value = Union[Rational, float]


def encode(value: Scalar | int) -> Value:
    """Exact scalars become ``Rational``, everything else a float."""
    if isinstance(value, (Fraction, int)):
        return Rational.of(value)
    return float(value)


class Counterexample(BaseModel):
    """One failed comparison with every input needed to reproduce it."""

    identity: str
    flavor: Literal["exact", "float"]
    k: int
    n: int
    m: int | None = None
    j: int | None = None
    sigma: list[int] | None = None
    q: Value | None = None
    v: list[int]
    x: list[Rational]
    lhs: Value
    rhs: Value

    @classmethod
    def build(
        cls,
        identity: str,
        v: MultiIndex,
        n: int,
        x: SimplexPoint,
        lhs: Scalar,
        rhs: Scalar,
        **extra: object,
    ) -> Counterexample:
        exact = isinstance(lhs, Fraction) and isinstance(rhs, Fraction)
        return cls(
            identity=identity,
            flavor="exact" if exact else "float",
            k=v.k,
            n=n,
            v=list(v.entries),
            x=[Rational.of(Fraction(c)) for c in x.coords],
            lhs=encode(lhs),
            rhs=encode(rhs),
            **extra,
        )

    def to_record(self) -> dict:
        return self.model_dump(mode="json", exclude_none=True)


@dataclass
class CheckReport:
    """Outcome of one identity check over a case grid."""

    identity: str
    cases: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def add(self, counterexample: Counterexample) -> None:
        self.counterexamples.append(counterexample)

    def to_records(self) -> list[dict]:
        return [c.to_record() for c in self.counterexamples]


def agrees(lhs: Scalar, rhs: Scalar, rel_tol: float, abs_tol: float = 0.0) -> bool:
    """Exact equality when both sides are exact, tolerance comparison otherwise."""
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return lhs == rhs
    return math.isclose(float(lhs), float(rhs), rel_tol=rel_tol, abs_tol=abs_tol)


def flavors(
    points: Sequence[SimplexPoint], float_pass: bool
) -> Iterator[tuple[SimplexPoint, SimplexPoint]]:
    """(evaluation point, reported point) pairs.

    The points themselves come first; with ``float_pass`` the float image of
    every exact point follows, reported under its exact coordinates.
    """
    for x in points:
        yield x, x
    if float_pass:
        for x in points:
            if x.exact:
                yield x.to_float(), x


def log_report(report: CheckReport, **context: object) -> None:
    where = " ".join(f"{key}={value}" for key, value in context.items())
    logger.info(
        "%s %s: %d comparisons, %d counterexamples",
        report.identity,
        where,
        report.cases,
        len(report.counterexamples),
    )
    if not report.passed:
        first = report.counterexamples[0]
        logger.warning(
            "%s failed %d times; first at v=%s n=%d flavor=%s",
            report.identity,
            len(report.counterexamples),
            first.v,
            first.n,
            first.flavor,
        )
