"""q-basic numbers [x]_q = (1 - q^x) / (1 - q) for real q in (0, 1]."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from simplex.errors import InvalidQ
from simplex.multiindex import Scalar, SimplexPoint


@dataclass(frozen=True)
class QParam:
    """The deformation parameter; q = 1 is the classical limit with [x]_1 = x."""

    q: float

    def __post_init__(self) -> None:
        value = float(self.q)
        if not math.isfinite(value) or not 0.0 < value <= 1.0:
            raise InvalidQ(f"q must lie in (0, 1], got {self.q}")
        object.__setattr__(self, "q", value)

    @classmethod
    def of(cls, q: QParam | Scalar | int) -> QParam:
        return q if isinstance(q, QParam) else cls(float(q))

    @property
    def classical(self) -> bool:
        return self.q == 1.0


def q_bracket(x: Scalar, q: QParam | float) -> Scalar:
    """(1 - q^x) / (1 - q), or x itself when q = 1.

    q^x is formed as exp(x ln q) and both differences go through expm1, which
    makes [1]_q = 1 exactly and [0]_q = 0.
    """
    q = QParam.of(q)
    if q.classical:
        return x
    if x == 0:
        return 0.0
    log_q = math.log(q.q)
    return math.expm1(float(x) * log_q) / math.expm1(log_q)


@dataclass(frozen=True)
class ExactQ:
    """A rational q = root**scale for which q^x is rational whenever scale * x is an integer."""

    root: Fraction
    scale: int = 1

    def __post_init__(self) -> None:
        root = Fraction(self.root)
        if not 0 < root <= 1:
            raise InvalidQ(f"root of q must lie in (0, 1], got {root}")
        if self.scale < 1:
            raise InvalidQ(f"scale must be a positive integer, got {self.scale}")
        object.__setattr__(self, "root", root)

    @classmethod
    def for_point(cls, root: Fraction, x: SimplexPoint) -> ExactQ:
        """Scale chosen as the common denominator of x, which covers 1 - |x| too."""
        if not x.exact:
            raise InvalidQ(f"exact q needs an exact point, got {x}")
        return cls(Fraction(root), math.lcm(*(Fraction(c).denominator for c in x.coords)))

    @classmethod
    def for_points(cls, root: Fraction, points: Sequence[SimplexPoint]) -> ExactQ:
        scales = [cls.for_point(root, x).scale for x in points]
        return cls(Fraction(root), math.lcm(*scales) if scales else 1)

    @property
    def q(self) -> Fraction:
        return self.root**self.scale

    @property
    def classical(self) -> bool:
        return self.root == 1

    def power(self, x: Fraction) -> Fraction:
        """q^x = root^(scale * x)."""
        exponent = Fraction(x) * self.scale
        if exponent.denominator != 1:
            raise InvalidQ(f"q^{x} is irrational for q = {self.root}^{self.scale}")
        return self.root ** int(exponent)


def q_bracket_exact(x: Fraction | int, q: ExactQ) -> Fraction:
    """[x]_q in rational arithmetic."""
    x = Fraction(x)
    if q.classical:
        return x
    return (1 - q.power(x)) / (1 - q.q)
