"""Multi-indices, points of the simplex and multinomial coefficients.

Both index and point types are frozen values. Points come in two flavors
decided by their coordinates: all-rational input gives an exact point backed by
``fractions.Fraction``, anything else gives a float point.
"""

from __future__ import annotations

import math
import operator
from collections.abc import Sized
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterator, Union

from simplex.errors import (
    DegreeMismatch,
    DimensionMismatch,
    InvalidMultiIndex,
    OutOfSimplex,
)

# Float points may undershoot 0 or overshoot |x| = 1 by this much.
FLOAT_TOL = 1e-12

Scalar = Union[Fraction, float]


@dataclass(frozen=True, order=True)
class MultiIndex:
    """A vector of k nonnegative integers, ordered lexicographically."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(as_int(e, InvalidMultiIndex) for e in self.entries)
        if not entries:
            raise InvalidMultiIndex("a multi-index needs at least one entry")
        if any(e < 0 for e in entries):
            raise InvalidMultiIndex(f"negative entry in {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> MultiIndex:
        return cls(tuple(entries))

    @classmethod
    def zero(cls, k: int) -> MultiIndex:
        return cls((0,) * k)

    @property
    def k(self) -> int:
        return len(self.entries)

    def total(self) -> int:
        return sum(self.entries)

    def factorial(self) -> int:
        return math.prod(math.factorial(e) for e in self.entries)

    def le(self, other: MultiIndex) -> bool:
        """Componentwise partial order: u <= v iff u_i <= v_i for every i."""
        _same_k(self, other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def replace(self, i: int, value: int) -> MultiIndex:
        """Return a copy with the 0-based slot ``i`` set to ``value``."""
        entries = list(self.entries)
        entries[i] = value
        return MultiIndex(tuple(entries))

    def __add__(self, other: MultiIndex) -> MultiIndex:
        _same_k(self, other)
        return MultiIndex(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: MultiIndex) -> MultiIndex:
        _same_k(self, other)
        return MultiIndex(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class SimplexPoint:
    """A point (x_1, ..., x_k) with x_i >= 0 and x_1 + ... + x_k <= 1."""

    coords: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        raw = tuple(self.coords)
        if not raw:
            raise DimensionMismatch("a simplex point needs at least one coordinate")
        if all(_is_rational(c) for c in raw):
            coords: tuple[Scalar, ...] = tuple(Fraction(c) for c in raw)
            if any(c < 0 for c in coords):
                raise OutOfSimplex(f"negative coordinate in {_fmt(coords)}")
            if sum(coords) > 1:
                raise OutOfSimplex(f"coordinate sum of {_fmt(coords)} exceeds 1")
        else:
            values = tuple(float(c) for c in raw)
            if not all(math.isfinite(c) for c in values):
                raise OutOfSimplex(f"non-finite coordinate in {values}")
            if any(c < -FLOAT_TOL for c in values):
                raise OutOfSimplex(f"negative coordinate in {values}")
            coords = tuple(max(c, 0.0) for c in values)
            if math.fsum(coords) > 1.0 + FLOAT_TOL:
                raise OutOfSimplex(f"coordinate sum of {values} exceeds 1")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: Scalar | int) -> SimplexPoint:
        return cls(tuple(coords))

    @classmethod
    def origin(cls, k: int) -> SimplexPoint:
        return cls((Fraction(0),) * k)

    @property
    def k(self) -> int:
        return len(self.coords)

    @property
    def exact(self) -> bool:
        return isinstance(self.coords[0], Fraction)

    def total(self) -> Scalar:
        if self.exact:
            return sum(self.coords, Fraction(0))
        return math.fsum(self.coords)

    def complement(self) -> Scalar:
        """1 - |x|; clamped at 0 for float points that overshoot by roundoff."""
        if self.exact:
            return 1 - self.total()
        return max(0.0, 1.0 - self.total())

    def monomial(self, v: MultiIndex) -> Scalar:
        """x^v = prod_i x_i^{v_i}, with 0^0 = 1."""
        _same_k(self, v)
        result: Scalar = Fraction(1) if self.exact else 1.0
        for c, e in zip(self.coords, v.entries):
            result *= c**e
        return result

    def to_float(self) -> SimplexPoint:
        return SimplexPoint(tuple(float(c) for c in self.coords))

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def __str__(self) -> str:
        return _fmt(self.coords)


@dataclass(frozen=True)
class BasisId:
    """The pair (v, n) naming B_{v,n}; valid iff |v| <= n."""

    index: MultiIndex
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DegreeMismatch(f"degree must be nonnegative, got {self.degree}")
        if self.index.total() > self.degree:
            raise DegreeMismatch(
                f"|v| = {self.index.total()} exceeds n = {self.degree} for v = {self.index}"
            )

    @property
    def k(self) -> int:
        return self.index.k

    def coefficient(self) -> int:
        return multinomial(self.degree, self.index)


# -- operations -----------------------------------------------------------


def total(v: MultiIndex) -> int:
    """|v| = v_1 + ... + v_k."""
    return v.total()


def factorial(v: MultiIndex) -> int:
    """v! = v_1! ... v_k!."""
    return v.factorial()


@lru_cache(maxsize=4096)
def multinomial(n: int, v: MultiIndex) -> int:
    """n! / (v! (n - |v|)!) in arbitrary-precision integers."""
    rest = n - v.total()
    if rest < 0:
        raise DegreeMismatch(f"|v| = {v.total()} exceeds n = {n} for v = {v}")
    return math.factorial(n) // (v.factorial() * math.factorial(rest))


def enumerate_indices(k: int, n: int) -> list[MultiIndex]:
    """All v in N_0^k with |v| <= n, in ascending lexicographic order."""
    if k < 1:
        raise DimensionMismatch(f"k must be positive, got {k}")
    if n < 0:
        raise DegreeMismatch(f"degree must be nonnegative, got {n}")
    return list(_enumerate_cached(k, n))


@lru_cache(maxsize=256)
def _enumerate_cached(k: int, n: int) -> tuple[MultiIndex, ...]:
    return tuple(MultiIndex(entries) for entries in _bounded(k, n))


def _bounded(k: int, budget: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        for e in range(budget + 1):
            yield (e,)
        return
    for head in range(budget + 1):
        for tail in _bounded(k - 1, budget - head):
            yield (head, *tail)


def le(u: MultiIndex, v: MultiIndex) -> bool:
    return u.le(v)


def lower_set(v: MultiIndex, m: int) -> list[MultiIndex]:
    """Every u <= v with |u| <= m, in lexicographic order."""
    out: list[MultiIndex] = []

    def walk(prefix: tuple[int, ...], budget: int) -> None:
        i = len(prefix)
        if i == v.k:
            out.append(MultiIndex(prefix))
            return
        for e in range(min(v[i], budget) + 1):
            walk((*prefix, e), budget - e)

    walk((), m)
    return out


def unit(k: int, i: int) -> MultiIndex:
    """The index with a single 1 in 0-based slot ``i``."""
    return MultiIndex.zero(k).replace(i, 1)


def max_distance(x: SimplexPoint, y: SimplexPoint) -> Scalar:
    """d(x, y) = max_i |x_i - y_i|."""
    _same_k(x, y)
    return max(abs(a - b) for a, b in zip(x.coords, y.coords))


def lattice(k: int, m: int) -> list[SimplexPoint]:
    """The exact barycentric lattice {v / m : |v| <= m}."""
    if m < 1:
        raise DegreeMismatch(f"lattice resolution must be positive, got {m}")
    return [
        SimplexPoint(tuple(Fraction(e, m) for e in v.entries))
        for v in enumerate_indices(k, m)
    ]


# -- internal -------------------------------------------------------------


def _is_rational(value: object) -> bool:
    return isinstance(value, Rational) and not isinstance(value, bool)


def _same_k(a: Sized, b: Sized) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"dimension {len(a)} does not match dimension {len(b)}")


def _fmt(coords: tuple) -> str:
    return "(" + ",".join(str(c) for c in coords) + ")"


def as_int(value: object, error: type[Exception]) -> int:
    """``value`` as a plain int; fractional values and booleans raise ``error``."""
    if isinstance(value, bool):
        raise error(f"expected an integer, got {value!r}")
    try:
        return operator.index(value)
    except TypeError:
        raise error(f"expected an integer, got {value!r}") from None
