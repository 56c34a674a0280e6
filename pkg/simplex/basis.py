"""Bernstein basis B_{v,n} on the simplex in exact and float arithmetic."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Iterable

from simplex.errors import (
    DegreeMismatch,
    DimensionMismatch,
    OutOfSimplex,
    ResultOverflow,
    TruncationTooSmall,
)
from simplex.multiindex import BasisId, MultiIndex, Scalar, SimplexPoint

logger = logging.getLogger(__name__)

# Coefficients wider than this go through logarithms in the float flavor.
MAX_COEFFICIENT_BITS = 960

# math.exp overflows just above this.
_EXP_LIMIT = 709.0


def float_term(
    coef: int, factors: Iterable[tuple[float, int]], tail: float, tail_power: int
) -> float:
    """coef * prod b**e * tail**tail_power in floats, for a possibly huge coefficient.

    Small coefficients chain the multiplications in the order ``eval_all``
    uses, so both give the same bits. Wider ones are summed as logarithms;
    math.log takes the integer without converting it to float.
    """
    if coef.bit_length() <= MAX_COEFFICIENT_BITS:
        mono = 1.0
        for base, e in factors:
            for _ in range(e):
                mono *= base
        power = 1.0
        for _ in range(tail_power):
            power *= tail
        return coef * mono * power
    log_value = math.log(coef)
    for base, e in (*factors, (tail, tail_power)):
        if e == 0:
            continue
        if base == 0:
            return 0.0
        log_value += e * math.log(base)
    return math.exp(log_value)


def evaluate(basis_id: BasisId, x: SimplexPoint) -> Scalar:
    """B_{v,n}(x) = binom(n, v) x^v (1 - |x|)^{n - |v|}.

    Exact points give a ``Fraction``, float points a ``float``. The 0^0 = 1
    convention applies on the boundary of the simplex.
    """
    _check_dim(basis_id.k, x)
    rest = basis_id.degree - basis_id.index.total()
    if not x.exact:
        factors = zip(x.coords, basis_id.index.entries)
        return float_term(basis_id.coefficient(), factors, x.complement(), rest)
    return basis_id.coefficient() * x.monomial(basis_id.index) * x.complement() ** rest


def evaluate_or_zero(v: MultiIndex, n: int, x: SimplexPoint) -> Scalar:
    """Like ``evaluate`` but B_{v,n} = 0 when |v| > n."""
    if v.total() > n:
        return Fraction(0) if x.exact else 0.0
    return evaluate(BasisId(v, n), x)


def eval_all(k: int, n: int, x: SimplexPoint) -> dict[MultiIndex, Scalar]:
    """Every B_{v,n}(x) with |v| <= n, keyed in lexicographic order.

    Walks the indices depth first. Each coordinate level carries a running
    binomial C(b, e) and a running power x_i^e, both updated by one
    multiplication per step, and the leaf multiplies in a precomputed power
    of 1 - |x|.
    """
    _check_dim(k, x)
    if n < 0:
        raise DegreeMismatch(f"degree must be nonnegative, got {n}")

    one: Scalar = Fraction(1) if x.exact else 1.0
    s = x.complement()
    s_powers = [one]
    for _ in range(n):
        s_powers.append(s_powers[-1] * s)

    out: dict[MultiIndex, Scalar] = {}

    def walk(i: int, prefix: tuple[int, ...], budget: int, coef: int, mono: Scalar) -> None:
        if i == k:
            if x.exact or coef.bit_length() <= MAX_COEFFICIENT_BITS:
                out[MultiIndex(prefix)] = coef * mono * s_powers[budget]
            else:
                out[MultiIndex(prefix)] = float_term(coef, zip(x.coords, prefix), s, budget)
            return
        xi = x[i]
        for e in range(budget + 1):
            walk(i + 1, (*prefix, e), budget - e, coef, mono)
            coef = coef * (budget - e) // (e + 1)
            mono = mono * xi

    walk(0, (), n, 1, one)
    return out


def partition_check(k: int, n: int, x: SimplexPoint) -> Scalar:
    """Sum of every degree-n basis value at x; exactly 1 for exact points."""
    values = eval_all(k, n, x)
    if x.exact:
        return sum(values.values(), Fraction(0))
    return math.fsum(values.values())


def partition_sum_float(k: int, n: int, x: SimplexPoint) -> float:
    return float(partition_check(k, n, x.to_float()))


def ordinary(v: int, n: int, x: Scalar) -> Scalar:
    """The univariate Bernstein polynomial binom(n, v) x^v (1 - x)^{n - v}."""
    if not 0 <= v <= n:
        raise DegreeMismatch(f"need 0 <= v <= n, got v = {v}, n = {n}")
    if not 0 <= x <= 1:
        raise OutOfSimplex(f"{x} is outside [0, 1]")
    return math.comb(n, v) * x**v * (1 - x) ** (n - v)


def generating_partial(v: MultiIndex, x: SimplexPoint, t: float, truncation: int) -> float:
    """sum_{n=|v|}^{N} B_{v,n}(x) t^n / n!, each term derived from the previous one."""
    _check_dim(v.k, x)
    degree = v.total()
    if truncation < degree:
        raise TruncationTooSmall(f"N = {truncation} is below |v| = {degree}")

    # n = |v|: B_{v,|v|}(x) t^|v| / |v|! = (t x)^v / v!
    term = _scaled_monomial(v, x, t)
    s = float(x.complement())
    acc = term
    for n in range(degree + 1, truncation + 1):
        term = term * s * t / (n - degree)
        acc += term
    logger.debug("generating series for v=%s to N=%d: %r", v, truncation, acc)
    return _finite(acc, f"generating series for v = {v} at t = {t}")


def generating_closed(v: MultiIndex, x: SimplexPoint, t: float) -> float:
    """(t x)^v / v! * e^{t (1 - |x|)}."""
    _check_dim(v.k, x)
    prefactor = _scaled_monomial(v, x, t)
    exponent = t * float(x.complement())
    what = f"closed form for v = {v} at t = {t}"
    if prefactor == 0.0 or not math.isfinite(prefactor):
        return _finite(prefactor, what)
    if exponent < _EXP_LIMIT:
        return _finite(prefactor * math.exp(exponent), what)
    log_value = math.log(abs(prefactor)) + exponent
    if log_value >= _EXP_LIMIT:
        raise ResultOverflow(f"{what} exceeds the float range")
    return math.copysign(math.exp(log_value), prefactor)


def _scaled_monomial(v: MultiIndex, x: SimplexPoint, t: float) -> float:
    """(t x)^v / v!, one factor t x_i / j at a time."""
    result = 1.0
    for c, e in zip(x.coords, v.entries):
        step = t * float(c)
        for j in range(1, e + 1):
            result = result * step / j
    return result


def _finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise ResultOverflow(f"{what} exceeds the float range")
    return value


def _check_dim(k: int, x: SimplexPoint) -> None:
    if x.k != k:
        raise DimensionMismatch(f"point {x} has dimension {x.k}, expected {k}")
