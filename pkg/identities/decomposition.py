"""Decomposition of B_{v,n} into degree-m and degree-(n-m) factors, and the m=1 recurrence.

The convolution

    sum_{u <= v, |u| <= m} w(u, m) B_{u,m}(x) B_{v-u,n-m}(x) = B_{v,n}(x)

holds for every m <= min(|v|, n) with w = 1 (the multinomial Vandermonde
identity). The weight u!(m-|u|)!/m! coincides with 1 for m <= 1 and is kept
under the name "printed"; "perturbed" is the mutation used to show the checks
are not vacuous.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from identities.report import CheckReport, Counterexample, agrees, flavors, log_report
from identities.sampling import default_points
from simplex.basis import eval_all, evaluate, evaluate_or_zero
from simplex.errors import (
    DegreeMismatch,
    DimensionMismatch,
    HypothesisViolated,
    UnknownWeight,
)
from simplex.multiindex import (
    BasisId,
    MultiIndex,
    Scalar,
    SimplexPoint,
    enumerate_indices,
    lower_set,
    multinomial,
    unit,
)

logger = logging.getLogger(__name__)

Weight = Callable[[MultiIndex, int], Fraction]
Lookup = Callable[[MultiIndex, int], Scalar]


def convolution_weight(u: MultiIndex, m: int) -> Fraction:
    return Fraction(1)


def printed_weight(u: MultiIndex, m: int) -> Fraction:
    return Fraction(u.factorial() * math.factorial(m - u.total()), math.factorial(m))


def perturbed_weight(u: MultiIndex, m: int) -> Fraction:
    return Fraction(u.factorial() * math.factorial(m - u.total()), math.factorial(m + 1))


WEIGHTS: dict[str, Weight] = {
    "convolution": convolution_weight,
    "printed": printed_weight,
    "perturbed": perturbed_weight,
}


def resolve_weight(name: str) -> Weight:
    try:
        return WEIGHTS[name]
    except KeyError:
        raise UnknownWeight(
            f"unknown weight '{name}'; available: {', '.join(WEIGHTS)}"
        ) from None


@dataclass(frozen=True)
class DecompositionCase:
    """Inputs of one decomposition comparison."""

    k: int
    n: int
    m: int
    v: MultiIndex
    x: SimplexPoint

    def __post_init__(self) -> None:
        if self.v.k != self.k or self.x.k != self.k:
            raise DimensionMismatch(
                f"v has dimension {self.v.k} and x has dimension {self.x.k}, expected {self.k}"
            )
        if self.v.total() > self.n:
            raise DegreeMismatch(f"|v| = {self.v.total()} exceeds n = {self.n}")
        if not 0 <= self.m <= min(self.v.total(), self.n):
            raise HypothesisViolated(
                f"m = {self.m} must satisfy 0 <= m <= min(|v|, n) = "
                f"{min(self.v.total(), self.n)}"
            )


def convolution_sum(v: MultiIndex, n: int, m: int, lookup: Lookup, weight: Weight) -> Scalar:
    """sum over u <= v, |u| <= m of weight(u, m) * B_{u,m} * B_{v-u,n-m}.

    ``lookup(w, d)`` supplies B_{w,d}(x); terms with |v-u| > n-m vanish.
    """
    terms = []
    for u in lower_set(v, m):
        rest = v - u
        if rest.total() > n - m:
            continue
        terms.append(weight(u, m) * lookup(u, m) * lookup(rest, n - m))
    return sum(terms)


def decomposition_lhs(case: DecompositionCase, weight: str = "convolution") -> Scalar:
    """Left side of the decomposition identity, evaluated directly."""

    def lookup(w: MultiIndex, d: int) -> Scalar:
        return evaluate(BasisId(w, d), case.x)

    return convolution_sum(case.v, case.n, case.m, lookup, resolve_weight(weight))


def recurrence_step(v: MultiIndex, n: int, x: SimplexPoint) -> Scalar:
    """(1 - |x|) B_{v,n-1}(x) + sum_{|u| = 1, u <= v} x^u B_{v-u,n-1}(x)."""
    if v.k != x.k:
        raise DimensionMismatch(f"v has dimension {v.k}, x has dimension {x.k}")
    if n < 1 or v.total() > n:
        raise DegreeMismatch(f"need n >= 1 and |v| <= n, got |v| = {v.total()}, n = {n}")
    acc = x.complement() * evaluate_or_zero(v, n - 1, x)
    for i in range(v.k):
        if v[i] >= 1:
            acc += x[i] * evaluate_or_zero(v - unit(v.k, i), n - 1, x)
    return acc


def vandermonde_sum(n: int, m: int, v: MultiIndex) -> int:
    """sum_u multinomial(m, u) * multinomial(n-m, v-u); equals multinomial(n, v)."""
    if v.total() > n:
        raise DegreeMismatch(f"|v| = {v.total()} exceeds n = {n}")
    if not 0 <= m <= n:
        raise HypothesisViolated(f"m = {m} must lie in [0, {n}]")
    return sum(
        multinomial(m, u) * multinomial(n - m, v - u)
        for u in lower_set(v, m)
        if (v - u).total() <= n - m
    )


def decomposition_cases(k: int, n_max: int) -> Iterator[tuple[int, MultiIndex, int]]:
    """(n, v, m) for 1 <= n <= n_max, |v| <= n, 0 <= m <= min(|v|, n)."""
    for n in range(1, n_max + 1):
        for v in enumerate_indices(k, n):
            for m in range(min(v.total(), n) + 1):
                yield n, v, m


def basis_tables(k: int, n_max: int, x: SimplexPoint) -> list[dict[MultiIndex, Scalar]]:
    """eval_all at x for every degree 0..n_max."""
    return [eval_all(k, d, x) for d in range(n_max + 1)]


def table_lookup(tables: list[dict[MultiIndex, Scalar]]) -> Lookup:
    return lambda w, d: tables[d][w]


def check_decomposition(
    k: int,
    n_max: int,
    points: Sequence[SimplexPoint] | None = None,
    *,
    weight: str = "convolution",
    tolerance: float = 1e-12,
    float_pass: bool = True,
) -> CheckReport:
    """Compare the convolution with B_{v,n} over every admissible (n, v, m) and point.

    The convolution reads the eval_all tables; B_{v,n} itself comes from
    ``evaluate``.

    The exact pass compares rationals; the float pass repeats the grid on the
    float images of the points with absolute and relative tolerance.
    """
    weight_fn = resolve_weight(weight)
    points = list(points) if points is not None else default_points(k)
    report = CheckReport(identity="decomposition")

    for x, shown in flavors(points, float_pass):
        logger.debug("decomposition at %s (%s)", shown, "exact" if x.exact else "float")
        lookup = table_lookup(basis_tables(k, n_max, x))
        for n, v, m in decomposition_cases(k, n_max):
            lhs = convolution_sum(v, n, m, lookup, weight_fn)
            rhs = evaluate(BasisId(v, n), x)
            report.cases += 1
            if not agrees(lhs, rhs, tolerance, tolerance):
                report.add(Counterexample.build("decomposition", v, n, shown, lhs, rhs, m=m))

    log_report(report, k=k, n_max=n_max, weight=weight)
    return report


def check_recurrence(
    k: int,
    n_max: int,
    points: Sequence[SimplexPoint] | None = None,
    *,
    tolerance: float = 1e-12,
    float_pass: bool = True,
) -> CheckReport:
    """The m=1 recurrence against B_{v,n} and against the m=1 convolution."""
    points = list(points) if points is not None else default_points(k)
    report = CheckReport(identity="recurrence")

    for x, shown in flavors(points, float_pass):
        lookup = table_lookup(basis_tables(k, n_max, x))
        for n in range(1, n_max + 1):
            for v in enumerate_indices(k, n):
                lhs = recurrence_step(v, n, x)
                comparisons = [(lookup(v, n), None)]
                if v.total() >= 1:
                    comparisons.append(
                        (convolution_sum(v, n, 1, lookup, convolution_weight), 1)
                    )
                for rhs, m in comparisons:
                    report.cases += 1
                    if not agrees(lhs, rhs, tolerance, tolerance):
                        report.add(
                            Counterexample.build("recurrence", v, n, shown, lhs, rhs, m=m)
                        )

    log_report(report, k=k, n_max=n_max)
    return report

