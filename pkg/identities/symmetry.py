"""Axis transformations T_{j,m}, coordinate permutations and the symmetry checks built on them."""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from identities.decomposition import basis_tables, table_lookup
from identities.report import CheckReport, Counterexample, agrees, flavors, log_report
from identities.sampling import DEFAULT_SEED, default_points, point_rng
from simplex.basis import evaluate
from simplex.errors import (
    DegreeMismatch,
    DimensionMismatch,
    InvalidPermutation,
    OutOfSimplex,
)
from simplex.multiindex import (
    BasisId,
    MultiIndex,
    Scalar,
    SimplexPoint,
    as_int,
    enumerate_indices,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Up to this dimension the whole symmetric group is checked.
EXHAUSTIVE_MAX_K = 3
DEFAULT_SAMPLED_PERMUTATIONS = 6


@dataclass(frozen=True)
class TransformSpec:
    """T_{j,m}: replace the 1-based coordinate j by m minus the coordinate sum."""

    j: int
    m: int

    def __post_init__(self) -> None:
        if self.j < 1:
            raise DimensionMismatch(f"axis j must be at least 1, got {self.j}")


def transform_point(spec: TransformSpec, x: SimplexPoint) -> SimplexPoint:
    """T_{j,1}(x) = (x_1, ..., 1 - |x|, ..., x_k); an involution on the simplex."""
    _check_axis(spec, x.k)
    if spec.m != 1:
        raise OutOfSimplex(f"T_{{j,m}} maps the simplex to itself only for m = 1, got {spec.m}")
    return SimplexPoint(_substitute(x.coords, spec.j, x.complement()))


def transform_index(spec: TransformSpec, v: MultiIndex) -> MultiIndex:
    """T_{j,n}(v) with n = spec.m: v_j becomes n - |v|."""
    _check_axis(spec, v.k)
    rest = spec.m - v.total()
    if rest < 0:
        raise DegreeMismatch(f"|v| = {v.total()} exceeds n = {spec.m} for v = {v}")
    return MultiIndex(_substitute(v.entries, spec.j, rest))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., k} given by its image (sigma(1), ..., sigma(k))."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(as_int(i, InvalidPermutation) for i in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise InvalidPermutation(f"{image} is not a permutation of 1..{len(image)}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(1, k + 1)))

    @property
    def k(self) -> int:
        return len(self.image)

    def inverse(self) -> Permutation:
        inv = [0] * self.k
        for i, target in enumerate(self.image, start=1):
            inv[target - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """(self o other)(i) = self(other(i))."""
        if other.k != self.k:
            raise DimensionMismatch(f"cannot compose permutations of {self.k} and {other.k}")
        return Permutation(tuple(self.image[i - 1] for i in other.image))

    def apply(self, seq: Sequence[T]) -> tuple[T, ...]:
        """(seq_{sigma(1)}, ..., seq_{sigma(k)})."""
        if len(seq) != self.k:
            raise DimensionMismatch(f"permutation of {self.k} applied to length {len(seq)}")
        return tuple(seq[i - 1] for i in self.image)

    def __str__(self) -> str:
        return "(" + ",".join(str(i) for i in self.image) + ")"


def permute_point(p: Permutation, x: SimplexPoint) -> SimplexPoint:
    return SimplexPoint(p.apply(x.coords))


def permute_index(p: Permutation, v: MultiIndex) -> MultiIndex:
    return MultiIndex(p.apply(v.entries))


def all_permutations(k: int) -> list[Permutation]:
    """The symmetric group on k letters, identity first."""
    return [Permutation(image) for image in itertools.permutations(range(1, k + 1))]


def sampled_permutations(k: int, count: int, rng: random.Random) -> list[Permutation]:
    """The identity followed by count - 1 seeded random permutations."""
    out = [Permutation.identity(k)]
    for _ in range(count - 1):
        image = list(range(1, k + 1))
        rng.shuffle(image)
        out.append(Permutation(tuple(image)))
    return out


def permutations_for(
    k: int, count: int = DEFAULT_SAMPLED_PERMUTATIONS, seed: int = DEFAULT_SEED
) -> list[Permutation]:
    if k <= EXHAUSTIVE_MAX_K:
        return all_permutations(k)
    return sampled_permutations(k, count, point_rng(seed, k, "permutations"))


def check_axis_symmetry(
    k: int,
    n_max: int,
    points: Sequence[SimplexPoint] | None = None,
    *,
    tolerance: float = 1e-12,
    float_pass: bool = True,
) -> CheckReport:
    """B_{v,n}(T_{j,1}(x)) against B_{T_{j,n}(v),n}(x) for every axis j, n <= n_max and v."""
    points = list(points) if points is not None else default_points(k)
    report = CheckReport(identity="axis_symmetry")

    for x, shown in flavors(points, float_pass):
        lookup = table_lookup(basis_tables(k, n_max, x))
        for j in range(1, k + 1):
            moved = transform_point(TransformSpec(j, 1), x)
            for n in range(n_max + 1):
                for v in enumerate_indices(k, n):
                    lhs = evaluate(BasisId(v, n), moved)
                    rhs = lookup(transform_index(TransformSpec(j, n), v), n)
                    report.cases += 1
                    if not agrees(lhs, rhs, tolerance, tolerance):
                        report.add(
                            Counterexample.build("axis_symmetry", v, n, shown, lhs, rhs, j=j)
                        )

    log_report(report, k=k, n_max=n_max)
    return report


def check_permutation_symmetry(
    k: int,
    n_max: int,
    points: Sequence[SimplexPoint] | None = None,
    *,
    permutations: Sequence[Permutation] | None = None,
    tolerance: float = 1e-12,
    float_pass: bool = True,
) -> CheckReport:
    """B_{v,n}(sigma(x)) against B_{sigma^-1(v),n}(x).

    Every permutation is checked for k <= 3; larger k uses a seeded sample
    unless ``permutations`` is given.
    """
    points = list(points) if points is not None else default_points(k)
    sigmas = list(permutations) if permutations is not None else permutations_for(k)
    report = CheckReport(identity="permutation_symmetry")
    logger.debug("permutation symmetry for k=%d over %s", k, ", ".join(map(str, sigmas)))

    for x, shown in flavors(points, float_pass):
        lookup = table_lookup(basis_tables(k, n_max, x))
        for sigma in sigmas:
            _compare_permuted(report, sigma, sigma.inverse(), x, shown, n_max, lookup, tolerance)

    log_report(report, k=k, n_max=n_max, permutations=len(sigmas))
    return report


def check_permutation_composition(
    k: int,
    n_max: int,
    points: Sequence[SimplexPoint] | None = None,
    *,
    permutations: Sequence[Permutation] | None = None,
    tolerance: float = 1e-12,
) -> CheckReport:
    """Permutation symmetry for every product sigma o tau.

    The index side uses (sigma o tau)^-1 = tau^-1 o sigma^-1 and never inverts
    the product directly, so a wrong composition order shows up as a
    counterexample.
    """
    points = list(points) if points is not None else default_points(k)
    sigmas = list(permutations) if permutations is not None else permutations_for(k)
    report = CheckReport(identity="permutation_composition")

    for x in points:
        lookup = table_lookup(basis_tables(k, n_max, x))
        for sigma, tau in itertools.product(sigmas, repeat=2):
            product = sigma.compose(tau)
            undo = tau.inverse().compose(sigma.inverse())
            _compare_permuted(report, product, undo, x, x, n_max, lookup, tolerance)

    log_report(report, k=k, n_max=n_max, pairs=len(sigmas) ** 2)
    return report


def _compare_permuted(
    report: CheckReport,
    sigma: Permutation,
    undo: Permutation,
    x: SimplexPoint,
    shown: SimplexPoint,
    n_max: int,
    lookup: Callable[[MultiIndex, int], Scalar],
    tolerance: float,
) -> None:
    moved = permute_point(sigma, x)
    for n in range(n_max + 1):
        for v in enumerate_indices(x.k, n):
            lhs = evaluate(BasisId(v, n), moved)
            rhs = lookup(permute_index(undo, v), n)
            report.cases += 1
            if not agrees(lhs, rhs, tolerance, tolerance):
                report.add(
                    Counterexample.build(
                        report.identity, v, n, shown, lhs, rhs, sigma=list(sigma.image)
                    )
                )


def _substitute(seq: Sequence[T], j: int, value: T) -> tuple[T, ...]:
    out = list(seq)
    out[j - 1] = value
    return tuple(out)


def _check_axis(spec: TransformSpec, k: int) -> None:
    if spec.j > k:
        raise DimensionMismatch(f"axis j = {spec.j} exceeds dimension k = {k}")
