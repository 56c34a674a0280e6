"""The Bernstein operator B_n(f|x) and its empirical convergence harness."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from simplex.basis import eval_all
from simplex.errors import (
    ArityMismatch,
    DegreeMismatch,
    EmptyDegrees,
    EmptyGrid,
    InvalidDegrees,
    InvalidGridStep,
)
from simplex.multiindex import SimplexPoint, enumerate_indices, lattice, max_distance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampledFunction:
    """A real function on the k-simplex.

    ``evaluator`` receives the float coordinates of a point and must be
    defined on the whole closed simplex, reentrant and free of side effects.
    """

    arity: int
    evaluator: Callable[[Sequence[float]], float]
    label: str

    def __call__(self, x: SimplexPoint) -> float:
        if x.k != self.arity:
            raise ArityMismatch(
                f"function '{self.label}' has arity {self.arity}, point has dimension {x.k}"
            )
        return float(self.evaluator(tuple(float(c) for c in x.coords)))


@dataclass(frozen=True)
class ConvergenceRow:
    """Sup-error of B_n(f|.) against f over one evaluation grid."""

    function: str
    k: int
    n: int
    grid_step: Fraction
    grid_size: int
    sup_error: float


def node_values(f: SampledFunction, n: int) -> np.ndarray:
    """f(v/n) for every |v| <= n, in lexicographic order of v.

    Nodes are formed exactly and converted once, so they carry no roundoff
    beyond the final float conversion.
    """
    if n < 1:
        raise DegreeMismatch(f"operator degree must be positive, got {n}")
    nodes = (
        SimplexPoint(tuple(Fraction(e, n) for e in v.entries))
        for v in enumerate_indices(f.arity, n)
    )
    return np.fromiter((f(node) for node in nodes), dtype=float)


def apply(f: SampledFunction, n: int, x: SimplexPoint) -> float:
    """B_n(f|x) = sum_{|v| <= n} f(v/n) B_{v,n}(x)."""
    return _apply_with_nodes(f, n, x, node_values(f, n))


def sup_error(f: SampledFunction, n: int, grid: Sequence[SimplexPoint]) -> float:
    """max over the grid of |B_n(f|x) - f(x)|."""
    if not grid:
        raise EmptyGrid(f"no evaluation points for '{f.label}' at n = {n}")
    nodes = node_values(f, n)
    errors = np.array([abs(_apply_with_nodes(f, n, x, nodes) - f(x)) for x in grid])
    return float(errors.max())


def convergence_table(
    f: SampledFunction,
    degrees: Sequence[int],
    grid_step: Fraction,
) -> list[ConvergenceRow]:
    """One ConvergenceRow per degree over the lattice {v/M : |v| <= M}, M = 1/grid_step."""
    if not degrees:
        raise EmptyDegrees("at least one degree is required")
    if any(n < 1 for n in degrees) or any(a >= b for a, b in zip(degrees, degrees[1:])):
        raise InvalidDegrees(f"degrees must be positive and strictly ascending, got {degrees}")

    grid = evaluation_grid(f.arity, grid_step)
    rows: list[ConvergenceRow] = []
    for n in degrees:
        err = sup_error(f, n, grid)
        logger.debug("%s: n=%d sup_error=%.3e over %d points", f.label, n, err, len(grid))
        rows.append(
            ConvergenceRow(
                function=f.label,
                k=f.arity,
                n=n,
                grid_step=Fraction(grid_step),
                grid_size=len(grid),
                sup_error=err,
            )
        )
    return rows


def evaluation_grid(k: int, grid_step: Fraction) -> list[SimplexPoint]:
    """The lattice {v/M} as float points; grid_step must be 1/M."""
    step = Fraction(grid_step)
    if step <= 0 or step > 1 or step.numerator != 1:
        raise InvalidGridStep(f"grid step must be 1/M for a positive integer M, got {step}")
    return [p.to_float() for p in lattice(k, step.denominator)]


def tail_mass(n: int, x: SimplexPoint, delta: float) -> float:
    """Basis mass at x carried by nodes v/n with d(v/n, x) >= delta.

    Chebyshev's inequality on each coordinate and a union bound give
    tail_mass <= k / (4 n delta^2).
    """
    values = eval_all(x.k, n, x.to_float())
    point = x.to_float()
    far = [
        b
        for v, b in values.items()
        if max_distance(SimplexPoint(tuple(e / n for e in v.entries)), point) >= delta
    ]
    return float(np.sum(far)) if far else 0.0


def tail_bound(k: int, n: int, delta: float) -> float:
    return k / (4 * n * delta**2)


def _apply_with_nodes(
    f: SampledFunction, n: int, x: SimplexPoint, nodes: np.ndarray
) -> float:
    if x.k != f.arity:
        raise ArityMismatch(
            f"function '{f.label}' has arity {f.arity}, point has dimension {x.k}"
        )
    basis = np.fromiter(eval_all(f.arity, n, x.to_float()).values(), dtype=float)
    return float(np.dot(nodes, basis))
