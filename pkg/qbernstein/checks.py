"""q-versions of the decomposition and symmetry checks.

Each q runs a float pass at relative tolerance over the exact sample points.
Each rational root runs an exact pass with q = root**scale, the scale chosen
per point so every q^{x_i} is rational.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from identities.decomposition import convolution_sum, decomposition_cases, resolve_weight
from identities.report import CheckReport, Counterexample, agrees, encode, log_report
from identities.sampling import default_points
from identities.symmetry import (
    Permutation,
    TransformSpec,
    permutations_for,
    permute_index,
    permute_point,
    transform_index,
    transform_point,
)
from qbernstein.basis import (
    QBasisId,
    q_basis_eval,
    q_basis_eval_exact,
    q_eval_all,
    q_eval_all_exact,
)
from qbernstein.brackets import ExactQ, QParam
from simplex.multiindex import BasisId, MultiIndex, Scalar, SimplexPoint, enumerate_indices

logger = logging.getLogger(__name__)

DEFAULT_Q_VALUES = (0.25, 0.5, 0.75)
DEFAULT_EXACT_ROOTS = (Fraction(1, 2), Fraction(2, 3))

Lookup = Callable[[MultiIndex, int], Scalar]


@dataclass(frozen=True)
class Deformation:
    """One q to check at: a float QParam, or an ExactQ fitted to a point."""

    label: Scalar
    evaluate: Callable[[BasisId, SimplexPoint], Scalar]
    table: Callable[[int, int, SimplexPoint], dict[MultiIndex, Scalar]]

    @classmethod
    def floating(cls, q: QParam) -> Deformation:
        return cls(
            Fraction(1) if q.classical else q.q,
            lambda basis_id, x: q_basis_eval(QBasisId(basis_id.index, basis_id.degree, q), x),
            lambda k, n, x: q_eval_all(k, n, x, q),
        )

    @classmethod
    def exact(cls, q: ExactQ) -> Deformation:
        return cls(
            q.q,
            lambda basis_id, x: q_basis_eval_exact(basis_id, x, q),
            lambda k, n, x: q_eval_all_exact(k, n, x, q),
        )

    def lookup(self, k: int, n_max: int, x: SimplexPoint) -> Lookup:
        tables = [self.table(k, d, x) for d in range(n_max + 1)]
        return lambda w, d: tables[d][w]


def deformations(
    points: Sequence[SimplexPoint],
    qs: Sequence[float],
    exact_roots: Sequence[Fraction],
) -> Iterator[tuple[SimplexPoint, Deformation]]:
    """Float passes for every q, then exact passes for every root at every exact point."""
    for q in qs:
        deformation = Deformation.floating(QParam.of(q))
        logger.debug("q pass at q=%r over %d points", deformation.label, len(points))
        for x in points:
            yield x, deformation
    for root in exact_roots:
        for x in points:
            if x.exact:
                yield x, Deformation.exact(ExactQ.for_point(Fraction(root), x))


def check_q_decomposition(
    k: int,
    n_max: int,
    qs: Sequence[float] = DEFAULT_Q_VALUES,
    points: Sequence[SimplexPoint] | None = None,
    *,
    weight: str = "convolution",
    tolerance: float = 1e-11,
    exact_roots: Sequence[Fraction] = DEFAULT_EXACT_ROOTS,
) -> CheckReport:
    """The decomposition identity with B_{.,.}(x|q) in place of the classical basis."""
    weight_fn = resolve_weight(weight)
    points = list(points) if points is not None else default_points(k)
    report = CheckReport(identity="q_decomposition")

    for x, deformation in deformations(points, qs, exact_roots):
        lookup = deformation.lookup(k, n_max, x)
        for n, v, m in decomposition_cases(k, n_max):
            lhs = convolution_sum(v, n, m, lookup, weight_fn)
            rhs = lookup(v, n)
            report.cases += 1
            if not agrees(lhs, rhs, tolerance):
                report.add(
                    Counterexample.build(
                        "q_decomposition", v, n, x, lhs, rhs, m=m, q=encode(deformation.label)
                    )
                )

    log_report(report, k=k, n_max=n_max, weight=weight, qs=list(qs))
    return report


def check_q_symmetry(
    k: int,
    n_max: int,
    qs: Sequence[float] = DEFAULT_Q_VALUES,
    points: Sequence[SimplexPoint] | None = None,
    *,
    permutations: Sequence[Permutation] | None = None,
    tolerance: float = 1e-11,
    exact_roots: Sequence[Fraction] = DEFAULT_EXACT_ROOTS,
) -> CheckReport:
    """Axis and permutation symmetry of B_{.,.}(x|q).

    Records are tagged ``q_axis_symmetry`` or ``q_permutation_symmetry``.
    """
    points = list(points) if points is not None else default_points(k)
    sigmas = list(permutations) if permutations is not None else permutations_for(k)
    report = CheckReport(identity="q_symmetry")

    for x, deformation in deformations(points, qs, exact_roots):
        lookup = deformation.lookup(k, n_max, x)
        label = encode(deformation.label)
        moves = [
            ("q_axis_symmetry", transform_point(TransformSpec(j, 1), x),
             lambda v, n, j=j: transform_index(TransformSpec(j, n), v), {"j": j})
            for j in range(1, k + 1)
        ] + [
            ("q_permutation_symmetry", permute_point(sigma, x),
             lambda v, n, undo=sigma.inverse(): permute_index(undo, v),
             {"sigma": list(sigma.image)})
            for sigma in sigmas
        ]
        for tag, moved, index_map, extra in moves:
            for n in range(n_max + 1):
                for v in enumerate_indices(k, n):
                    lhs = deformation.evaluate(BasisId(v, n), moved)
                    rhs = lookup(index_map(v, n), n)
                    report.cases += 1
                    if not agrees(lhs, rhs, tolerance):
                        report.add(Counterexample.build(tag, v, n, x, lhs, rhs, q=label, **extra))

    log_report(report, k=k, n_max=n_max, qs=list(qs), permutations=len(sigmas))
    return report
