"""Workbench: top-level facade that wires settings, registries and the numeric modules."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from config.settings import AppSettings
from functions.library import default_registry
from functions.registry import FunctionRegistry
from identities.report import CheckReport
from identities.sampling import point_rng, sample_points
from identities.symmetry import permutations_for
from qbernstein.basis import QBasisId, q_basis_eval
from simplex.basis import evaluate, generating_closed, generating_partial
from simplex.multiindex import BasisId, MultiIndex, Scalar, SimplexPoint
from simplex.operator import ConvergenceRow, apply, convergence_table
from workbench.suites import SuiteParams, SuiteRegistry, default_suites

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratingPair:
    """Truncated generating series next to its closed form."""

    partial: float
    closed: float

    @property
    def diff(self) -> float:
        return abs(self.partial - self.closed)


@dataclass(frozen=True)
class Approximation:
    """B_n(f|x) and f(x) at one point."""

    function: str
    value: float
    exact: float

    @property
    def error(self) -> float:
        return abs(self.value - self.exact)


class Workbench:
    """Public API consumed by the CLI layer.

    Owns the function and suite registries. The CLI never calls the check
    functions directly.
    """

    def __init__(self, settings: AppSettings) -> None:
        self._settings = settings
        self._functions: FunctionRegistry = default_registry()
        self._suites: SuiteRegistry = default_suites()

    @property
    def settings(self) -> AppSettings:
        return self._settings

    @property
    def functions(self) -> FunctionRegistry:
        return self._functions

    @property
    def suites(self) -> SuiteRegistry:
        return self._suites

    # -- evaluation --------------------------------------------------------

    def evaluate(self, v: MultiIndex, n: int, x: SimplexPoint, q: float | None = None) -> Scalar:
        """B_{v,n}(x), or B_{v,n}(x|q) when q is given."""
        if q is None:
            return evaluate(BasisId(v, n), x)
        return q_basis_eval(QBasisId(v, n, q), x)

    def generating(
        self, v: MultiIndex, x: SimplexPoint, t: float, truncation: int
    ) -> GeneratingPair:
        return GeneratingPair(
            partial=generating_partial(v, x, t, truncation),
            closed=generating_closed(v, x, t),
        )

    # -- approximation -----------------------------------------------------

    def approximate(self, name: str, n: int, x: SimplexPoint) -> Approximation:
        """B_n(f|x) for the registered function ``name`` next to f(x)."""
        f = self._functions.build(name, x.k)
        return Approximation(function=name, value=apply(f, n, x), exact=float(f(x)))

    # -- convergence -------------------------------------------------------

    def convergence(
        self, names: Sequence[str], k: int, degrees: Sequence[int], grid_step: Fraction
    ) -> list[ConvergenceRow]:
        """Convergence rows for every named function, functions in the given order."""
        rows: list[ConvergenceRow] = []
        for name in names:
            f = self._functions.build(name, k)
            rows.extend(convergence_table(f, degrees, grid_step))
        logger.info("convergence table: %d rows for %s", len(rows), ", ".join(names))
        return rows

    # -- identity checks ---------------------------------------------------

    def suite_params(
        self,
        *,
        k: int,
        n_max: int,
        seed: int,
        points: int,
        weight: str,
        qs: Sequence[Fraction | float],
    ) -> SuiteParams:
        checks = self._settings.checks
        tolerances = self._settings.tolerances
        rng = point_rng(seed, k)
        return SuiteParams(
            k=k,
            n_max=n_max,
            points=sample_points(k, points, rng, checks.max_denominator),
            permutations=permutations_for(k, checks.sampled_permutations, seed),
            weight=weight,
            qs=[float(q) for q in qs],
            exact_roots=list(checks.exact_q_roots),
            float_tolerance=tolerances.float_identity,
            q_tolerance=tolerances.q_relative,
        )

    def run_checks(
        self, names: Sequence[str], params: SuiteParams
    ) -> dict[str, list[CheckReport]]:
        """Run the named suites in registry order; result keys follow that order."""
        selected = set(names)
        for name in names:
            self._suites.get(name)
        results: dict[str, list[CheckReport]] = {}
        for suite in self._suites.list_suites():
            if suite.name not in selected:
                continue
            logger.info("running %s: %s", suite.name, suite.description)
            results[suite.name] = suite.run(params)
        return results
