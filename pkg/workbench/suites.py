"""Suite registry: named groups of identity checks run by ``check``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from identities.decomposition import check_decomposition, check_recurrence
from identities.report import CheckReport
from identities.symmetry import (
    Permutation,
    check_axis_symmetry,
    check_permutation_composition,
    check_permutation_symmetry,
)
from qbernstein.checks import check_q_decomposition, check_q_symmetry
from simplex.errors import UnknownSuite
from simplex.multiindex import SimplexPoint


@dataclass
class SuiteParams:
    """Everything a suite needs, resolved from settings and CLI flags."""

    k: int
    n_max: int
    points: list[SimplexPoint]
    permutations: list[Permutation]
    weight: str = "convolution"
    qs: list[float] = field(default_factory=lambda: [0.25, 0.5, 0.75])
    exact_roots: list[Fraction] = field(default_factory=lambda: [Fraction(1, 2), Fraction(2, 3)])
    float_tolerance: float = 1e-12
    q_tolerance: float = 1e-11


@dataclass
class SuiteDefinition:
    """Description of a single suite of checks."""

    name: str
    description: str
    run: Callable[[SuiteParams], list[CheckReport]]


class SuiteRegistry:
    """Holds all registered suites in their run order."""

    def __init__(self) -> None:
        self._suites: dict[str, SuiteDefinition] = {}

    def register(self, suite: SuiteDefinition) -> None:
        """Register a new suite."""
        self._suites[suite.name] = suite

    def get(self, name: str) -> SuiteDefinition:
        """Look up a suite by name."""
        try:
            return self._suites[name]
        except KeyError:
            raise UnknownSuite(
                f"unknown suite '{name}'; available: {', '.join(self.names())}"
            ) from None

    def names(self) -> list[str]:
        return list(self._suites)

    def list_suites(self) -> list[SuiteDefinition]:
        return list(self._suites.values())

    def to_description(self) -> str:
        """One line per suite, for the ``check`` help epilog."""
        return "\n".join(f"- {s.name}: {s.description}" for s in self._suites.values())


def _decomposition_suite(p: SuiteParams) -> list[CheckReport]:
    return [
        check_decomposition(
            p.k, p.n_max, p.points, weight=p.weight, tolerance=p.float_tolerance
        ),
        check_recurrence(p.k, p.n_max, p.points, tolerance=p.float_tolerance),
    ]


def _symmetry_suite(p: SuiteParams) -> list[CheckReport]:
    return [
        check_axis_symmetry(p.k, p.n_max, p.points, tolerance=p.float_tolerance),
        check_permutation_symmetry(
            p.k, p.n_max, p.points, permutations=p.permutations, tolerance=p.float_tolerance
        ),
        check_permutation_composition(
            p.k, p.n_max, p.points, permutations=p.permutations, tolerance=p.float_tolerance
        ),
    ]


def _q_decomposition_suite(p: SuiteParams) -> list[CheckReport]:
    return [
        check_q_decomposition(
            p.k,
            p.n_max,
            p.qs,
            p.points,
            weight=p.weight,
            tolerance=p.q_tolerance,
            exact_roots=p.exact_roots,
        )
    ]


def _q_symmetry_suite(p: SuiteParams) -> list[CheckReport]:
    return [
        check_q_symmetry(
            p.k,
            p.n_max,
            p.qs,
            p.points,
            permutations=p.permutations,
            tolerance=p.q_tolerance,
            exact_roots=p.exact_roots,
        )
    ]


def default_suites() -> SuiteRegistry:
    """The four bundled suites, thm1 to thm4."""
    registry = SuiteRegistry()
    registry.register(
        SuiteDefinition(
            name="thm1",
            description="decomposition into degree m and n-m factors, and the m=1 recurrence",
            run=_decomposition_suite,
        )
    )
    registry.register(
        SuiteDefinition(
            name="thm2",
            description="axis symmetry T_{j,1} / T_{j,n} and permutation symmetry",
            run=_symmetry_suite,
        )
    )
    registry.register(
        SuiteDefinition(
            name="thm3",
            description="q-decomposition at every q and exact root",
            run=_q_decomposition_suite,
        )
    )
    registry.register(
        SuiteDefinition(
            name="thm4",
            description="q-axis and q-permutation symmetry",
            run=_q_symmetry_suite,
        )
    )
    return registry
