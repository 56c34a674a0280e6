from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import identities.decomposition as decomposition
from identities.decomposition import (
    WEIGHTS,
    DecompositionCase,
    check_decomposition,
    check_recurrence,
    decomposition_cases,
    decomposition_lhs,
    recurrence_step,
    resolve_weight,
    vandermonde_sum,
)
from identities.sampling import default_points, point_rng, sample_points
from simplex.basis import evaluate
from simplex.errors import DegreeMismatch, HypothesisViolated, UnknownWeight
from simplex.multiindex import BasisId, MultiIndex, SimplexPoint, enumerate_indices, multinomial
from tests.strategies import multi_indices, simplex_points

V = MultiIndex.of
F = Fraction


def case(v, n, m, x):
    return DecompositionCase(k=v.k, n=n, m=m, v=v, x=SimplexPoint(x))


def test_lhs_example_two_dimensions():
    assert decomposition_lhs(case(V(1, 1), 2, 1, (F(1, 4), F(1, 4)))) == F(1, 8)


def test_lhs_m_zero_is_the_basis_itself():
    x = (F(1, 5), F(2, 7))
    expected = evaluate(BasisId(V(2, 1), 4), SimplexPoint(x))
    assert decomposition_lhs(case(V(2, 1), 4, 0, x)) == expected


def test_lhs_univariate_reduction():
    assert decomposition_lhs(case(V(2), 3, 1, (F(1, 2),))) == F(3, 8)
    assert decomposition_lhs(case(V(2), 3, 2, (F(1, 2),))) == F(3, 8)


def test_printed_weight_differs_from_basis_once_m_reaches_two():
    c = case(V(2), 3, 2, (F(1, 2),))
    assert decomposition_lhs(c, weight="printed") == F(1, 4)
    assert decomposition_lhs(c, weight="printed") != evaluate(BasisId(V(2), 3), c.x)


def test_printed_weight_agrees_for_m_at_most_one():
    x = (F(1, 6), F(1, 3))
    for v in enumerate_indices(2, 4):
        for m in range(min(v.total(), 1) + 1):
            c = case(v, 4, m, x)
            assert decomposition_lhs(c, weight="printed") == decomposition_lhs(c)


def test_case_hypothesis_is_enforced():
    with pytest.raises(HypothesisViolated):
        case(V(1, 0), 3, 2, (F(1, 4), F(1, 4)))
    with pytest.raises(DegreeMismatch):
        case(V(2, 2), 3, 1, (F(1, 4), F(1, 4)))


def test_unknown_weight():
    with pytest.raises(UnknownWeight):
        resolve_weight("binomial")
    assert set(WEIGHTS) == {"convolution", "printed", "perturbed"}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_vandermonde_restatement(k):
    for n in range(7):
        for v in enumerate_indices(k, n):
            for m in range(n + 1):
                assert vandermonde_sum(n, m, v) == multinomial(n, v)


def test_decomposition_cases_cover_the_hypothesis():
    cases = list(decomposition_cases(2, 2))
    assert (1, V(0, 0), 0) in cases
    assert (2, V(1, 1), 2) in cases
    assert all(m <= min(v.total(), n) for n, v, m in cases)


@settings(max_examples=40, deadline=None)
@given(simplex_points(2), multi_indices(2, 6), st.integers(0, 6))
def test_convolution_reproduces_basis(x, v, m):
    n = max(v.total(), m)
    m = min(m, v.total())
    assert decomposition_lhs(DecompositionCase(2, n, m, v, x)) == evaluate(BasisId(v, n), x)


@pytest.mark.parametrize(("k", "n_max"), [(1, 6), (2, 6), (3, 6)])
def test_check_decomposition_passes(k, n_max):
    report = check_decomposition(k, n_max, default_points(k))
    assert report.identity == "decomposition"
    assert report.passed
    assert report.to_records() == []
    assert report.cases > 0


def test_sample_points_include_boundary():
    points = sample_points(3, 5, point_rng(0x5EED, 3))
    assert points[0].total() == 1
    assert points[1][0] == 0


def test_perturbed_weight_is_detected():
    report = check_decomposition(2, 5, default_points(2), weight="perturbed")
    assert not report.passed
    flavors = {c.flavor for c in report.counterexamples}
    assert flavors == {"exact", "float"}
    record = report.to_records()[0]
    assert record["identity"] == "decomposition"
    assert set(record) >= {"k", "n", "m", "v", "x", "lhs", "rhs"}
    assert all(set(c) == {"num", "den"} for c in record["x"])


def test_printed_weight_fails_only_for_m_at_least_two():
    points = [SimplexPoint.of(F(1, 2)), SimplexPoint.of(F(1, 3))]
    report = check_decomposition(1, 4, points, weight="printed", float_pass=False)
    assert not report.passed
    assert all(c.m >= 2 for c in report.counterexamples)
    failing = {(c.n, tuple(c.v), c.m) for c in report.counterexamples}
    assert (3, (2,), 2) in failing


@pytest.mark.parametrize(
    ("v", "n", "x", "expected"),
    [
        (V(0, 0), 3, (F(1, 4), F(1, 4)), F(1, 8)),
        (V(1, 0), 1, (F(1, 3), F(1, 3)), F(1, 3)),
        (V(1, 1), 2, (F(1, 4), F(1, 2)), F(1, 4)),
    ],
)
def test_recurrence_examples(v, n, x, expected):
    assert recurrence_step(v, n, SimplexPoint(x)) == expected


def test_recurrence_rejects_degree_zero():
    with pytest.raises(DegreeMismatch):
        recurrence_step(V(0, 0), 0, SimplexPoint.of(F(1, 4), F(1, 4)))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_check_recurrence_passes(k):
    report = check_recurrence(k, 6, default_points(k))
    assert report.passed
    assert report.identity == "recurrence"


@settings(max_examples=30, deadline=None)
@given(simplex_points(3), multi_indices(3, 5))
def test_recurrence_equals_m_one_decomposition(x, v):
    n = max(v.total(), 1)
    if v.total() >= 1:
        assert recurrence_step(v, n, x) == decomposition_lhs(DecompositionCase(3, n, 1, v, x))
    assert recurrence_step(v, n, x) == evaluate(BasisId(v, n), x)


def test_decomposition_compares_against_direct_evaluation(monkeypatch):
    # the convolution reads eval_all tables; a skewed evaluate must be noticed
    monkeypatch.setattr(decomposition, "evaluate", lambda basis_id, x: 2 * evaluate(basis_id, x))
    report = check_decomposition(2, 2, [SimplexPoint.of(F(1, 5), F(1, 3))])
    assert not report.passed
    assert {r["identity"] for r in report.to_records()} == {"decomposition"}
