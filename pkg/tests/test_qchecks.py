from __future__ import annotations

from fractions import Fraction

import pytest

from identities.decomposition import check_decomposition
from identities.sampling import default_points
from identities.symmetry import Permutation, TransformSpec
from qbernstein import checks
from qbernstein.brackets import ExactQ, QParam
from qbernstein.checks import (
    Deformation,
    check_q_decomposition,
    check_q_symmetry,
    deformations,
)
from simplex.multiindex import SimplexPoint

F = Fraction


@pytest.mark.parametrize("k", [1, 2, 3])
def test_q_decomposition_passes(k):
    report = check_q_decomposition(k, 5, [0.25, 0.5, 0.75], default_points(k))
    assert report.identity == "q_decomposition"
    assert report.passed
    assert report.cases > 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_q_symmetry_passes(k):
    report = check_q_symmetry(k, 5, [0.25, 0.5, 0.75], default_points(k))
    assert report.identity == "q_symmetry"
    assert report.passed


def test_q_symmetry_with_sampled_permutations():
    sigmas = [Permutation.identity(4), Permutation((4, 1, 3, 2))]
    report = check_q_symmetry(4, 3, [0.5], default_points(4)[:2], permutations=sigmas)
    assert report.passed


def test_perturbed_weight_is_detected_for_every_q():
    points = [SimplexPoint.of(F(1, 4), F(1, 3))]
    report = check_q_decomposition(2, 4, [0.5], points, weight="perturbed")
    assert not report.passed
    labels = [r["q"] for r in report.to_records()]
    assert 0.5 in labels
    assert {"num": 1, "den": 2**12} in labels
    record = report.to_records()[0]
    assert record["identity"] == "q_decomposition"
    assert "m" in record


def test_q_one_coincides_with_classical_check():
    points = default_points(2)
    q_report = check_q_decomposition(2, 4, [1.0], points, exact_roots=[])
    classical = check_decomposition(2, 4, points, float_pass=False)
    assert q_report.passed and classical.passed
    assert q_report.cases == classical.cases


def test_q_one_failures_match_classical_failures():
    points = [SimplexPoint.of(F(1, 5), F(2, 5))]
    q_report = check_q_decomposition(2, 3, [1.0], points, weight="perturbed", exact_roots=[])
    classical = check_decomposition(2, 3, points, weight="perturbed", float_pass=False)
    assert len(q_report.counterexamples) == len(classical.counterexamples)
    assert all(c.flavor == "exact" for c in q_report.counterexamples)
    assert all(r["q"] == {"num": 1, "den": 1} for r in q_report.to_records())


def test_deformations_order():
    points = [SimplexPoint.of(F(1, 2)), SimplexPoint.of(0.25)]
    passes = list(deformations(points, [0.5], [F(1, 2)]))
    # float q at both points, then the exact root at the exact point only
    assert len(passes) == 3
    assert passes[0][1].label == 0.5
    assert passes[2][0] == SimplexPoint.of(F(1, 2))
    assert passes[2][1].label == F(1, 4)


def test_deformation_labels():
    assert Deformation.floating(QParam(1.0)).label == F(1)
    assert Deformation.exact(ExactQ(F(2, 3), 2)).label == F(4, 9)


def test_symmetry_case_count():
    points = [SimplexPoint.of(F(1, 4), F(1, 2))]
    report = check_q_symmetry(2, 2, [0.5], points, exact_roots=[])
    assert report.passed
    # two axes and two permutations, each over the 1 + 3 + 6 indices of degree <= 2
    assert report.cases == 4 * 10


def test_symmetry_records_are_tagged(monkeypatch):
    original = checks.transform_index

    def off_by_one(spec, v):
        if v.total() < spec.m:
            return original(TransformSpec(spec.j, spec.m - 1), v)
        return original(spec, v)

    monkeypatch.setattr(checks, "transform_index", off_by_one)
    points = [SimplexPoint.of(F(1, 4), F(1, 3))]
    report = check_q_symmetry(2, 3, [0.5], points)
    assert not report.passed
    tags = {r["identity"] for r in report.to_records()}
    assert tags == {"q_axis_symmetry"}
    assert all("j" in r and "sigma" not in r for r in report.to_records())
