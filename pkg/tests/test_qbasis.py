from __future__ import annotations

import math
from fractions import Fraction

import pytest

from identities.sampling import point_rng, sample_points
from qbernstein.basis import (
    QBasisId,
    q_basis_eval,
    q_basis_eval_exact,
    q_eval_all,
    q_eval_all_exact,
    q_limit_check,
)
from qbernstein.brackets import ExactQ, QParam
from simplex.basis import eval_all, evaluate
from simplex.errors import DegreeMismatch, DimensionMismatch, InvalidQ
from simplex.multiindex import BasisId, MultiIndex, SimplexPoint, enumerate_indices

V = MultiIndex.of
F = Fraction


def test_univariate_example():
    value = q_basis_eval(QBasisId(V(1), 1, 0.5), SimplexPoint.of(0.5))
    assert value == pytest.approx(2 - math.sqrt(2), abs=1e-6)
    assert value == pytest.approx(0.585786, abs=1e-6)


def test_degree_zero_is_one():
    assert q_basis_eval(QBasisId(V(0, 0), 0, 0.3), SimplexPoint.of(0.2, 0.5)) == 1


def test_qbasis_validation():
    with pytest.raises(DegreeMismatch):
        QBasisId(V(2, 1), 2, 0.5)
    with pytest.raises(InvalidQ):
        QBasisId(V(1, 0), 2, 1.5)
    with pytest.raises(DimensionMismatch):
        q_basis_eval(QBasisId(V(1, 0), 2, 0.5), SimplexPoint.of(0.5))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_q_one_is_the_classical_basis(k):
    for x in sample_points(k, 5, point_rng(3, k, "q1")):
        for n in range(5):
            assert q_eval_all(k, n, x, 1.0) == eval_all(k, n, x)
            for v in enumerate_indices(k, n):
                assert q_basis_eval(QBasisId(v, n, QParam(1.0)), x) == evaluate(BasisId(v, n), x)


def test_eval_all_matches_single_evaluation():
    x = SimplexPoint.of(F(1, 8), F(3, 8))
    values = q_eval_all(2, 3, x, 0.4)
    assert list(values) == enumerate_indices(2, 3)
    for v, value in values.items():
        assert value == q_basis_eval(QBasisId(v, 3, 0.4), x)


def test_q_limit_gaps_shrink():
    basis_id = BasisId(V(1, 1), 3)
    x = SimplexPoint.of(F(1, 4), F(1, 3))
    gaps = q_limit_check(basis_id, x, [0.9, 0.99, 0.999, 1 - 1e-8])
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] <= 1e-6


def test_q_limit_needs_increasing_sequence():
    with pytest.raises(InvalidQ):
        q_limit_check(BasisId(V(1), 1), SimplexPoint.of(0.5), [0.9, 0.5])


@pytest.mark.parametrize("root", [F(1, 2), F(2, 3)])
def test_exact_qbasis_matches_float(root):
    x = SimplexPoint.of(F(1, 6), F(1, 3))
    q = ExactQ.for_point(root, x)
    exact = q_eval_all_exact(2, 4, x, q)
    floats = q_eval_all(2, 4, x, float(q.q))
    for v in enumerate_indices(2, 4):
        assert isinstance(exact[v], Fraction)
        assert math.isclose(float(exact[v]), floats[v], rel_tol=1e-11)
        assert exact[v] == q_basis_eval_exact(BasisId(v, 4), x, q)


def test_exact_qbasis_needs_exact_point():
    with pytest.raises(InvalidQ):
        q_basis_eval_exact(BasisId(V(1), 1), SimplexPoint.of(0.5), ExactQ(F(1, 2), 2))


def test_q_partition_of_unity_fails_away_from_one():
    # the q-basis is not a partition of unity for q < 1
    x = SimplexPoint.of(F(1, 3), F(1, 3))
    total = sum(q_eval_all(2, 3, x, 0.5).values())
    assert not math.isclose(total, 1.0, rel_tol=1e-6)


def test_q_limit_at_the_origin_is_zero():
    gaps = q_limit_check(BasisId(V(0, 0), 3), SimplexPoint.origin(2), [0.5, 0.9, 0.99])
    assert gaps == [0.0, 0.0, 0.0]


def test_q_limit_close_to_one():
    basis_id = BasisId(V(1, 1), 3)
    x = SimplexPoint.of(F(1, 4), F(1, 4))
    coarse, fine, last = q_limit_check(basis_id, x, [0.9, 0.99, 1 - 1e-8])
    assert fine < coarse
    assert last <= 1e-6
