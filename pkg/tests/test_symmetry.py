from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

import identities.symmetry as symmetry
from identities.sampling import default_points, point_rng
from identities.symmetry import (
    Permutation,
    TransformSpec,
    all_permutations,
    check_axis_symmetry,
    check_permutation_composition,
    check_permutation_symmetry,
    permutations_for,
    permute_index,
    permute_point,
    sampled_permutations,
    transform_index,
    transform_point,
)
from simplex.basis import evaluate, ordinary
from simplex.errors import DegreeMismatch, DimensionMismatch, InvalidPermutation, OutOfSimplex
from simplex.multiindex import BasisId, MultiIndex, SimplexPoint
from tests.strategies import multi_indices, simplex_points

V = MultiIndex.of
F = Fraction


# -- axis transformation ----------------------------------------------------


def test_transform_point_examples():
    assert transform_point(TransformSpec(1, 1), SimplexPoint.of(F(1, 5), F(3, 10))) == (
        SimplexPoint.of(F(1, 2), F(3, 10))
    )
    assert transform_point(TransformSpec(2, 1), SimplexPoint.of(0, 0)) == SimplexPoint.of(0, 1)
    moved = transform_point(TransformSpec(1, 1), SimplexPoint.of(0.2, 0.3))
    assert moved[0] == pytest.approx(0.5)
    assert moved[1] == 0.3


def test_transform_point_requires_unit_scale():
    with pytest.raises(OutOfSimplex):
        transform_point(TransformSpec(1, 2), SimplexPoint.of(F(1, 4), F(1, 4)))


def test_transform_axis_validation():
    with pytest.raises(DimensionMismatch):
        TransformSpec(0, 1)
    with pytest.raises(DimensionMismatch):
        transform_point(TransformSpec(3, 1), SimplexPoint.of(F(1, 4), F(1, 4)))


def test_transform_index_examples():
    assert transform_index(TransformSpec(1, 3), V(1, 1)) == V(1, 1)
    assert transform_index(TransformSpec(1, 3), V(0, 2)) == V(1, 2)
    with pytest.raises(DegreeMismatch):
        transform_index(TransformSpec(1, 2), V(2, 1))


@settings(max_examples=50, deadline=None)
@given(simplex_points(3), multi_indices(3, 6))
def test_transforms_are_involutions(x, v):
    n = 6
    for j in (1, 2, 3):
        point_spec, index_spec = TransformSpec(j, 1), TransformSpec(j, n)
        assert transform_point(point_spec, transform_point(point_spec, x)) == x
        assert transform_index(index_spec, transform_index(index_spec, v)) == v


@pytest.mark.parametrize("k", [1, 2, 3])
def test_axis_symmetry_passes(k):
    report = check_axis_symmetry(k, 5, default_points(k))
    assert report.identity == "axis_symmetry"
    assert report.passed
    assert report.cases > 0


def test_axis_symmetry_univariate_reduction():
    # k = 1: B_{v,n}(1 - x) = B_{n-v,n}(x)
    x = SimplexPoint.of(F(2, 7))
    for n in range(6):
        for v in range(n + 1):
            moved = transform_point(TransformSpec(1, 1), x)
            assert evaluate(BasisId(V(v), n), moved) == ordinary(n - v, n, x[0])


def test_axis_symmetry_detects_off_by_one_index(monkeypatch):
    original = symmetry.transform_index

    def off_by_one(spec, v):
        if v.total() < spec.m:
            return original(TransformSpec(spec.j, spec.m - 1), v)
        return original(spec, v)

    monkeypatch.setattr(symmetry, "transform_index", off_by_one)
    report = check_axis_symmetry(2, 4, [SimplexPoint.of(F(1, 5), F(1, 3))])
    assert not report.passed
    record = report.to_records()[0]
    assert record["identity"] == "axis_symmetry"
    assert record["j"] in (1, 2)


# -- permutations -----------------------------------------------------------


def test_permutation_action():
    swap = Permutation((2, 1, 3))
    assert swap.apply((0.1, 0.2, 0.3)) == (0.2, 0.1, 0.3)
    assert permute_point(swap, SimplexPoint.of(0.1, 0.2, 0.3)) == SimplexPoint.of(0.2, 0.1, 0.3)
    assert permute_index(swap, V(1, 0, 2)) == V(0, 1, 2)


def test_permutation_group_operations():
    cycle = Permutation((2, 3, 1))
    assert cycle.inverse() == Permutation((3, 1, 2))
    assert cycle.compose(cycle.inverse()) == Permutation.identity(3)
    assert cycle.compose(cycle) == Permutation((3, 1, 2))
    assert str(cycle) == "(2,3,1)"
    with pytest.raises(DimensionMismatch):
        cycle.compose(Permutation.identity(2))


@pytest.mark.parametrize("image", [(1, 1), (0, 1), (1, 3), (2, 3), (1.5, 2), (2.0, 1), (True, 2)])
def test_invalid_permutation(image):
    with pytest.raises(InvalidPermutation):
        Permutation(image)


def test_swap_example():
    x = SimplexPoint.of(F(1, 5), F(1, 2))
    sigma = Permutation((2, 1))
    assert evaluate(BasisId(V(1, 2), 4), permute_point(sigma, x)) == evaluate(
        BasisId(V(2, 1), 4), x
    )


def test_permutation_sets():
    assert len(all_permutations(3)) == 6
    assert all_permutations(3)[0] == Permutation.identity(3)
    assert permutations_for(3) == all_permutations(3)

    sample = sampled_permutations(5, 4, point_rng(1, 5, "permutations"))
    assert len(sample) == 4
    assert sample[0] == Permutation.identity(5)
    assert permutations_for(5, 4, seed=1) == sample


@pytest.mark.parametrize("k", [1, 2, 3])
def test_permutation_symmetry_passes(k):
    report = check_permutation_symmetry(k, 5, default_points(k))
    assert report.identity == "permutation_symmetry"
    assert report.passed


def test_permutation_symmetry_sampled_for_larger_k():
    report = check_permutation_symmetry(4, 3, default_points(4)[:2])
    assert report.passed


def test_index_side_needs_the_inverse():
    cycle = Permutation((2, 3, 1))
    x = SimplexPoint.of(F(1, 7), F(2, 7), F(3, 7))
    assert evaluate(BasisId(V(1, 0, 0), 1), permute_point(cycle, x)) != evaluate(
        BasisId(permute_index(cycle, V(1, 0, 0)), 1), x
    )


@pytest.mark.parametrize("k", [2, 3])
def test_permutation_composition_passes(k):
    report = check_permutation_composition(k, 4, default_points(k)[:3])
    assert report.identity == "permutation_composition"
    assert report.passed
    assert report.cases > 0
