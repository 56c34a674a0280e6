from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from functions.library import default_registry
from simplex.errors import (
    ArityMismatch,
    DegreeMismatch,
    EmptyDegrees,
    EmptyGrid,
    InvalidDegrees,
    InvalidGridStep,
)
from simplex.multiindex import SimplexPoint
from simplex.operator import (
    SampledFunction,
    apply,
    convergence_table,
    evaluation_grid,
    node_values,
    sup_error,
    tail_bound,
    tail_mass,
)
from tests.strategies import simplex_points

F = Fraction
REGISTRY = default_registry()


def test_constant_reproduction():
    const = REGISTRY.build("const", 2)
    for n in (1, 3, 17, 64):
        assert apply(const, n, SimplexPoint.of(0.1, 0.6)) == pytest.approx(1.0, abs=1e-13)


def test_linear_reproduction_example():
    coord = REGISTRY.build("coord", 2)
    assert apply(coord, 4, SimplexPoint.of(0.3, 0.2)) == pytest.approx(0.3, abs=1e-13)


def test_square_in_one_dimension():
    square = SampledFunction(arity=1, evaluator=lambda x: x[0] ** 2, label="square")
    assert apply(square, 2, SimplexPoint.of(F(1, 2))) == pytest.approx(3 / 8, abs=1e-15)


def test_product_has_exact_bias():
    prod = REGISTRY.build("prod", 2)
    x = SimplexPoint.of(0.25, 0.5)
    for n in (2, 5, 10):
        assert apply(prod, n, x) == pytest.approx((1 - 1 / n) * 0.125, abs=1e-14)


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        apply(REGISTRY.build("coord", 3), 2, SimplexPoint.of(0.1, 0.2))


def test_node_values_are_sampled_at_lattice_nodes():
    coord = REGISTRY.build("coord", 2)
    assert list(node_values(coord, 2)) == [0.0, 0.0, 0.0, 0.5, 0.5, 1.0]
    with pytest.raises(DegreeMismatch):
        node_values(coord, 0)


def test_sup_error_reproduction():
    grid = evaluation_grid(2, F(1, 20))
    assert sup_error(REGISTRY.build("const", 2), 7, grid) <= 1e-13
    for n in (1, 10, 50):
        assert sup_error(REGISTRY.build("affine", 2), n, grid) <= 1e-10
        assert sup_error(REGISTRY.build("coord", 2), n, grid) <= 1e-10


def test_sup_error_empty_grid():
    with pytest.raises(EmptyGrid):
        sup_error(REGISTRY.build("const", 2), 3, [])


def test_evaluation_grid():
    grid = evaluation_grid(2, F(1, 20))
    assert len(grid) == 231
    assert all(not p.exact for p in grid)
    with pytest.raises(InvalidGridStep):
        evaluation_grid(2, F(2, 7))
    with pytest.raises(InvalidGridStep):
        evaluation_grid(2, F(0))


def test_convergence_table_rows():
    rows = convergence_table(REGISTRY.build("const", 2), [1, 2, 4], F(1, 20))
    assert [r.n for r in rows] == [1, 2, 4]
    assert all(r.sup_error <= 1e-13 for r in rows)
    assert all(r.grid_size == 231 and r.grid_step == F(1, 20) for r in rows)


def test_convergence_table_degree_validation():
    const = REGISTRY.build("const", 2)
    with pytest.raises(EmptyDegrees):
        convergence_table(const, [], F(1, 20))
    with pytest.raises(InvalidDegrees):
        convergence_table(const, [4, 2], F(1, 20))
    with pytest.raises(InvalidDegrees):
        convergence_table(const, [0, 2], F(1, 20))


@pytest.mark.parametrize("name", ["prod", "exp", "cone"])
def test_convergence_trend(name):
    rows = convergence_table(REGISTRY.build(name, 2), [4, 8, 16, 32], F(1, 20))
    errors = [r.sup_error for r in rows]
    assert all(b <= a for a, b in zip(errors, errors[1:]))
    assert errors[-1] <= 0.5 * errors[0]


def test_product_error_strictly_decreases():
    rows = convergence_table(REGISTRY.build("prod", 2), [4, 8, 16, 32], F(1, 20))
    errors = [r.sup_error for r in rows]
    assert all(b < a for a, b in zip(errors, errors[1:]))


@settings(max_examples=30, deadline=None)
@given(simplex_points(2), st.integers(1, 12))
def test_operator_is_bounded_by_node_values(x, n):
    cone = REGISTRY.build("cone", 2)
    nodes = node_values(cone, n)
    value = apply(cone, n, x)
    assert nodes.min() - 1e-12 <= value <= nodes.max() + 1e-12
    assert value >= 0


@pytest.mark.parametrize("delta", [0.1, 0.25, 0.4])
@pytest.mark.parametrize("n", [5, 20, 40])
def test_tail_mass_bound(n, delta):
    for x in (SimplexPoint.of(F(1, 3), F(1, 3)), SimplexPoint.of(F(1, 10), F(7, 10))):
        assert 0.0 <= tail_mass(n, x, delta) <= tail_bound(2, n, delta) + 1e-12
