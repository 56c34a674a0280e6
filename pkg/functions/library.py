"""The bundled test functions.

Labels:
    const   -- f = 1
    coord   -- f = x_1
    affine  -- f = 1 + sum_i i * x_i
    prod    -- f = x_1 * x_2
    exp     -- f = e^{|x|}
    cone    -- f = max_i |x_i - 1/(k+1)|, the max-norm distance to the barycenter
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from functions.registry import FunctionDefinition, FunctionRegistry
from simplex.errors import ArityMismatch
from simplex.operator import SampledFunction


def _factory(
    label: str, min_arity: int, make: Callable[[int], Callable[[Sequence[float]], float]]
) -> Callable[[int], SampledFunction]:
    def build(k: int) -> SampledFunction:
        if k < min_arity:
            raise ArityMismatch(f"function '{label}' needs k >= {min_arity}, got k = {k}")
        return SampledFunction(arity=k, evaluator=make(k), label=label)

    return build


def _const(k: int) -> Callable[[Sequence[float]], float]:
    return lambda x: 1.0


def _coord(k: int) -> Callable[[Sequence[float]], float]:
    return lambda x: x[0]


def _affine(k: int) -> Callable[[Sequence[float]], float]:
    return lambda x: 1.0 + math.fsum((i + 1) * c for i, c in enumerate(x))


def _prod(k: int) -> Callable[[Sequence[float]], float]:
    return lambda x: x[0] * x[1]


def _exp(k: int) -> Callable[[Sequence[float]], float]:
    return lambda x: math.exp(math.fsum(x))


def _cone(k: int) -> Callable[[Sequence[float]], float]:
    center = 1.0 / (k + 1)
    return lambda x: max(abs(c - center) for c in x)


_BUNDLED = (
    ("const", "constant 1", 1, _const),
    ("coord", "first coordinate x_1", 1, _coord),
    ("affine", "1 + sum_i i * x_i", 1, _affine),
    ("prod", "product x_1 * x_2", 2, _prod),
    ("exp", "exponential of the coordinate sum", 1, _exp),
    ("cone", "max-norm distance to the barycenter (non-smooth)", 1, _cone),
)


def default_registry() -> FunctionRegistry:
    """Registry with every bundled function, in a fixed order."""
    registry = FunctionRegistry()
    for name, description, min_arity, make in _BUNDLED:
        registry.register(
            FunctionDefinition(
                name=name,
                description=description,
                min_arity=min_arity,
                build=_factory(name, min_arity, make),
            )
        )
    return registry
