"""Function registry: bundled test functions for the Bernstein operator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from simplex.errors import UnknownFunction
from simplex.operator import SampledFunction


@dataclass
class FunctionDefinition:
    """Description of a single test function, built per dimension k."""

    name: str
    description: str
    min_arity: int
    build: Callable[[int], SampledFunction]


class FunctionRegistry:
    """Holds all registered test functions and builds them on demand."""

    def __init__(self) -> None:
        self._functions: dict[str, FunctionDefinition] = {}

    def register(self, definition: FunctionDefinition) -> None:
        """Register a new function."""
        self._functions[definition.name] = definition

    def get(self, name: str) -> FunctionDefinition | None:
        """Look up a function by label."""
        return self._functions.get(name)

    def names(self) -> list[str]:
        return list(self._functions)

    def build(self, name: str, k: int) -> SampledFunction:
        """Instantiate the function ``name`` on the k-simplex."""
        definition = self.get(name)
        if definition is None:
            raise UnknownFunction(
                f"unknown function '{name}'; available: {', '.join(self.names())}"
            )
        return definition.build(k)

    def to_description(self) -> str:
        """One line per function, for the ``table`` help epilog."""
        return "\n".join(
            f"- {d.name}: {d.description} (k >= {d.min_arity})" for d in self._functions.values()
        )
