"""
Equation schemas for the axioms A1-A13.

Each schema is written once against an abstract set of operations. Element
checks evaluate it with semiring operations; identity checks evaluate the very
same schema with union, join and relational difference, which is what ties
identity In to axiom An.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Protocol, Sequence


class Operations(Protocol):
    """The five symbols an equation may mention."""

    zero: Any
    one: Any

    def add(self, a: Any, b: Any) -> Any: ...

    def mul(self, a: Any, b: Any) -> Any: ...

    def sub(self, a: Any, b: Any) -> Any: ...


class AxiomId(str, Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"
    A5 = "A5"
    A6 = "A6"
    A7 = "A7"
    A8 = "A8"
    A9 = "A9"
    A10 = "A10"
    A11 = "A11"
    A12 = "A12"
    A13 = "A13"

    @classmethod
    def parse(cls, text: str) -> "AxiomId":
        return cls(text.strip().upper())


@dataclass(frozen=True)
class Equation:
    """lhs(ops, *vars) = rhs(ops, *vars)."""

    name: str
    variables: tuple[str, ...]
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]
    text: str
    uses_difference: bool = False

    @property
    def arity(self) -> int:
        return len(self.variables)

    def evaluate(self, ops: Operations, values: Sequence[Any]) -> tuple[Any, Any]:
        return self.lhs(ops, *values), self.rhs(ops, *values)


AXIOMS: dict[AxiomId, Equation] = {
    AxiomId.A1: Equation(
        "A1", ("a", "b", "c"),
        lambda o, a, b, c: o.add(a, o.add(b, c)),
        lambda o, a, b, c: o.add(o.add(a, b), c),
        "a + (b + c) = (a + b) + c",
    ),
    AxiomId.A2: Equation(
        "A2", ("a",),
        lambda o, a: o.add(a, o.zero),
        lambda o, a: a,
        "a + 0 = a",
    ),
    AxiomId.A3: Equation(
        "A3", ("a", "b"),
        lambda o, a, b: o.add(a, b),
        lambda o, a, b: o.add(b, a),
        "a + b = b + a",
    ),
    AxiomId.A4: Equation(
        "A4", ("a", "b", "c"),
        lambda o, a, b, c: o.mul(a, o.mul(b, c)),
        lambda o, a, b, c: o.mul(o.mul(a, b), c),
        "a * (b * c) = (a * b) * c",
    ),
    AxiomId.A5: Equation(
        "A5", ("a",),
        lambda o, a: o.mul(a, o.one),
        lambda o, a: a,
        "a * 1 = a",
    ),
    AxiomId.A6: Equation(
        "A6", ("a", "b"),
        lambda o, a, b: o.mul(a, b),
        lambda o, a, b: o.mul(b, a),
        "a * b = b * a",
    ),
    AxiomId.A7: Equation(
        "A7", ("a", "b", "c"),
        lambda o, a, b, c: o.mul(a, o.add(b, c)),
        lambda o, a, b, c: o.add(o.mul(a, b), o.mul(a, c)),
        "a * (b + c) = a * b + a * c",
    ),
    AxiomId.A8: Equation(
        "A8", ("a",),
        lambda o, a: o.mul(a, o.zero),
        lambda o, a: o.zero,
        "a * 0 = 0",
    ),
    AxiomId.A9: Equation(
        "A9", ("a",),
        lambda o, a: o.sub(a, a),
        lambda o, a: o.zero,
        "a - a = 0",
        uses_difference=True,
    ),
    AxiomId.A10: Equation(
        "A10", ("a",),
        lambda o, a: o.sub(o.zero, a),
        lambda o, a: o.zero,
        "0 - a = 0",
        uses_difference=True,
    ),
    AxiomId.A11: Equation(
        "A11", ("a", "b"),
        lambda o, a, b: o.add(a, o.sub(b, a)),
        lambda o, a, b: o.add(b, o.sub(a, b)),
        "a + (b - a) = b + (a - b)",
        uses_difference=True,
    ),
    AxiomId.A12: Equation(
        "A12", ("a", "b", "c"),
        lambda o, a, b, c: o.sub(a, o.add(b, c)),
        lambda o, a, b, c: o.sub(o.sub(a, b), c),
        "a - (b + c) = (a - b) - c",
        uses_difference=True,
    ),
    AxiomId.A13: Equation(
        "A13", ("a", "b", "c"),
        lambda o, a, b, c: o.mul(a, o.sub(b, c)),
        lambda o, a, b, c: o.sub(o.mul(a, b), o.mul(a, c)),
        "a * (b - c) = a * b - a * c",
        uses_difference=True,
    ),
}

SEMIRING_AXIOMS: tuple[AxiomId, ...] = tuple(AxiomId(f"A{n}") for n in range(1, 9))
MONUS_AXIOMS: tuple[AxiomId, ...] = tuple(AxiomId(f"A{n}") for n in range(9, 13))
ALL_AXIOMS: tuple[AxiomId, ...] = tuple(AxiomId)
