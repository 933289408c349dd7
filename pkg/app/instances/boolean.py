"""
Boolean-expression annotations over a declared variable list.

PosBool[X] elements are monotone DNFs kept as antichains of clauses; Bool[X]
elements are truth tables, i.e. the set of satisfying assignments encoded as
bitmasks over the variable list. Both become finite carriers when small
enough to enumerate.
"""

import itertools
import random
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from ..core.algebra import CountableCarrier, FiniteCarrier, SemiringInstance
from ..utils.constants import FINITE_CARRIER_LIMIT
from .formula import Clauses, assignments, evaluate, minimize_clauses, monotone_clauses, parse_formula


# --- PosBool[X] ---

@dataclass(frozen=True)
class MonotoneDNF:
    """Antichain of clauses; no clause contains another. {} is 0 and {{}} is 1."""

    clauses: Clauses

    @classmethod
    def of(cls, clauses) -> "MonotoneDNF":
        """Minimal antichain of `clauses`, which may already be a MonotoneDNF."""
        if isinstance(clauses, MonotoneDNF):
            clauses = clauses.clauses
        return cls(minimize_clauses(frozenset(c) for c in clauses))

    def holds_under(self, true_vars: FrozenSet[str]) -> bool:
        return any(clause <= true_vars for clause in self.clauses)


def _posbool_monus(variables: Sequence[str]):
    subsets = [frozenset(c) for size in range(len(variables) + 1)
               for c in itertools.combinations(variables, size)]

    def monus(a: MonotoneDNF, b: MonotoneDNF) -> MonotoneDNF:
        """Least monotone function above a and not b: its minimal true points become the clauses."""
        return MonotoneDNF.of(w for w in subsets if a.holds_under(w) and not b.holds_under(w))

    return monus


def _enumerate_antichains(variables: Sequence[str]) -> List[MonotoneDNF]:
    nonempty = [frozenset(c) for size in range(1, len(variables) + 1)
                for c in itertools.combinations(variables, size)]
    found = []
    for size in range(len(nonempty) + 1):
        for family in itertools.combinations(nonempty, size):
            if all(not (a < b or b < a) for a, b in itertools.combinations(family, 2)):
                found.append(MonotoneDNF(frozenset(family)))
    found.append(MonotoneDNF(frozenset({frozenset()})))
    return found


def posbool_carrier_size(variables: Sequence[str]) -> int:
    """Brute-force antichain count plus the constant 1; only for small lists."""
    return len(_enumerate_antichains(variables))


def make_posbool(variables: Sequence[str]) -> SemiringInstance:
    variables = tuple(variables)
    position = {v: i for i, v in enumerate(variables)}
    subsets = [frozenset(c) for size in range(len(variables) + 1)
               for c in itertools.combinations(variables, size)]

    def clause_key(clause: FrozenSet[str]):
        return len(clause), sorted(position[v] for v in clause)

    def render(value: MonotoneDNF) -> str:
        if not value.clauses:
            return "0"
        if value.clauses == frozenset({frozenset()}):
            return "1"
        ordered = sorted(value.clauses, key=clause_key)
        return " | ".join("&".join(sorted(c, key=position.__getitem__)) for c in ordered)

    def parse(text: str) -> MonotoneDNF:
        return MonotoneDNF(monotone_clauses(parse_formula(text, "posbool", variables, allow_negation=False)))

    def truth_count(value: MonotoneDNF) -> int:
        return sum(1 for w in subsets if value.holds_under(w))

    def add(a: MonotoneDNF, b: MonotoneDNF) -> MonotoneDNF:
        return MonotoneDNF(minimize_clauses(a.clauses | b.clauses))

    def mul(a: MonotoneDNF, b: MonotoneDNF) -> MonotoneDNF:
        return MonotoneDNF(minimize_clauses(x | y for x in a.clauses for y in b.clauses))

    def sample(rng: random.Random, size: int) -> MonotoneDNF:
        if rng.random() < 0.1:
            return MonotoneDNF(frozenset({frozenset()}))
        count = rng.randint(0, min(max(size, 1), 3))
        clauses = []
        for _ in range(count):
            width = rng.randint(1, min(len(variables), 2))
            clauses.append(frozenset(rng.sample(variables, width)))
        return MonotoneDNF.of(clauses)

    def simplicity(value: MonotoneDNF):
        return len(value.clauses), sum(len(c) for c in value.clauses)

    def simpler(value: MonotoneDNF) -> Iterable[MonotoneDNF]:
        candidates = [MonotoneDNF(frozenset())]
        for clause in sorted(value.clauses, key=clause_key):
            candidates.append(MonotoneDNF(value.clauses - {clause}))
        return candidates

    finite = len(variables) <= 3 and posbool_carrier_size(variables) <= FINITE_CARRIER_LIMIT
    carrier = (FiniteCarrier(tuple(sorted(_enumerate_antichains(variables),
                                          key=lambda e: (truth_count(e), render(e)))))
               if finite else CountableCarrier(sample))

    hints = ()
    if {"x", "y", "z"} <= set(variables):
        hints = (("x | y | z", "x | y"),)

    return SemiringInstance(
        name="posbool",
        display="PosBool[X]",
        params=variables,
        carrier=carrier,
        add=add,
        mul=mul,
        zero=MonotoneDNF(frozenset()),
        one=MonotoneDNF(frozenset({frozenset()})),
        parse=parse,
        render=render,
        canonicalize=MonotoneDNF.of,
        monus=_posbool_monus(variables),
        leq=lambda a, b: add(a, b) == b,
        lattice=True,
        simplicity=None if finite else simplicity,
        simpler=None if finite else simpler,
        witness_hints=hints,
    )


# --- Bool[X] ---

@dataclass(frozen=True)
class TruthTable:
    """Satisfying assignments as bitmasks; bit i is the i-th declared variable."""

    models: FrozenSet[int]


def make_boolexpr(variables: Sequence[str]) -> SemiringInstance:
    variables = tuple(variables)
    width = len(variables)
    everything = frozenset(range(1 << width))

    def literal(mask: int, index: int) -> str:
        name = variables[index]
        return name if mask >> index & 1 else f"!{name}"

    def render(value: TruthTable) -> str:
        if not value.models:
            return "0"
        if value.models == everything:
            return "1"
        return " | ".join("&".join(literal(mask, i) for i in range(width))
                          for mask in sorted(value.models))

    def parse(text: str) -> TruthTable:
        formula = parse_formula(text, "boolexpr", variables, allow_negation=True)
        return TruthTable(frozenset(mask for mask, lookup in assignments(variables) if evaluate(formula, lookup)))

    def sample(rng: random.Random, size: int) -> TruthTable:
        return TruthTable(frozenset(m for m in everything if rng.random() < 0.5))

    def simpler(value: TruthTable) -> Iterable[TruthTable]:
        return [TruthTable(frozenset())] + [TruthTable(value.models - {m}) for m in sorted(value.models)]

    def key(value: TruthTable):
        return len(value.models), sorted(value.models)

    finite = (1 << len(everything)) <= FINITE_CARRIER_LIMIT
    if finite:
        tables = [TruthTable(frozenset(c)) for size in range(len(everything) + 1)
                  for c in itertools.combinations(sorted(everything), size)]
        carrier = FiniteCarrier(tuple(sorted(tables, key=key)))
    else:
        carrier = CountableCarrier(sample)

    return SemiringInstance(
        name="boolexpr",
        display="Bool[X]",
        params=variables,
        carrier=carrier,
        add=lambda a, b: TruthTable(a.models | b.models),
        mul=lambda a, b: TruthTable(a.models & b.models),
        zero=TruthTable(frozenset()),
        one=TruthTable(everything),
        parse=parse,
        render=render,
        canonicalize=lambda models: TruthTable(
            frozenset(models.models if isinstance(models, TruthTable) else models) & everything),
        monus=lambda a, b: TruthTable(a.models - b.models),
        leq=lambda a, b: a.models <= b.models,
        lattice=True,
        simplicity=None if finite else (lambda v: (len(v.models),)),
        simpler=None if finite else simpler,
    )
