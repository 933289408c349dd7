"""
Relational identities I1-I13 plus two distribution laws.

In is axiom An's equation schema evaluated with relational operations:
union for +, natural join for *, relational difference for -, the empty
relation for 0 and the unit relation for 1.
"""

from enum import Enum
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from ..core.algebra import (
    CheckReport, DiffSemantics, SemiringInstance, VerdictKind, Witness, difference_operator, log_verdict,
)
from ..core.equations import AXIOMS, AxiomId, Equation
from ..core.krel import KRelation, op_diff, op_join, op_project, op_select, op_union
from ..core.query import ConstEq, Predicate
from ..core.relation_io import render_relation_inline
from ..utils.error_handler import UnsupportedSemanticsError
from .generators import RelationGenerator

RELATION_VARIABLES = {"a": "R", "b": "S", "c": "T"}
LIFTED_SCHEMA = ("a",)
LIFTED_ROW = (0,)


class IdentityId(str, Enum):
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    I5 = "I5"
    I6 = "I6"
    I7 = "I7"
    I8 = "I8"
    I9 = "I9"
    I10 = "I10"
    I11 = "I11"
    I12 = "I12"
    I13 = "I13"
    EXT1 = "EXT1"
    EXT2 = "EXT2"

    @classmethod
    def parse(cls, text: str) -> "IdentityId":
        return cls(text.strip().upper())

    @property
    def axiom(self) -> Optional[AxiomId]:
        """The paired axiom, for I1-I13."""
        return AxiomId("A" + self.value[1:]) if self.value.startswith("I") else None


class RelationOps:
    """Equation symbols bound to relational operators over one schema."""

    def __init__(self, inst: SemiringInstance, schema: Sequence[str], sem: Optional[DiffSemantics]):
        self.inst = inst
        self.schema = tuple(schema)
        self.sem = sem
        self.zero = KRelation.empty(inst, self.schema)
        self.one = KRelation.unit(inst)
        self.predicate = Predicate((ConstEq(self.schema[0], 0),))
        self.projection = self.schema[:1]

    def add(self, r1: KRelation, r2: KRelation) -> KRelation:
        return op_union(r1, r2)

    def mul(self, r1: KRelation, r2: KRelation) -> KRelation:
        return op_join(r1, r2)

    def sub(self, r1: KRelation, r2: KRelation) -> KRelation:
        return op_diff(self.sem, r1, r2)

    def select(self, r: KRelation) -> KRelation:
        return op_select(self.predicate, r)

    def project(self, r: KRelation) -> KRelation:
        return op_project(self.projection, r)


def _relational(eq: Equation) -> Equation:
    return Equation(
        name=eq.name.replace("A", "I", 1),
        variables=tuple(RELATION_VARIABLES[v] for v in eq.variables),
        lhs=eq.lhs,
        rhs=eq.rhs,
        text=eq.text.replace("+", "UNION").replace("*", "JOIN"),
        uses_difference=eq.uses_difference,
    )


IDENTITIES: Dict[IdentityId, Equation] = {
    IdentityId(f"I{n}"): _relational(AXIOMS[AxiomId(f"A{n}")]) for n in range(1, 14)
}
IDENTITIES[IdentityId.EXT1] = Equation(
    "EXT1", ("R", "S"),
    lambda o, r, s: o.select(o.sub(r, s)),
    lambda o, r, s: o.sub(o.select(r), o.select(s)),
    "SELECT[a=0] (R - S) = SELECT[a=0] R - SELECT[a=0] S",
    uses_difference=True,
)
IDENTITIES[IdentityId.EXT2] = Equation(
    "EXT2", ("R", "S"),
    lambda o, r, s: o.project(o.add(r, s)),
    lambda o, r, s: o.add(o.project(r), o.project(s)),
    "PROJECT[a] (R UNION S) = PROJECT[a] R UNION PROJECT[a] S",
)


def identity_sides(inst: SemiringInstance, identity: IdentityId, sem: DiffSemantics,
                   relations: Sequence[KRelation]) -> Tuple[KRelation, KRelation]:
    eq = IDENTITIES[identity]
    schema = relations[0].schema if relations else LIFTED_SCHEMA
    return eq.evaluate(RelationOps(inst, schema, sem), relations)


def relation_witness(names: Sequence[str], relations: Sequence[KRelation],
                     lhs: KRelation, rhs: KRelation) -> Witness:
    return Witness(
        bindings=tuple(zip(names, relations)),
        lhs=lhs,
        rhs=rhs,
        rendered_bindings=tuple((n, render_relation_inline(r)) for n, r in zip(names, relations)),
        rendered_lhs=render_relation_inline(lhs),
        rendered_rhs=render_relation_inline(rhs),
    )


def lift_axiom_witness(inst: SemiringInstance, axiom: Union[AxiomId, str],
                       witness: Witness) -> Dict[str, KRelation]:
    """One relation per axiom variable, each holding a single shared tuple annotated by that variable's value."""
    axiom = AxiomId.parse(axiom) if isinstance(axiom, str) else axiom
    eq = AXIOMS[axiom]
    return {
        RELATION_VARIABLES[name]: KRelation(inst, LIFTED_SCHEMA, [(LIFTED_ROW, witness.value(name))])
        for name in eq.variables
    }


def check_identity(inst: SemiringInstance, identity: Union[IdentityId, str],
                   sem: DiffSemantics, gen: RelationGenerator, trials: int,
                   seed_case: Optional[Mapping[str, KRelation]] = None,
                   shrink: bool = True) -> CheckReport:
    """
    Evaluates both sides of the identity on `trials` generated assignments.

    A `seed_case` (relation name -> relation) is evaluated before the random
    trials; lifted axiom witnesses enter here.
    """
    from .shrinking import shrink_relations

    identity = IdentityId.parse(identity) if isinstance(identity, str) else identity
    sem = DiffSemantics.parse(sem)
    eq = IDENTITIES[identity]
    semantics = sem.value if eq.uses_difference else None
    base = dict(subject=identity.value, instance=inst.label, strategy=gen.label, semantics=semantics)
    if eq.uses_difference:
        try:
            difference_operator(inst, sem)
        except UnsupportedSemanticsError as e:
            return CheckReport(verdict=VerdictKind.INAPPLICABLE, reason=e.message, **base)

    def failing(relations: Tuple[KRelation, ...]) -> Optional[Tuple[KRelation, KRelation]]:
        lhs, rhs = identity_sides(inst, identity, sem, relations)
        return None if lhs == rhs else (lhs, rhs)

    cases = []
    if seed_case is not None:
        cases.append(tuple(seed_case[name] for name in eq.variables))
    evaluated = 0
    for index in range(len(cases) + trials):
        relations = cases[index] if index < len(cases) else gen.relations(inst, index - len(cases), eq.arity)
        evaluated += 1
        if failing(relations) is None:
            continue
        if shrink:
            relations = shrink_relations(inst, lambda rs: failing(rs) is not None, relations)
        lhs, rhs = failing(relations)
        return log_verdict(CheckReport(verdict=VerdictKind.FAILS, trials=evaluated,
                                       witness=relation_witness(eq.variables, relations, lhs, rhs), **base))
    return log_verdict(CheckReport(verdict=VerdictKind.HOLDS_SAMPLED, trials=evaluated, **base))
