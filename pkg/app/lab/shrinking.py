"""Witness minimization for relational counterexamples, plus a dispatch over report subjects."""

import logging
from typing import Callable, Iterator, List, Optional, Tuple

from ..core.algebra import (
    DiffSemantics, ElementOps, SemiringInstance, Witness, difference_operator, make_witness,
)
from ..core.equations import AXIOMS, AxiomId
from ..core.krel import KRelation
from ..core.shrinking import shrink_assignment
from ..utils.constants import LOGGER_NAME
from ..utils.error_handler import AlgebraError

logger = logging.getLogger(LOGGER_NAME)

MAX_SHRINK_STEPS = 500


def _variants(inst: SemiringInstance, relation: KRelation) -> Iterator[KRelation]:
    """Smaller neighbours of `relation`: one row dropped, one value lowered, one annotation simplified."""
    items = list(relation.items())
    for index in range(len(items)):
        yield KRelation(inst, relation.schema, items[:index] + items[index + 1:], kinds=relation.kinds)
    for index, (row, k) in enumerate(items):
        for position, value in enumerate(row):
            if isinstance(value, int) and value > 0:
                lowered = row[:position] + (0,) + row[position + 1:]
                yield KRelation(inst, relation.schema, items[:index] + [(lowered, k)] + items[index + 1:],
                                kinds=relation.kinds)
    for index, (row, k) in enumerate(items):
        key = inst.simplicity_key(k)
        for candidate in inst.simpler_candidates(k):
            if candidate != k and inst.simplicity_key(candidate) < key:
                yield KRelation(inst, relation.schema, items[:index] + [(row, candidate)] + items[index + 1:],
                                kinds=relation.kinds)


def shrink_relations(inst: SemiringInstance, still_fails: Callable[[Tuple[KRelation, ...]], bool],
                     relations: Tuple[KRelation, ...]) -> Tuple[KRelation, ...]:
    """Greedy: accept the first smaller neighbour that keeps failing, until none does."""
    current: List[KRelation] = list(relations)
    steps = 0
    progressed = True
    while progressed and steps < MAX_SHRINK_STEPS:
        progressed = False
        for position, relation in enumerate(current):
            for candidate in _variants(inst, relation):
                trial = current[:position] + [candidate] + current[position + 1:]
                if still_fails(tuple(trial)):
                    current = trial
                    steps += 1
                    progressed = True
                    break
            if progressed:
                break
    if steps:
        logger.debug(f"Shrunk relational witness for '{inst.label}' in {steps} step(s)")
    return tuple(current)


def shrink_witness(inst: SemiringInstance, subject: str, witness: Witness,
                   sem: DiffSemantics = DiffSemantics.MONUS) -> Witness:
    """
    Re-minimizes a failing witness of an axiom (A1-A13) or identity check.

    The result still violates the same equation and is no more complex than
    the input; an already minimal witness comes back unchanged.
    """
    from .identities import IDENTITIES, IdentityId, identity_sides, relation_witness

    sem = DiffSemantics.parse(sem)
    names = tuple(name for name, _ in witness.bindings)
    if subject in AxiomId.__members__:
        eq = AXIOMS[AxiomId(subject)]
        ops = ElementOps(inst, difference_operator(inst, sem) if eq.uses_difference else None)

        def sides(values) -> Optional[Tuple]:
            lhs, rhs = eq.evaluate(ops, values)
            return None if lhs == rhs else (lhs, rhs)

        if sides(witness.values) is None:
            raise AlgebraError(f"witness does not violate {subject} on '{inst.label}'")
        values = shrink_assignment(inst, lambda vs: sides(vs) is not None, witness.values)
        lhs, rhs = sides(values)
        return make_witness(names, values, lhs, rhs, inst.render)

    identity = IdentityId.parse(subject)
    if identity not in IDENTITIES:
        raise AlgebraError(f"no shrinker for subject '{subject}'")

    def violated(relations) -> bool:
        lhs, rhs = identity_sides(inst, identity, sem, relations)
        return lhs != rhs

    if not violated(witness.values):
        raise AlgebraError(f"witness does not violate {subject} on '{inst.label}'")
    relations = shrink_relations(inst, violated, witness.values)
    lhs, rhs = identity_sides(inst, identity, sem, relations)
    return relation_witness(names, relations, lhs, rhs)
