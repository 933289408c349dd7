"""
Census of small finite commutative semirings.

Addition and multiplication tables on n labels are enumerated with the
additive and multiplicative identities fixed, filtered by A1-A8 and reduced
up to isomorphism (relabelings that fix 0 and 1). Each survivor is then
classified: natural order, derived monus, A9-A12 under that monus, A13.
"""

import itertools
import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.algebra import (
    EXHAUSTIVE, FiniteCarrier, MonusTable, SemiringInstance, check_axiom, derive_monus,
)
from ..core.background_task import BackgroundTaskRunner
from ..core.equations import MONUS_AXIOMS, SEMIRING_AXIOMS, AxiomId
from ..instances.literals import parse_integer
from ..utils.constants import (
    LOGGER_NAME, ENUMERATION_MAX_ORDER, ENUMERATION_FLAGGED_ORDER, ENUMERATION_MIN_ORDER,
    STATUS_ENUMERATION_CENSUS, ERROR_BOUND_EXCEEDED, ERROR_BOUND_EXCEEDED_SUGGESTION,
)
from ..utils.error_handler import AlgebraError, BoundExceededError

logger = logging.getLogger(LOGGER_NAME)

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class EnumeratedStructure:
    """One isomorphism class, in canonical labels: 0 and 1 are the identities."""

    add: Table
    mul: Table
    naturally_ordered: bool
    monus: Optional[Table] = None
    monus_axioms_hold: Optional[bool] = None
    a13_holds: Optional[bool] = None
    a13_witness: Optional[str] = None

    @property
    def has_monus(self) -> bool:
        return self.monus is not None


@dataclass(frozen=True)
class EnumerationReport:
    order: int
    structures: Tuple[EnumeratedStructure, ...]
    candidates_examined: int

    @property
    def counts(self) -> Dict[str, int]:
        return {
            "semirings": len(self.structures),
            "naturally_ordered": sum(s.naturally_ordered for s in self.structures),
            "with_monus": sum(s.has_monus for s in self.structures),
            "satisfying_a13": sum(bool(s.a13_holds) for s in self.structures),
        }

    @property
    def consistent(self) -> bool:
        """Every derived monus satisfies A9-A12."""
        return all(s.monus_axioms_hold for s in self.structures if s.has_monus)


def check_order(n: int, allow_order4: bool = False):
    limit = ENUMERATION_FLAGGED_ORDER if allow_order4 else ENUMERATION_MAX_ORDER
    if not ENUMERATION_MIN_ORDER <= n <= limit:
        raise BoundExceededError(
            ERROR_BOUND_EXCEEDED.format(operation="enumerate_finite_semirings", limit=limit, order=n),
            "bound_exceeded", ERROR_BOUND_EXCEEDED_SUGGESTION, {"order": n, "limit": limit},
        )


def _fill(n: int, fixed: Dict[Tuple[int, int], int], free: Sequence[Tuple[int, int]],
          choice: Sequence[int]) -> List[List[int]]:
    table = [[-1] * n for _ in range(n)]
    for (i, j), value in list(fixed.items()) + list(zip(free, choice)):
        table[i][j] = value
        table[j][i] = value
    return table


def _associative(t: List[List[int]], n: int) -> bool:
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def _distributive(plus: List[List[int]], times: List[List[int]], n: int) -> bool:
    return all(times[a][plus[b][c]] == plus[times[a][b]][times[a][c]]
               for a in range(n) for b in range(n) for c in range(n))


def _addition_tables(n: int, zero: int, others: Sequence[int]):
    fixed = {(zero, x): x for x in range(n)}
    free = [(i, j) for k, i in enumerate(others) for j in others[k:]]
    for choice in itertools.product(range(n), repeat=len(free)):
        table = _fill(n, fixed, free, choice)
        if _associative(table, n):
            yield table


def _multiplication_tables(n: int, zero: int, one: int, others: Sequence[int]):
    fixed = {(one, x): x for x in range(n)}
    fixed.update({(zero, x): zero for x in range(n)})
    rest = [x for x in others if x != one]
    free = [(i, j) for k, i in enumerate(rest) for j in rest[k:]]
    for choice in itertools.product(range(n), repeat=len(free)):
        table = _fill(n, fixed, free, choice)
        if _associative(table, n):
            yield table


def _canonical(plus: List[List[int]], times: List[List[int]], zero: int, one: int,
               others: Sequence[int]) -> Tuple[Table, Table]:
    """Lexicographically least relabeling sending zero to 0 and one to 1."""
    n = len(plus)
    best = None
    for targets in itertools.permutations(range(2, n)):
        pi = {zero: 0, one: 1, **dict(zip(others, targets))}
        inverse = {v: k for k, v in pi.items()}
        relabeled = (
            tuple(tuple(pi[plus[inverse[i]][inverse[j]]] for j in range(n)) for i in range(n)),
            tuple(tuple(pi[times[inverse[i]][inverse[j]]] for j in range(n)) for i in range(n)),
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def _instance(add: Table, mul: Table, elements: Tuple[int, ...], tag: int) -> SemiringInstance:
    return SemiringInstance(
        name="enumerated",
        params=(len(add), tag),
        carrier=FiniteCarrier(elements),
        add=lambda a, b: add[a][b],
        mul=lambda a, b: mul[a][b],
        zero=0,
        one=1,
        parse=lambda text: parse_integer(text, "enumerated", 0),
        render=str,
    )


def _below_counts(add: Table) -> Dict[int, int]:
    n = len(add)
    ups = {a: {add[a][c] for c in range(n)} for a in range(n)}
    return {b: sum(1 for a in range(n) if b in ups[a]) for b in range(n)}


def classify_structure(add: Table, mul: Table, tag: int = 0) -> EnumeratedStructure:
    """Natural order, derived monus, A9-A12 and A13 for one canonical structure."""
    n = len(add)
    # zero first, then by the size of the down-set: a linear extension when the order is antisymmetric
    below = _below_counts(add)
    elements = tuple(sorted(range(n), key=lambda e: (e != 0, below[e], e)))
    inst = _instance(add, mul, elements, tag)
    for ax in SEMIRING_AXIOMS:
        if not check_axiom(inst, ax, EXHAUSTIVE, shrink=False).holds:
            raise AlgebraError(f"enumerated structure {tag} of order {n} violates {ax.value}")

    try:
        derived = derive_monus(inst)
    except AlgebraError:
        return EnumeratedStructure(add, mul, naturally_ordered=False)
    if not isinstance(derived, MonusTable):
        return EnumeratedStructure(add, mul, naturally_ordered=True)

    with_monus = replace(inst, monus=derived)
    monus_table = tuple(tuple(derived(a, b) for b in range(n)) for a in range(n))
    monus_ok = all(check_axiom(with_monus, ax, EXHAUSTIVE, shrink=False).holds for ax in MONUS_AXIOMS)
    if not monus_ok:
        logger.error(f"Derived monus of enumerated structure {tag} (order {n}) violates A9-A12")
    a13 = check_axiom(with_monus, AxiomId.A13, EXHAUSTIVE, shrink=False)
    return EnumeratedStructure(
        add, mul, naturally_ordered=True, monus=monus_table, monus_axioms_hold=monus_ok,
        a13_holds=a13.holds, a13_witness=a13.witness.describe() if a13.witness else None,
    )


def enumerate_finite_semirings(n: int, allow_order4: bool = False,
                               labels: Optional[Sequence[int]] = None,
                               runner: Optional[BackgroundTaskRunner] = None) -> EnumerationReport:
    """
    `labels` is a permutation of range(n) whose first two entries play 0 and
    1 during enumeration; the census does not depend on it.
    """
    check_order(n, allow_order4)
    labels = tuple(range(n)) if labels is None else tuple(labels)
    if sorted(labels) != list(range(n)):
        raise ValueError(f"labels must be a permutation of 0..{n - 1}")
    zero, one, others = labels[0], labels[1], labels[2:]
    non_zero = labels[1:]

    seen = set()
    examined = 0
    for plus in _addition_tables(n, zero, non_zero):
        for times in _multiplication_tables(n, zero, one, non_zero):
            examined += 1
            if not _distributive(plus, times, n):
                continue
            seen.add(_canonical(plus, times, zero, one, others))
    logger.info(f"Order {n}: {examined} associative table pairs, {len(seen)} semirings up to isomorphism")

    canonical = sorted(seen)
    jobs = [lambda add=add, mul=mul, tag=tag: classify_structure(add, mul, tag)
            for tag, (add, mul) in enumerate(canonical)]
    structures = tuple((runner or BackgroundTaskRunner(1)).run(jobs))
    report = EnumerationReport(n, structures, examined)
    counts = report.counts
    logger.info(STATUS_ENUMERATION_CENSUS.format(n, counts["semirings"], counts["naturally_ordered"],
                                                 counts["with_monus"], counts["satisfying_a13"]))
    return report
