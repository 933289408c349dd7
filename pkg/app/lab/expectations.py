"""
Expected verdicts per (instance, semantics, subject).

Built from the published A13 classification, the statements about the
alternative difference semantics, and the adjudications recorded where the
implementation's verdict departs from the published one. The CLI exit code
is derived from this book: a verdict is unexpected only when the book names
an outcome and the report disagrees.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..core.algebra import CheckReport, DiffSemantics, SemiringInstance, has_monus, order_decidable
from ..instances.registry import BOUNDED_NAMES, M_SEMIRING_NAMES
from ..utils.constants import (
    VERDICT_HOLDS, VERDICT_FAILS, VERDICT_INAPPLICABLE, MONUS_UNIQUENESS_MAX_ORDER,
)

HOLDS, FAILS, INAPPLICABLE = VERDICT_HOLDS, VERDICT_FAILS, VERDICT_INAPPLICABLE

# published A13 column, stored as data
TABLE3_CLAIMS: Dict[str, str] = {
    "bool": HOLDS,
    "sprime": HOLDS,
    "tropical": HOLDS,
    "nat": HOLDS,
    "real_plus": HOLDS,
    "trio": HOLDS,
    "why": HOLDS,
    "boolexpr": HOLDS,
    "natpoly": HOLDS,
    "boolpoly": HOLDS,
    "tvl": FAILS,
    "security": FAILS,
    "fuzz": FAILS,
    "posbool": FAILS,
}

PROXY_A13: Dict[str, Optional[str]] = {
    "tropical_trunc": HOLDS,
    "fuzz_grid": FAILS,
    # saturation breaks a*(b-c) = ab - ac on its own
    "nat_sat": None,
}


@dataclass(frozen=True)
class Adjudication:
    instance: str
    semantics: str
    subject: str
    outcome: str
    note: str


ADJUDICATIONS: Tuple[Adjudication, ...] = (
    Adjudication("natpoly", "monus", "A13", FAILS,
                 "a=x + 1, b=x, c=1 violates A13 under coefficientwise truncated subtraction"),
    Adjudication("boolpoly", "monus", "A13", FAILS,
                 "a=x + 1, b=x, c=1 violates A13 under monomial-set difference"),
    Adjudication("why", "monus", "A13", FAILS,
                 "a={{x},{}}, b={{x}}, c={{}} violates A13 under witness-family difference"),
    Adjudication("trio", "monus", "A13", FAILS,
                 "a={x} + {}, b={x}, c={} violates A13 under coefficientwise truncated subtraction"),
    Adjudication("bool", "cond", "A11", HOLDS,
                 "conditioned difference on bool coincides with a & !b"),
)

RING_EXPECTATIONS: Dict[str, str] = {"A9": HOLDS, "A10": FAILS, "A11": FAILS, "A12": HOLDS, "A13": HOLDS}
COND_EXPECTATIONS: Dict[Tuple[str, str], str] = {("nat", "A11"): FAILS}

SEMIRING_SUBJECTS = {f"A{n}" for n in range(1, 9)} | {f"I{n}" for n in range(1, 9)} | {"EXT2"}
DIFFERENCE_SUBJECTS = {f"A{n}" for n in range(9, 14)} | {f"I{n}" for n in range(9, 14)} | {"EXT1"}


def _axiom_of(subject: str) -> str:
    return "A" + subject[1:] if subject.startswith("I") else subject


class ExpectationBook:
    def __init__(self, claims: Dict[str, str] = None, adjudications: Tuple[Adjudication, ...] = ADJUDICATIONS):
        self.claims = dict(TABLE3_CLAIMS if claims is None else claims)
        self._adjudications = {(a.instance, a.semantics, a.subject): a for a in adjudications}

    def adjudication(self, name: str, semantics: Optional[str], subject: str) -> Optional[Adjudication]:
        return self._adjudications.get((name, semantics, _axiom_of(subject)))

    def a13_expectation(self, name: str) -> Optional[str]:
        """Published A13 verdict after adjudication; proxies carry their own."""
        adjudicated = self.adjudication(name, DiffSemantics.MONUS.value, "A13")
        if adjudicated is not None:
            return adjudicated.outcome
        if name in PROXY_A13:
            return PROXY_A13[name]
        return self.claims.get(name)

    def expected(self, inst: SemiringInstance, semantics: Optional[str], subject: str) -> Optional[str]:
        """Expected outcome (holds / fails / inapplicable), or None where nothing is claimed."""
        name = inst.name
        if subject in SEMIRING_SUBJECTS or subject == "ORACLE":
            return HOLDS
        if subject == "GALOIS":
            return HOLDS if has_monus(inst) and order_decidable(inst) else INAPPLICABLE
        if subject == "MONUS_UNIQUENESS":
            if not inst.is_finite:
                return INAPPLICABLE
            size = len(inst.elements)
            if size <= MONUS_UNIQUENESS_MAX_ORDER:
                return HOLDS
            return None if size == MONUS_UNIQUENESS_MAX_ORDER + 1 else INAPPLICABLE
        if subject not in DIFFERENCE_SUBJECTS:
            return None

        adjudicated = self.adjudication(name, semantics, subject)
        if adjudicated is not None and not subject.startswith("I"):
            return adjudicated.outcome
        axiom = _axiom_of(subject)

        if semantics == DiffSemantics.MONUS.value:
            if name not in M_SEMIRING_NAMES and name not in BOUNDED_NAMES:
                return INAPPLICABLE
            if subject == "EXT1" or axiom in ("A9", "A10", "A11", "A12"):
                return HOLDS
            a13 = self.a13_expectation(name)
            if subject == "A13" or a13 == HOLDS:
                return a13
            # relational failures are found by sampling; only the small chains are certain
            return FAILS if name in ("security", "tvl") else None

        if semantics == DiffSemantics.RING.value:
            if inst.negate is None:
                return INAPPLICABLE
            return HOLDS if subject == "EXT1" else RING_EXPECTATIONS.get(axiom)

        if semantics == DiffSemantics.CONDITIONED.value:
            if subject == "EXT1" or axiom in ("A9", "A10"):
                return HOLDS
            if adjudicated is not None:
                return adjudicated.outcome
            return COND_EXPECTATIONS.get((name, axiom))
        return None

    def is_unexpected(self, inst: SemiringInstance, report: CheckReport) -> bool:
        expected = self.expected(inst, report.semantics, report.subject)
        return expected is not None and report.outcome != expected
