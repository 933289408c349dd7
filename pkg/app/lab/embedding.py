"""The security chain inside the credential-set semiring."""

from dataclasses import dataclass, replace
from typing import List, Tuple, Union

from ..core.algebra import EXHAUSTIVE, CheckReport, FiniteCarrier, SemiringInstance, check_axiom
from ..core.equations import AxiomId
from ..instances.registry import make_instance
from ..instances.security import (
    CredentialSet, SecurityLevel, embed_security, render_credentials, security_max, security_min,
    security_monus,
)

# carrier order of the security instance: 0s first, then up the natural order
CHAIN_ORDER: Tuple[SecurityLevel, ...] = (
    SecurityLevel.NEVER, SecurityLevel.TOP_SECRET, SecurityLevel.SECRET,
    SecurityLevel.CONFIDENTIAL, SecurityLevel.PUBLIC,
)


@dataclass(frozen=True)
class MonusDiscrepancy:
    s: SecurityLevel
    t: SecurityLevel
    embedded_difference: CredentialSet
    difference_of_embeddings: CredentialSet

    def describe(self) -> str:
        return (f"embed({self.s} - {self.t}) = {render_credentials(self.embedded_difference)}, "
                f"embed({self.s}) - embed({self.t}) = {render_credentials(self.difference_of_embeddings)}")


def embedding_table() -> List[Tuple[SecurityLevel, CredentialSet]]:
    return [(level, embed_security(level)) for level in CHAIN_ORDER]


def homomorphism_violations() -> List[str]:
    """Pairs where embedding fails to carry min to union or max to intersection; empty when it is a homomorphism."""
    problems = []
    if embed_security(SecurityLevel.NEVER) != frozenset():
        problems.append("embed(0s) is not the empty set")
    if embed_security(SecurityLevel.PUBLIC) != make_instance("sprime").one:
        problems.append("embed(1s) is not the full credential set")
    for s in CHAIN_ORDER:
        for t in CHAIN_ORDER:
            if embed_security(security_min(s, t)) != embed_security(s) | embed_security(t):
                problems.append(f"+ at ({s}, {t})")
            if embed_security(security_max(s, t)) != embed_security(s) & embed_security(t):
                problems.append(f"* at ({s}, {t})")
    return problems


def embedded_image() -> SemiringInstance:
    """The credential-set instance restricted to the image of the chain."""
    sprime = make_instance("sprime")
    return replace(sprime, carrier=FiniteCarrier(tuple(embed_security(level) for level in CHAIN_ORDER)),
                   params=("embedded",))


def check_embedded_axiom(axiom: Union[AxiomId, str]) -> CheckReport:
    """Evaluates `axiom` in the credential-set semiring over every assignment drawn from the image."""
    return check_axiom(embedded_image(), axiom, EXHAUSTIVE)


def monus_preservation_report() -> List[MonusDiscrepancy]:
    """Pairs (s, t) where embedding does not commute with the monus."""
    out = []
    for s in CHAIN_ORDER:
        for t in CHAIN_ORDER:
            left = embed_security(security_monus(s, t))
            right = embed_security(s) - embed_security(t)
            if left != right:
                out.append(MonusDiscrepancy(s, t, left, right))
    return out
