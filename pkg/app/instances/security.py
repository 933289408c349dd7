"""
The security chain and its powerset repair.

Levels are ordered 1s < C < S < T < 0s by clearance. On the chain, addition
is min and multiplication is max, so the natural order runs the other way:
0s is the least element and 1s the greatest.
"""

import itertools
from enum import Enum
from typing import FrozenSet, Tuple

from ..core.algebra import FiniteCarrier, SemiringInstance
from .literals import annotation_error


class SecurityLevel(str, Enum):
    PUBLIC = "1s"
    CONFIDENTIAL = "C"
    SECRET = "S"
    TOP_SECRET = "T"
    NEVER = "0s"

    @property
    def rank(self) -> int:
        return _RANK[self]

    def __str__(self) -> str:
        return self.value


_CHAIN = (SecurityLevel.PUBLIC, SecurityLevel.CONFIDENTIAL, SecurityLevel.SECRET,
          SecurityLevel.TOP_SECRET, SecurityLevel.NEVER)
_RANK = {level: rank for rank, level in enumerate(_CHAIN)}
CREDENTIALS = _CHAIN[:-1]

CredentialSet = FrozenSet[SecurityLevel]


def _parse_level(text: str, instance: str = "security") -> SecurityLevel:
    try:
        return SecurityLevel(text.strip())
    except ValueError:
        raise annotation_error(text, instance, "expected one of 1s, C, S, T, 0s")


def security_min(a: SecurityLevel, b: SecurityLevel) -> SecurityLevel:
    return a if a.rank <= b.rank else b


def security_max(a: SecurityLevel, b: SecurityLevel) -> SecurityLevel:
    return a if a.rank >= b.rank else b


def security_monus(a: SecurityLevel, b: SecurityLevel) -> SecurityLevel:
    """a when a is below b on the chain, otherwise 0s."""
    return a if a.rank < b.rank else SecurityLevel.NEVER


def make_security() -> SemiringInstance:
    return SemiringInstance(
        name="security",
        display="S",
        # natural order: 0s < T < S < C < 1s
        carrier=FiniteCarrier(tuple(reversed(_CHAIN))),
        add=security_min,
        mul=security_max,
        zero=SecurityLevel.NEVER,
        one=SecurityLevel.PUBLIC,
        parse=_parse_level,
        render=str,
        monus=security_monus,
        leq=lambda a, b: b.rank <= a.rank,
        lattice=True,
    )


# --- Credential sets ---

def _sort_credentials(values) -> Tuple[SecurityLevel, ...]:
    return tuple(sorted(values, key=lambda level: level.rank))


def render_credentials(value: CredentialSet) -> str:
    return "{" + ",".join(level.value for level in _sort_credentials(value)) + "}"


def parse_credentials(text: str) -> CredentialSet:
    stripped = text.strip()
    if not (stripped.startswith("{") and stripped.endswith("}")):
        raise annotation_error(text, "sprime", "expected a braced set such as {C,S}")
    body = stripped[1:-1].strip()
    if not body:
        return frozenset()
    levels = [_parse_level(part, "sprime") for part in body.split(",")]
    if SecurityLevel.NEVER in levels:
        raise annotation_error(text, "sprime", "0s is not a credential")
    return frozenset(levels)


def _credential_carrier() -> Tuple[CredentialSet, ...]:
    subsets = [frozenset(c) for size in range(len(CREDENTIALS) + 1)
               for c in itertools.combinations(CREDENTIALS, size)]
    return tuple(sorted(subsets, key=lambda s: (len(s), [level.rank for level in _sort_credentials(s)])))


def make_sprime() -> SemiringInstance:
    """(P({1s,C,S,T}), union, intersection, {}, {1s,C,S,T}) with set difference."""
    return SemiringInstance(
        name="sprime",
        display="S'",
        carrier=FiniteCarrier(_credential_carrier()),
        add=lambda a, b: a | b,
        mul=lambda a, b: a & b,
        zero=frozenset(),
        one=frozenset(CREDENTIALS),
        parse=parse_credentials,
        render=render_credentials,
        canonicalize=frozenset,
        monus=lambda a, b: a - b,
        leq=lambda a, b: a <= b,
        lattice=True,
    )


def embed_security(level: SecurityLevel) -> CredentialSet:
    """Every credential at or above `level` on the chain; 0s maps to the empty set."""
    return frozenset(c for c in CREDENTIALS if c.rank >= level.rank)
