"""
Search for pairs a > b with (a - b) * b != 0 in distributive lattices.

Such a pair breaks A13 at (a := b, b := a, c := b): the left side is
b * (a - b), nonzero, while a*b - b*b = b - b = 0.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Tuple, Union

from ..core.algebra import SemiringInstance, natural_leq, resolve_monus
from ..utils.constants import (
    LOGGER_NAME, DEFAULT_AXIOM_TRIALS, DEFAULT_SEED, DEFAULT_SAMPLE_SIZE,
    ERROR_INAPPLICABLE, ERROR_INAPPLICABLE_SUGGESTION,
)
from ..utils.error_handler import AppError, InapplicableError
from ..utils.utils import trial_rng

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class Prop34Witness:
    instance: str
    a: Any
    b: Any
    residue: Any
    rendered_a: str
    rendered_b: str
    rendered_residue: str
    a13_lhs: str
    a13_rhs: str
    source: str

    def describe(self) -> str:
        return (f"a={self.rendered_a}, b={self.rendered_b}: (a - b) * b = {self.rendered_residue}; "
                f"A13 at (b, a, b): {self.a13_lhs} != {self.a13_rhs}")


@dataclass(frozen=True)
class NotFound:
    instance: str
    reason: str
    pairs_examined: int = 0

    def describe(self) -> str:
        return f"no pair found on {self.instance}: {self.reason}"


def _strictly_above(inst: SemiringInstance, a: Any, b: Any) -> bool:
    return a != b and natural_leq(inst, b, a)


def _witness(inst: SemiringInstance, a: Any, b: Any, source: str) -> Optional[Prop34Witness]:
    sub = resolve_monus(inst)
    if not _strictly_above(inst, a, b):
        return None
    residue = inst.mul(sub(a, b), b)
    if inst.is_zero(residue):
        return None
    lhs = inst.mul(b, sub(a, b))
    rhs = sub(inst.mul(b, a), inst.mul(b, b))
    return Prop34Witness(
        instance=inst.label, a=a, b=b, residue=residue,
        rendered_a=inst.render(a), rendered_b=inst.render(b), rendered_residue=inst.render(residue),
        a13_lhs=inst.render(lhs), a13_rhs=inst.render(rhs), source=source,
    )


def _hint_pairs(inst: SemiringInstance) -> Iterable[Tuple[Any, Any]]:
    for a_text, b_text in inst.witness_hints:
        try:
            yield inst.read(a_text), inst.read(b_text)
        except AppError as e:
            logger.warning(f"Ignoring unparsable witness hint on '{inst.label}': {e.message}")


def find_prop34_witness(inst: SemiringInstance, trials: int = DEFAULT_AXIOM_TRIALS,
                        seed: int = DEFAULT_SEED) -> Union[Prop34Witness, NotFound]:
    """
    Registered hints are verified first. Finite lattices are then searched
    exhaustively in carrier order; countable ones with `trials` seeded pairs.
    """
    if not inst.lattice:
        raise InapplicableError(
            ERROR_INAPPLICABLE.format(operation="find_prop34_witness", name=inst.label,
                                      reason="not a distributive lattice"),
            "inapplicable", ERROR_INAPPLICABLE_SUGGESTION,
        )
    for a, b in _hint_pairs(inst):
        found = _witness(inst, a, b, "hint")
        if found is not None:
            return found

    examined = 0
    if inst.is_finite:
        pairs = itertools.product(inst.elements, repeat=2)
        source = "exhaustive"
    else:
        pairs = ((inst.sample(rng, DEFAULT_SAMPLE_SIZE), inst.sample(rng, DEFAULT_SAMPLE_SIZE))
                 for rng in (trial_rng(seed, i) for i in range(trials)))
        source = f"sampled({trials},seed={seed})"
    for a, b in pairs:
        examined += 1
        found = _witness(inst, a, b, source)
        if found is not None:
            logger.info(f"Lattice witness on {inst.label}: {found.describe()}")
            return found
    return NotFound(inst.label, f"no a > b with (a - b) * b != 0 ({source})", examined)
