"""Greedy shrinking of failing element assignments."""

import logging
from typing import Any, Callable, Tuple

from ..utils.constants import LOGGER_NAME

logger = logging.getLogger(LOGGER_NAME)


def shrink_assignment(inst: Any, still_fails: Callable[[Tuple[Any, ...]], bool],
                      values: Tuple[Any, ...]) -> Tuple[Any, ...]:
    """
    Replaces one value at a time by a strictly simpler candidate while the
    assignment keeps failing. Candidates and the simplicity order come from
    the instance; the loop ends because every accepted step lowers a
    well-founded key.
    """
    current = list(values)
    steps = 0
    progressed = True
    while progressed:
        progressed = False
        for position, value in enumerate(current):
            key = inst.simplicity_key(value)
            for candidate in inst.simpler_candidates(value):
                if candidate == value or not inst.simplicity_key(candidate) < key:
                    continue
                trial = current[:position] + [candidate] + current[position + 1:]
                if still_fails(tuple(trial)):
                    current = trial
                    steps += 1
                    progressed = True
                    break
            if progressed:
                break
    if steps:
        logger.debug(f"Shrunk witness for '{inst.label}' in {steps} step(s)")
    return tuple(current)
