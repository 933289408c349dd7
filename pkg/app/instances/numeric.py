"""
Numeric and chain-valued annotation structures.

Rationals are `fractions.Fraction` throughout; axiom checking compares
elements for exact equality, so floats never appear as annotations.
"""

import math
import random
from fractions import Fraction
from typing import Iterable, Tuple

from ..core.algebra import CountableCarrier, FiniteCarrier, SemiringInstance
from .literals import annotation_error, parse_fraction, parse_integer, render_fraction

INF = math.inf


# --- Booleans ---

def _parse_bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("true", "1"):
        return True
    if value in ("false", "0"):
        return False
    raise annotation_error(text, "bool", "expected true or false")


def make_bool() -> SemiringInstance:
    return SemiringInstance(
        name="bool",
        display="B",
        carrier=FiniteCarrier((False, True)),
        add=lambda a, b: a or b,
        mul=lambda a, b: a and b,
        zero=False,
        one=True,
        parse=_parse_bool,
        render=lambda v: "true" if v else "false",
        monus=lambda a, b: a and not b,
        leq=lambda a, b: (not a) or b,
        lattice=True,
    )


# --- Natural numbers ---

def _shrink_int(value: int) -> Iterable[int]:
    """Toward zero: 0, halfway, one step."""
    if value == 0:
        return ()
    step = -1 if value > 0 else 1
    candidates = [0, int(value / 2), value + step]
    if value < 0:
        candidates.append(-value)
    return [c for i, c in enumerate(candidates) if c not in candidates[:i]]


def _int_simplicity(value: int) -> Tuple[int, int]:
    return abs(value), int(value < 0)


def make_nat() -> SemiringInstance:
    return SemiringInstance(
        name="nat",
        display="N",
        carrier=CountableCarrier(lambda rng, size: rng.randint(0, max(size, 1))),
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        zero=0,
        one=1,
        parse=lambda text: parse_integer(text, "nat", minimum=0),
        render=str,
        monus=lambda a, b: max(0, a - b),
        leq=lambda a, b: a <= b,
        simplicity=_int_simplicity,
        simpler=_shrink_int,
    )


def make_nat_sat(bound: int) -> SemiringInstance:
    """{0..bound} with addition and multiplication saturating at the bound."""

    def parse(text: str) -> int:
        value = parse_integer(text, "nat_sat", minimum=0)
        if value > bound:
            raise annotation_error(text, "nat_sat", f"value above the bound {bound}")
        return value

    return SemiringInstance(
        name="nat_sat",
        display=f"N<={bound}",
        params=(bound,),
        proxy_for="nat",
        carrier=FiniteCarrier(tuple(range(bound + 1))),
        add=lambda a, b: min(a + b, bound),
        mul=lambda a, b: min(a * b, bound),
        zero=0,
        one=1,
        parse=parse,
        render=str,
        monus=lambda a, b: max(0, a - b),
        leq=lambda a, b: a <= b,
    )


# --- Integers ---

def make_int() -> SemiringInstance:
    """A ring: negation is total, there is no natural order and no monus."""
    return SemiringInstance(
        name="int",
        display="Z",
        carrier=CountableCarrier(lambda rng, size: rng.randint(-max(size, 1), max(size, 1))),
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        zero=0,
        one=1,
        parse=lambda text: parse_integer(text, "int"),
        render=str,
        negate=lambda a: -a,
        simplicity=_int_simplicity,
        simpler=_shrink_int,
    )


# --- Non-negative rationals ---

def _sample_fraction(rng: random.Random, numerator_max: int) -> Fraction:
    return Fraction(rng.randint(0, numerator_max), rng.randint(1, 4))


def _fraction_simplicity(value: Fraction) -> Tuple[int, int]:
    return value.denominator, value.numerator


def _shrink_fraction(value: Fraction) -> Iterable[Fraction]:
    candidates = [Fraction(0), Fraction(1), Fraction(math.floor(value)), Fraction(math.ceil(value))]
    if value.numerator > 1:
        candidates.append(Fraction(value.numerator - 1, value.denominator))
    return [c for i, c in enumerate(candidates) if c != value and c not in candidates[:i]]


def make_real_plus() -> SemiringInstance:
    def parse(text: str) -> Fraction:
        value = parse_fraction(text, "real_plus")
        if value < 0:
            raise annotation_error(text, "real_plus", "value must be non-negative")
        return value

    return SemiringInstance(
        name="real_plus",
        display="R+",
        carrier=CountableCarrier(lambda rng, size: _sample_fraction(rng, 4 * max(size, 1))),
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        zero=Fraction(0),
        one=Fraction(1),
        parse=parse,
        render=render_fraction,
        canonicalize=Fraction,
        monus=lambda a, b: max(Fraction(0), a - b),
        leq=lambda a, b: a <= b,
        simplicity=_fraction_simplicity,
        simpler=_shrink_fraction,
    )


# --- Tropical ---

def _parse_tropical(text: str, name: str, bound: int = None):
    stripped = text.strip().lower()
    if stripped in ("inf", "∞"):
        return INF
    value = parse_integer(text, name, minimum=0)
    if bound is not None and value > bound:
        raise annotation_error(text, name, f"value above the bound {bound}")
    return value


def _render_tropical(value) -> str:
    return "inf" if value == INF else str(value)


def _tropical_monus(a, b):
    """a if a is numerically below b, else the additive identity."""
    return a if a < b else INF


def _tropical_simplicity(value) -> Tuple[int, int]:
    return (0, 0) if value == INF else (1, value)


def _shrink_tropical(value) -> Iterable:
    if value == INF:
        return ()
    return [INF] + [c for c in _shrink_int(value)]


def _sample_tropical(rng: random.Random, size: int):
    if rng.random() < 0.15:
        return INF
    return rng.randint(0, max(size, 1))


def make_tropical() -> SemiringInstance:
    """(N u {inf}, min, +, inf, 0); the natural order reverses the numeric one."""
    return SemiringInstance(
        name="tropical",
        display="T",
        carrier=CountableCarrier(_sample_tropical),
        add=min,
        mul=lambda a, b: a + b,
        zero=INF,
        one=0,
        parse=lambda text: _parse_tropical(text, "tropical"),
        render=_render_tropical,
        monus=_tropical_monus,
        leq=lambda a, b: b <= a,
        simplicity=_tropical_simplicity,
        simpler=_shrink_tropical,
    )


def make_tropical_trunc(bound: int) -> SemiringInstance:
    """{0..bound} u {inf}; products above the bound become inf."""

    def mul(a, b):
        total = a + b
        return total if total <= bound else INF

    return SemiringInstance(
        name="tropical_trunc",
        display=f"T<={bound}",
        params=(bound,),
        proxy_for="tropical",
        carrier=FiniteCarrier((INF,) + tuple(range(bound, -1, -1))),
        add=min,
        mul=mul,
        zero=INF,
        one=0,
        parse=lambda text: _parse_tropical(text, "tropical_trunc", bound),
        render=_render_tropical,
        monus=_tropical_monus,
        leq=lambda a, b: b <= a,
    )


# --- Chains in [0, 1] ---

def _chain_monus(a: Fraction, b: Fraction) -> Fraction:
    return a if a > b else Fraction(0)


def _unit_interval_parser(name: str, grid: Tuple[Fraction, ...] = None):
    def parse(text: str) -> Fraction:
        value = parse_fraction(text, name)
        if not 0 <= value <= 1:
            raise annotation_error(text, name, "value outside [0,1]")
        if grid is not None and value not in grid:
            raise annotation_error(text, name, "value not on the carrier grid")
        return value
    return parse


def _chain_instance(name: str, display: str, carrier, params=(), proxy_for=None,
                    grid=None, simplicity=None, simpler=None) -> SemiringInstance:
    return SemiringInstance(
        name=name,
        display=display,
        params=params,
        proxy_for=proxy_for,
        carrier=carrier,
        add=max,
        mul=min,
        zero=Fraction(0),
        one=Fraction(1),
        parse=_unit_interval_parser(name, grid),
        render=render_fraction,
        canonicalize=Fraction,
        monus=_chain_monus,
        leq=lambda a, b: a <= b,
        lattice=True,
        simplicity=simplicity,
        simpler=simpler,
    )


def _sample_unit(rng: random.Random, size: int) -> Fraction:
    denominator = rng.randint(1, max(size, 2))
    return Fraction(rng.randint(0, denominator), denominator)


def make_fuzz() -> SemiringInstance:
    """([0,1], max, min, 0, 1) over exact rationals."""
    return _chain_instance(
        "fuzz", "fuzz", CountableCarrier(_sample_unit),
        simplicity=_fraction_simplicity,
        simpler=lambda v: [c for c in _shrink_fraction(v) if c <= 1],
    )


def make_fuzz_grid(steps: int) -> SemiringInstance:
    grid = tuple(Fraction(i, steps) for i in range(steps + 1))
    return _chain_instance("fuzz_grid", f"fuzz/{steps}", FiniteCarrier(grid),
                           params=(steps,), proxy_for="fuzz", grid=grid)


def make_tvl() -> SemiringInstance:
    grid = (Fraction(0), Fraction(1, 2), Fraction(1))
    return _chain_instance("tvl", "TVL", FiniteCarrier(grid), grid=grid)
