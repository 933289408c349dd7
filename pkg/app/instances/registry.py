"""
Built-in instance catalog.

`make_instance` builds an instance by name and passes it through the
registration gate before handing it out. Results are cached per
(name, variables, bound), so repeated lookups share one immutable object.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, Optional, Sequence, Tuple

from ..core.algebra import SemiringInstance, register
from ..utils.constants import (
    LOGGER_NAME, DEFAULT_VARIABLES, DEFAULT_REGISTRATION_SAMPLES, DEFAULT_SEED,
    DEFAULT_NAT_BOUND, DEFAULT_TROPICAL_BOUND, DEFAULT_FUZZ_GRID,
    ERROR_UNKNOWN_INSTANCE, ERROR_UNKNOWN_INSTANCE_SUGGESTION,
    ERROR_EMPTY_VARIABLES, ERROR_EMPTY_VARIABLES_SUGGESTION,
    ERROR_MISSING_BOUND, ERROR_MISSING_BOUND_SUGGESTION,
    ERROR_INAPPLICABLE, ERROR_INAPPLICABLE_SUGGESTION,
)
from ..utils.error_handler import ConfigurationError, InapplicableError
from .boolean import make_boolexpr, make_posbool
from .numeric import (
    make_bool, make_fuzz, make_fuzz_grid, make_int, make_nat, make_nat_sat,
    make_real_plus, make_tropical, make_tropical_trunc, make_tvl,
)
from .provenance import make_boolpoly, make_natpoly, make_trio, make_why
from .security import make_security, make_sprime

logger = logging.getLogger(LOGGER_NAME)

PLAIN_FACTORIES: Dict[str, Callable[[], SemiringInstance]] = {
    "bool": make_bool,
    "nat": make_nat,
    "real_plus": make_real_plus,
    "int": make_int,
    "tropical": make_tropical,
    "fuzz": make_fuzz,
    "tvl": make_tvl,
    "security": make_security,
    "sprime": make_sprime,
}

VARIABLE_FACTORIES: Dict[str, Callable[[Sequence[str]], SemiringInstance]] = {
    "posbool": make_posbool,
    "boolexpr": make_boolexpr,
    "natpoly": make_natpoly,
    "boolpoly": make_boolpoly,
    "why": make_why,
    "trio": make_trio,
}

BOUNDED_FACTORIES: Dict[str, Callable[[int], SemiringInstance]] = {
    "nat_sat": make_nat_sat,
    "tropical_trunc": make_tropical_trunc,
    "fuzz_grid": make_fuzz_grid,
}

DEFAULT_BOUNDS = {
    "nat_sat": DEFAULT_NAT_BOUND,
    "tropical_trunc": DEFAULT_TROPICAL_BOUND,
    "fuzz_grid": DEFAULT_FUZZ_GRID,
}

BUILTIN_NAMES: Tuple[str, ...] = tuple(PLAIN_FACTORIES) + tuple(VARIABLE_FACTORIES)
BOUNDED_NAMES: Tuple[str, ...] = tuple(BOUNDED_FACTORIES)
ALL_NAMES: Tuple[str, ...] = BUILTIN_NAMES + BOUNDED_NAMES

# listed as m-semirings in the catalog; int is the only ring
M_SEMIRING_NAMES: Tuple[str, ...] = tuple(n for n in BUILTIN_NAMES if n != "int")
LATTICE_NAMES: Tuple[str, ...] = ("bool", "tvl", "fuzz", "security", "sprime", "posbool", "boolexpr")


def takes_variables(name: str) -> bool:
    return name in VARIABLE_FACTORIES


def make_instance(name: str, variables: Optional[Sequence[str]] = None, bound: Optional[int] = None,
                  samples: int = DEFAULT_REGISTRATION_SAMPLES, seed: int = DEFAULT_SEED) -> SemiringInstance:
    """
    Returns the registered instance `name`.

    X-parameterized instances take `variables` (default x, y, z); bounded
    variants take `bound`. Raises ConfigurationError for unknown names, an
    empty variable list or a non-positive bound, and RegistrationError when
    the gate rejects the structure.
    """
    key = name.strip().lower()
    if key not in ALL_NAMES:
        raise ConfigurationError(
            ERROR_UNKNOWN_INSTANCE.format(name=name), "unknown_instance",
            ERROR_UNKNOWN_INSTANCE_SUGGESTION.format(choices=", ".join(ALL_NAMES)),
        )
    vars_key: Tuple[str, ...] = ()
    if key in VARIABLE_FACTORIES:
        chosen = DEFAULT_VARIABLES if variables is None else variables
        vars_key = tuple(dict.fromkeys(v.strip() for v in chosen if v.strip()))
        if not vars_key:
            raise ConfigurationError(ERROR_EMPTY_VARIABLES.format(name=key), "empty_variables",
                                     ERROR_EMPTY_VARIABLES_SUGGESTION)
    bound_key: Optional[int] = None
    if key in BOUNDED_FACTORIES:
        bound_key = DEFAULT_BOUNDS[key] if bound is None else bound
        if not isinstance(bound_key, int) or bound_key < 1:
            raise ConfigurationError(ERROR_MISSING_BOUND.format(name=key), "missing_bound",
                                     ERROR_MISSING_BOUND_SUGGESTION.format(name=key))
    return _build(key, vars_key, bound_key, samples, seed)


@lru_cache(maxsize=None)
def _build(name: str, variables: Tuple[str, ...], bound: Optional[int],
           samples: int, seed: int) -> SemiringInstance:
    if name in VARIABLE_FACTORIES:
        inst = VARIABLE_FACTORIES[name](variables)
    elif name in BOUNDED_FACTORIES:
        inst = BOUNDED_FACTORIES[name](bound)
    else:
        inst = PLAIN_FACTORIES[name]()
    logger.debug(f"Building instance '{inst.label}'")
    return register(inst, samples=samples, seed=seed)


def builtin_instances(variables: Optional[Sequence[str]] = None) -> Tuple[SemiringInstance, ...]:
    """The fifteen built-ins in catalog order."""
    return tuple(make_instance(name, variables) for name in BUILTIN_NAMES)


# --- Closed-form monus families ---

LATTICE_MONUS_NAMES: Tuple[str, ...] = ("security", "tvl", "fuzz", "fuzz_grid", "posbool")
POINTWISE_MONUS_NAMES: Tuple[str, ...] = (
    "bool", "nat", "nat_sat", "real_plus", "tropical", "tropical_trunc",
    "sprime", "boolexpr", "natpoly", "boolpoly", "why", "trio",
)


def _closed_form(inst: SemiringInstance, family: Tuple[str, ...], operation: str):
    if inst.name not in family or inst.monus is None:
        raise InapplicableError(
            ERROR_INAPPLICABLE.format(operation=operation, name=inst.label,
                                      reason=f"instance is not one of {', '.join(family)}"),
            "inapplicable", ERROR_INAPPLICABLE_SUGGESTION,
        )
    return inst.monus


def lattice_monus(inst: SemiringInstance, a, b):
    """inf{c | a <= b v c} on the lattice family: chains cut to zero at or above b, PosBool by monotone closure."""
    return _closed_form(inst, LATTICE_MONUS_NAMES, "lattice_monus")(a, b)


def pointwise_monus(inst: SemiringInstance, a, b):
    """Truncated subtraction, set difference, a & !b or the tropical rule, depending on the carrier."""
    return _closed_form(inst, POINTWISE_MONUS_NAMES, "pointwise_monus")(a, b)
