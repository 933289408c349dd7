"""Immutable per-invocation settings: configuration file values overridden by command-line flags."""

from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Tuple

from ..core.algebra import CheckStrategy, DiffSemantics, SemiringInstance
from ..instances.registry import ALL_NAMES, BOUNDED_FACTORIES, make_instance
from ..lab.generators import RelationGenerator
from ..lab.suite import default_strategy
from ..utils.constants import (
    OUTPUT_FORMATS, ERROR_CONFIGURATION, ERROR_CONFIGURATION_SUGGESTION,
    ERROR_UNKNOWN_INSTANCE, ERROR_UNKNOWN_INSTANCE_SUGGESTION,
)
from ..utils.error_handler import ConfigurationError, validate_file_operation
from ..utils.utils import split_csv_list

# configuration key holding the bound of each bounded instance
BOUND_KEYS = {"nat_sat": "bounded_nat", "tropical_trunc": "bounded_tropical", "fuzz_grid": "fuzz_grid"}

# command-line destination -> configuration key
OVERRIDE_KEYS = {
    "instance": "default_instance",
    "vars": "variables",
    "diff": "diff_semantics",
    "seed": "seed",
    "trials": "axiom_trials",
    "identity_trials": "identity_trials",
    "format": "output_format",
    "workers": "workers",
    "allow_order4": "allow_order4",
    "log_level": "log_level",
}


def _invalid(key: str, value: Any) -> ConfigurationError:
    return ConfigurationError(ERROR_CONFIGURATION.format(key=key, value=value), "configuration_error",
                              ERROR_CONFIGURATION_SUGGESTION)


def _positive_int(config: Mapping[str, Any], key: str, minimum: int = 1) -> int:
    value = config.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise _invalid(key, value)
    return value


@dataclass(frozen=True)
class RunConfig:
    instance_name: str
    variables: Tuple[str, ...]
    bound: Optional[int]
    diff: DiffSemantics
    seed: int
    axiom_trials: int
    identity_trials: int
    registration_samples: int
    sample_size: int
    max_tuples: int
    domain_size: int
    schema_width: int
    output_format: str
    workers: int
    allow_order4: bool
    regression_path: str
    inputs: Tuple[str, ...] = field(default=())

    def instance(self) -> SemiringInstance:
        return make_instance(self.instance_name, self.variables, self.bound,
                             samples=self.registration_samples, seed=self.seed)

    def generator(self) -> RelationGenerator:
        return RelationGenerator(seed=self.seed, max_tuples=self.max_tuples, domain_size=self.domain_size,
                                 width=self.schema_width, annotation_size=self.sample_size)

    def strategy(self, inst: SemiringInstance) -> CheckStrategy:
        return default_strategy(inst, self.axiom_trials, self.seed, self.sample_size)


def merge_overrides(config: Mapping[str, Any], overrides: Mapping[str, Any]) -> Dict[str, Any]:
    """Command-line values win over the file; unset flags (None) leave the file value."""
    merged = dict(config)
    for dest, value in overrides.items():
        if value is None or dest not in OVERRIDE_KEYS:
            continue
        key = OVERRIDE_KEYS[dest]
        merged[key] = split_csv_list(value) if key == "variables" and isinstance(value, str) else value
    if overrides.get("bound") is not None:
        name = str(merged.get("default_instance", "")).strip().lower()
        if name in BOUND_KEYS:
            merged[BOUND_KEYS[name]] = overrides["bound"]
    return merged


def build_run_config(config: Mapping[str, Any], overrides: Optional[Mapping[str, Any]] = None,
                     inputs: Tuple[str, ...] = ()) -> RunConfig:
    """Validates the merged settings; every input file must exist and be readable."""
    merged = merge_overrides(config, overrides or {})

    name = str(merged.get("default_instance", "")).strip().lower()
    if name not in ALL_NAMES:
        raise ConfigurationError(ERROR_UNKNOWN_INSTANCE.format(name=name), "unknown_instance",
                                 ERROR_UNKNOWN_INSTANCE_SUGGESTION.format(choices=", ".join(ALL_NAMES)))
    variables = merged.get("variables")
    if isinstance(variables, str):
        variables = split_csv_list(variables)
    if not isinstance(variables, (list, tuple)):
        raise _invalid("variables", variables)
    bound = _positive_int(merged, BOUND_KEYS[name]) if name in BOUNDED_FACTORIES else None

    output_format = str(merged.get("output_format", "")).lower()
    if output_format not in OUTPUT_FORMATS:
        raise _invalid("output_format", output_format)
    seed = merged.get("seed")
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise _invalid("seed", seed)

    for path in inputs:
        problem = validate_file_operation(path, "read")
        if problem:
            raise problem

    return RunConfig(
        instance_name=name,
        variables=tuple(str(v) for v in variables),
        bound=bound,
        diff=DiffSemantics.parse(merged.get("diff_semantics", "")),
        seed=seed,
        axiom_trials=_positive_int(merged, "axiom_trials"),
        identity_trials=_positive_int(merged, "identity_trials"),
        registration_samples=_positive_int(merged, "registration_samples"),
        sample_size=_positive_int(merged, "sample_size"),
        max_tuples=_positive_int(merged, "max_tuples", minimum=0),
        domain_size=_positive_int(merged, "domain_size"),
        schema_width=_positive_int(merged, "schema_width"),
        output_format=output_format,
        workers=_positive_int(merged, "workers"),
        allow_order4=bool(merged.get("allow_order4", False)),
        regression_path=str(merged.get("regression_path", "")),
        inputs=tuple(inputs),
    )
