import random
from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

from ..core.algebra import SemiringInstance
from ..core.krel import KRelation
from ..utils.constants import (
    DEFAULT_SEED, DEFAULT_MAX_TUPLES, DEFAULT_DOMAIN_SIZE, DEFAULT_SCHEMA_WIDTH, DEFAULT_SAMPLE_SIZE,
)
from ..utils.utils import trial_rng

ATTRIBUTE_NAMES = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class RelationGenerator:
    """Seeded source of small normalized K-relations over integer domains."""

    seed: int = DEFAULT_SEED
    max_tuples: int = DEFAULT_MAX_TUPLES
    domain_size: int = DEFAULT_DOMAIN_SIZE
    width: int = DEFAULT_SCHEMA_WIDTH
    annotation_size: int = DEFAULT_SAMPLE_SIZE

    def __post_init__(self):
        if not 1 <= self.width <= len(ATTRIBUTE_NAMES):
            raise ValueError(f"schema width must be between 1 and {len(ATTRIBUTE_NAMES)}")
        if self.max_tuples < 0 or self.domain_size < 1:
            raise ValueError("max_tuples must be >= 0 and domain_size >= 1")

    @property
    def label(self) -> str:
        return (f"relations(seed={self.seed},tuples<={self.max_tuples},"
                f"domain={self.domain_size},width={self.width})")

    def schema(self) -> Tuple[str, ...]:
        return ATTRIBUTE_NAMES[: self.width]

    def rng(self, trial: int) -> random.Random:
        return trial_rng(self.seed, trial)

    def relation(self, inst: SemiringInstance, rng: random.Random,
                 schema: Sequence[str] = None) -> KRelation:
        schema = tuple(schema or self.schema())
        rows = []
        for _ in range(rng.randint(0, self.max_tuples)):
            row = tuple(rng.randrange(self.domain_size) for _ in schema)
            rows.append((row, inst.sample(rng, self.annotation_size)))
        # duplicates collapse by addition inside KRelation
        return KRelation(inst, schema, rows)

    def relations(self, inst: SemiringInstance, trial: int, count: int) -> Tuple[KRelation, ...]:
        rng = self.rng(trial)
        return tuple(self.relation(inst, rng) for _ in range(count))

    def database(self, inst: SemiringInstance, trial: int,
                 schemas: Mapping[str, Sequence[str]]) -> Dict[str, KRelation]:
        rng = self.rng(trial)
        return {name: self.relation(inst, rng, schema) for name, schema in schemas.items()}
