"""
Reference evaluators for cross-checking eval_query.

The bag evaluator works on multisets of tuples (nat under the monus), the
set evaluator on plain sets of tuples (bool). Both use nested loops over
dict-shaped tuples and share nothing with the K-relation operators.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from ..cli.query_parser import parse_query
from ..core.algebra import CheckReport, DiffSemantics, VerdictKind, Witness
from ..core.krel import KRelation, eval_query
from ..core.query import AttrEq, Base, Diff, Join, Project, QueryExpr, Rename, Select, Union
from ..instances.registry import make_instance
from ..utils.constants import LOGGER_NAME, DEFAULT_SEED, ERROR_CONFIGURATION
from ..utils.error_handler import ConfigurationError
from .generators import RelationGenerator

logger = logging.getLogger(LOGGER_NAME)

ORACLE_SCHEMAS: Dict[str, Tuple[str, ...]] = {"R": ("a", "b"), "S": ("a", "b"), "T": ("b", "c")}

QUERY_POOL: Tuple[str, ...] = (
    "R",
    "R UNION S",
    "R JOIN T",
    "PROJECT[a] R",
    "SELECT[a=1] R",
    "SELECT[a=b] S",
    "RENAME[c->a] T",
    "R - S",
    "R - S - R",
    "R - (S - R)",
    "PROJECT[a] (R - S)",
    "PROJECT[a,c] (R JOIN T)",
    "(R UNION S) JOIN T",
    "S - RENAME[b->a,c->b] T",
    "SELECT[c=2] ((R - S) JOIN T)",
    "PROJECT[b] R UNION PROJECT[b] T",
)


def _matches(atom, t: Mapping[str, object]) -> bool:
    if isinstance(atom, AttrEq):
        return t[atom.left] == t[atom.right]
    return t[atom.attr] == atom.value


def _compatible(t1: Mapping[str, object], t2: Mapping[str, object]) -> bool:
    return all(t1[k] == t2[k] for k in t1 if k in t2)


def naive_bag_eval(db: Mapping[str, Counter], q: QueryExpr) -> Counter:
    """Multiset semantics; difference truncates at zero."""
    if isinstance(q, Base):
        return Counter(db[q.name])
    if isinstance(q, Union):
        return naive_bag_eval(db, q.left) + naive_bag_eval(db, q.right)
    if isinstance(q, Diff):
        # Counter subtraction drops non-positive counts
        return naive_bag_eval(db, q.left) - naive_bag_eval(db, q.right)
    if isinstance(q, Join):
        out: Counter = Counter()
        for t1, c1 in naive_bag_eval(db, q.left).items():
            for t2, c2 in naive_bag_eval(db, q.right).items():
                d1, d2 = dict(t1), dict(t2)
                if _compatible(d1, d2):
                    out[frozenset({**d1, **d2}.items())] += c1 * c2
        return out
    if isinstance(q, Project):
        out = Counter()
        for t, c in naive_bag_eval(db, q.child).items():
            d = dict(t)
            out[frozenset((a, d[a]) for a in q.attrs)] += c
        return out
    if isinstance(q, Select):
        return Counter({t: c for t, c in naive_bag_eval(db, q.child).items()
                        if all(_matches(atom, dict(t)) for atom in q.predicate.atoms)})
    if isinstance(q, Rename):
        mapping = dict(q.mapping)
        return Counter({frozenset((mapping.get(a, a), v) for a, v in t): c
                        for t, c in naive_bag_eval(db, q.child).items()})
    raise TypeError(f"not a query node: {q!r}")


def naive_set_eval(db: Mapping[str, set], q: QueryExpr) -> set:
    """Set semantics; difference is set difference."""
    if isinstance(q, Base):
        return set(db[q.name])
    if isinstance(q, Union):
        return naive_set_eval(db, q.left) | naive_set_eval(db, q.right)
    if isinstance(q, Diff):
        return naive_set_eval(db, q.left) - naive_set_eval(db, q.right)
    if isinstance(q, Join):
        out = set()
        for t1 in naive_set_eval(db, q.left):
            for t2 in naive_set_eval(db, q.right):
                d1, d2 = dict(t1), dict(t2)
                if _compatible(d1, d2):
                    out.add(frozenset({**d1, **d2}.items()))
        return out
    if isinstance(q, Project):
        return {frozenset((a, dict(t)[a]) for a in q.attrs) for t in naive_set_eval(db, q.child)}
    if isinstance(q, Select):
        return {t for t in naive_set_eval(db, q.child)
                if all(_matches(atom, dict(t)) for atom in q.predicate.atoms)}
    if isinstance(q, Rename):
        mapping = dict(q.mapping)
        return {frozenset((mapping.get(a, a), v) for a, v in t) for t in naive_set_eval(db, q.child)}
    raise TypeError(f"not a query node: {q!r}")


def as_bag(relation: KRelation) -> Counter:
    return Counter({frozenset(zip(relation.schema, row)): k for row, k in relation.items()})


def as_set(relation: KRelation) -> set:
    return {frozenset(zip(relation.schema, row)) for row, _ in relation.items()}


def _render_naive(value) -> str:
    if isinstance(value, Counter):
        rows = sorted((sorted(t), c) for t, c in value.items())
        return "{" + "; ".join(f"{dict(t)} x{c}" for t, c in rows) + "}"
    return "{" + "; ".join(str(dict(sorted(t))) for t in sorted(sorted(t) for t in value)) + "}"


@dataclass(frozen=True)
class OracleMismatch:
    case: int
    query: str
    expected: str
    observed: str


@dataclass(frozen=True)
class OracleReport:
    instance: str
    cases: int
    seed: int
    queries: Tuple[str, ...]
    mismatches: Tuple[OracleMismatch, ...]

    @property
    def agrees(self) -> bool:
        return not self.mismatches

    def to_check_report(self) -> CheckReport:
        base = dict(subject="ORACLE", instance=self.instance, semantics=DiffSemantics.MONUS.value,
                    strategy=f"oracle({self.cases},seed={self.seed},queries={len(self.queries)})")
        if self.agrees:
            return CheckReport(verdict=VerdictKind.HOLDS_SAMPLED, trials=self.cases * len(self.queries), **base)
        first = self.mismatches[0]
        witness = Witness(
            bindings=(("case", first.case), ("query", first.query)),
            lhs=first.observed, rhs=first.expected,
            rendered_bindings=(("case", str(first.case)), ("query", first.query)),
            rendered_lhs=first.observed, rendered_rhs=first.expected,
        )
        return CheckReport(verdict=VerdictKind.FAILS, witness=witness,
                           details=(("mismatches", len(self.mismatches)),), **base)


ORACLES = {"nat": (naive_bag_eval, as_bag), "bool": (naive_set_eval, as_set)}


def run_oracle_equivalence(instance_name: str, cases: int = 1000, seed: int = DEFAULT_SEED,
                           gen: RelationGenerator = None) -> OracleReport:
    """eval_query under the monus against the naive evaluator on `cases` seeded databases."""
    if instance_name not in ORACLES:
        raise ConfigurationError(
            ERROR_CONFIGURATION.format(key="oracle instance", value=instance_name),
            "configuration_error", "The oracle covers nat (bags) and bool (sets).",
        )
    naive_eval, convert = ORACLES[instance_name]
    inst = make_instance(instance_name)
    gen = gen or RelationGenerator(seed=seed)
    trees = [(text, parse_query(text, ORACLE_SCHEMAS)) for text in QUERY_POOL]

    mismatches = []
    for case in range(cases):
        db = gen.database(inst, case, ORACLE_SCHEMAS)
        naive_db = {name: convert(rel) for name, rel in db.items()}
        for text, tree in trees:
            expected = naive_eval(naive_db, tree)
            observed = convert(eval_query(db, tree, DiffSemantics.MONUS))
            if observed != expected:
                mismatches.append(OracleMismatch(case, text, _render_naive(expected), _render_naive(observed)))
    if mismatches:
        logger.warning(f"Oracle found {len(mismatches)} mismatch(es) on {inst.label}")
    return OracleReport(inst.label, cases, gen.seed, tuple(q for q, _ in trees), tuple(mismatches))
