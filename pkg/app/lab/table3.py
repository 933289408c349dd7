"""
A13 classification of the built-in m-semirings against the published column.

Each instance gets an A13 check (exhaustive when finite, sampled otherwise),
an exhaustive check on its bounded proxy where one exists, an evaluation of
its registered candidate triples, and for lattices a search for the pair
that forces the failure. Disagreements are reported, never suppressed.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from ..core.algebra import (
    EXHAUSTIVE, CheckReport, ElementOps, SemiringInstance, VerdictKind, check_axiom, make_witness,
    resolve_monus,
)
from ..core.background_task import BackgroundTaskRunner
from ..core.equations import AXIOMS, AxiomId
from ..instances.registry import M_SEMIRING_NAMES, make_instance
from ..managers.performance_monitor import get_performance_monitor
from ..utils.constants import (
    LOGGER_NAME, DEFAULT_AXIOM_TRIALS, DEFAULT_SEED, DEFAULT_TROPICAL_BOUND, DEFAULT_FUZZ_GRID,
    STATUS_TABLE3_SUMMARY, VERDICT_FAILS, VERDICT_HOLDS,
)
from .expectations import Adjudication, ExpectationBook
from .prop34 import NotFound, Prop34Witness, find_prop34_witness
from .suite import default_strategy

logger = logging.getLogger(LOGGER_NAME)

PROXIES = {"tropical": ("tropical_trunc", DEFAULT_TROPICAL_BOUND), "fuzz": ("fuzz_grid", DEFAULT_FUZZ_GRID)}


@dataclass(frozen=True)
class Table3Entry:
    name: str
    label: str
    claim: str
    main: CheckReport
    proxy: Optional[CheckReport]
    candidates: Tuple[CheckReport, ...]
    lattice_witness: Optional[Union[Prop34Witness, NotFound]]
    observed: str
    adjudication: Optional[Adjudication]
    expected: Optional[str]

    @property
    def checks(self) -> Tuple[CheckReport, ...]:
        return (self.main,) + ((self.proxy,) if self.proxy else ()) + self.candidates

    @property
    def agrees(self) -> bool:
        return self.observed == self.claim

    @property
    def unexpected(self) -> bool:
        return self.expected is not None and self.observed != self.expected

    @property
    def deciding_check(self) -> CheckReport:
        """The first failing check, else the main one."""
        return next((c for c in self.checks if c.fails), self.main)


@dataclass(frozen=True)
class Table3Report:
    entries: Tuple[Table3Entry, ...]

    @property
    def agreeing(self) -> Tuple[Table3Entry, ...]:
        return tuple(e for e in self.entries if e.agrees)

    @property
    def disagreeing(self) -> Tuple[Table3Entry, ...]:
        return tuple(e for e in self.entries if not e.agrees)

    @property
    def unexpected(self) -> Tuple[Table3Entry, ...]:
        return tuple(e for e in self.entries if e.unexpected)

    def entry(self, name: str) -> Table3Entry:
        return next(e for e in self.entries if e.name == name)

    @property
    def summary(self) -> str:
        names = ", ".join(e.name for e in self.disagreeing)
        return STATUS_TABLE3_SUMMARY.format(len(self.agreeing), len(self.disagreeing),
                                            f" ({names})" if names else "")


def check_candidate_triple(inst: SemiringInstance, triple: Tuple[str, str, str]) -> CheckReport:
    """Evaluates A13 at one registered triple."""
    eq = AXIOMS[AxiomId.A13]
    values = tuple(inst.read(text) for text in triple)
    lhs, rhs = eq.evaluate(ElementOps(inst, resolve_monus(inst)), values)
    base = dict(subject=AxiomId.A13.value, instance=inst.label, semantics="monus",
                strategy=f"candidate({'; '.join(triple)})", trials=1)
    if lhs == rhs:
        return CheckReport(verdict=VerdictKind.HOLDS_SAMPLED, **base)
    return CheckReport(verdict=VerdictKind.FAILS,
                       witness=make_witness(eq.variables, values, lhs, rhs, inst.render), **base)


def classify_instance(inst: SemiringInstance, trials: int = DEFAULT_AXIOM_TRIALS, seed: int = DEFAULT_SEED,
                      book: Optional[ExpectationBook] = None) -> Table3Entry:
    book = book or ExpectationBook()
    main = check_axiom(inst, AxiomId.A13, default_strategy(inst, trials, seed))
    proxy = None
    if inst.name in PROXIES:
        proxy_name, bound = PROXIES[inst.name]
        proxy = check_axiom(make_instance(proxy_name, bound=bound), AxiomId.A13, EXHAUSTIVE)
    candidates = tuple(check_candidate_triple(inst, t) for t in inst.candidate_triples)
    checks = (main,) + ((proxy,) if proxy else ()) + candidates
    observed = VERDICT_FAILS if any(c.fails for c in checks) else VERDICT_HOLDS
    lattice_witness = find_prop34_witness(inst, trials, seed) if inst.lattice and observed == VERDICT_FAILS else None
    entry = Table3Entry(
        name=inst.name,
        label=inst.label,
        claim=book.claims[inst.name],
        main=main,
        proxy=proxy,
        candidates=candidates,
        lattice_witness=lattice_witness,
        observed=observed,
        adjudication=book.adjudication(inst.name, "monus", "A13"),
        expected=book.a13_expectation(inst.name),
    )
    if not entry.agrees:
        logger.warning(f"A13 on {inst.label}: observed {observed}, published {entry.claim}")
    return entry


def classify_builtins(variables: Optional[Sequence[str]] = None, trials: int = DEFAULT_AXIOM_TRIALS,
                      seed: int = DEFAULT_SEED, runner: Optional[BackgroundTaskRunner] = None,
                      names: Sequence[str] = M_SEMIRING_NAMES) -> Table3Report:
    """One entry per built-in m-semiring, in catalog order."""
    book = ExpectationBook()
    instances = [make_instance(name, variables) for name in names]
    jobs = [lambda inst=inst: classify_instance(inst, trials, seed, book) for inst in instances]
    with get_performance_monitor().track("classify_builtins"):
        entries: List[Table3Entry] = (runner or BackgroundTaskRunner(1)).run(jobs)
    report = Table3Report(tuple(entries))
    logger.info(report.summary)
    return report
