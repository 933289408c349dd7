"""Axiom and identity suites over one instance."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..core.algebra import (
    EXHAUSTIVE, CheckReport, CheckStrategy, DiffSemantics, Sampled, SemiringInstance, check_axiom,
)
from ..core.background_task import BackgroundTaskRunner
from ..core.equations import ALL_AXIOMS, AxiomId
from ..core.krel import KRelation
from ..utils.constants import (
    LOGGER_NAME, DEFAULT_AXIOM_TRIALS, DEFAULT_IDENTITY_TRIALS, DEFAULT_SEED, DEFAULT_SAMPLE_SIZE,
)
from .generators import RelationGenerator
from .identities import IdentityId, check_identity, lift_axiom_witness

logger = logging.getLogger(LOGGER_NAME)


def default_strategy(inst: SemiringInstance, trials: int = DEFAULT_AXIOM_TRIALS,
                     seed: int = DEFAULT_SEED, size: int = DEFAULT_SAMPLE_SIZE) -> CheckStrategy:
    """Exhaustive on finite carriers, seeded sampling otherwise."""
    return EXHAUSTIVE if inst.is_finite else Sampled(trials, seed, size)


def run_axiom_suite(inst: SemiringInstance, sem: DiffSemantics = DiffSemantics.MONUS,
                    strategy: Optional[CheckStrategy] = None,
                    axioms: Sequence[AxiomId] = ALL_AXIOMS,
                    runner: Optional[BackgroundTaskRunner] = None) -> List[CheckReport]:
    """One report per axiom, in axiom order; unsupported semantics yield Inapplicable entries."""
    sem = DiffSemantics.parse(sem)
    strategy = strategy or default_strategy(inst)
    jobs = [lambda ax=ax: check_axiom(inst, ax, strategy, sem) for ax in axioms]
    return (runner or BackgroundTaskRunner(1)).run(jobs)


def lifted_seed_case(inst: SemiringInstance, identity: IdentityId, sem: DiffSemantics,
                     strategy: Optional[CheckStrategy] = None) -> Optional[Dict[str, KRelation]]:
    """The paired axiom's witness as single-tuple relations, or None when the axiom does not fail."""
    if identity.axiom is None:
        return None
    report = check_axiom(inst, identity.axiom, strategy or default_strategy(inst), sem)
    return lift_axiom_witness(inst, identity.axiom, report.witness) if report.fails else None


def run_identity_suite(inst: SemiringInstance, sem: DiffSemantics = DiffSemantics.MONUS,
                       gen: Optional[RelationGenerator] = None,
                       trials: int = DEFAULT_IDENTITY_TRIALS,
                       identities: Sequence[IdentityId] = tuple(IdentityId),
                       runner: Optional[BackgroundTaskRunner] = None,
                       strategy: Optional[CheckStrategy] = None) -> List[CheckReport]:
    """One report per identity; In starts from the lifted witness of a failing An."""
    sem = DiffSemantics.parse(sem)
    gen = gen or RelationGenerator()
    jobs = [lambda ident=ident: check_identity(inst, ident, sem, gen, trials,
                                               lifted_seed_case(inst, ident, sem, strategy))
            for ident in identities]
    return (runner or BackgroundTaskRunner(1)).run(jobs)


def check_axiom_identity_coupling(inst: SemiringInstance, axiom: Union[AxiomId, str],
                                  sem: DiffSemantics = DiffSemantics.MONUS,
                                  strategy: Optional[CheckStrategy] = None,
                                  gen: Optional[RelationGenerator] = None,
                                  trials: int = DEFAULT_IDENTITY_TRIALS) -> Tuple[CheckReport, CheckReport]:
    """
    Checks An, then In. When An fails, its witness is lifted to single-tuple
    relations and evaluated as In's first case, so In must fail as well.
    """
    axiom = AxiomId.parse(axiom) if isinstance(axiom, str) else axiom
    sem = DiffSemantics.parse(sem)
    axiom_report = check_axiom(inst, axiom, strategy or default_strategy(inst), sem)
    seed_case = lift_axiom_witness(inst, axiom, axiom_report.witness) if axiom_report.fails else None
    identity = IdentityId("I" + axiom.value[1:])
    identity_report = check_identity(inst, identity, sem, gen or RelationGenerator(), trials, seed_case)
    if axiom_report.fails and not identity_report.fails:
        logger.error(f"{axiom.value} fails on {inst.label} but {identity.value} does not")
    return axiom_report, identity_report
