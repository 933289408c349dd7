"""
Command-line front end.

Subcommands: eval, check, enumerate, table3, embed-security and instances.
Each command
writes its report to `out` and returns the process exit code: 0 when every
verdict meets the expectation book, 1 for usage and diagnostic errors, 2 for
an unexpected verdict.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple

from ..core.algebra import (
    CheckReport, SemiringInstance, check_galois, check_monus_uniqueness,
)
from ..core.background_task import get_background_runner
from ..core.equations import ALL_AXIOMS, AxiomId
from ..core.krel import KRelation, eval_query
from ..core.relation_io import load_database, relation_to_csv, render_relation_text, save_relation_csv
from ..instances.registry import ALL_NAMES, BOUNDED_NAMES, builtin_instances, make_instance, takes_variables
from ..lab.embedding import (
    check_embedded_axiom, embedded_image, embedding_table, homomorphism_violations,
    monus_preservation_report,
)
from ..lab.enumeration import enumerate_finite_semirings
from ..lab.expectations import ExpectationBook
from ..lab.identities import IdentityId
from ..lab.oracles import run_oracle_equivalence
from ..lab.prop34 import NotFound, find_prop34_witness
from ..lab.reports import (
    format_reports_csv, render_embedding, render_enumeration, render_reports, render_table3,
    table3_records,
)
from ..lab.suite import run_axiom_suite, run_identity_suite
from ..lab.table3 import classify_builtins
from ..managers.config_manager import ConfigManager
from ..managers.performance_monitor import get_performance_monitor
from ..managers.regression_store import RegressionStore
from ..utils.constants import (
    APP_NAME, APP_VERSION, LOGGER_NAME, OUTPUT_FORMATS, ANNOTATION_COLUMN, VERDICT_FAILS,
    EXIT_OK, EXIT_DIAGNOSTIC, EXIT_UNEXPECTED_VERDICT,
    ERROR_SELECTOR, ERROR_SELECTOR_SUGGESTION, ERROR_CONFIGURATION,
)
from ..utils.error_handler import AppError, ConfigurationError, get_error_handler
from ..utils.utils import setup_application_logging, split_csv_list
from .query_parser import parse_query
from .run_config import RunConfig, build_run_config, merge_overrides

logger = logging.getLogger(LOGGER_NAME)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class LabArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the diagnostic code; 2 is reserved for unexpected verdicts."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DIAGNOSTIC, f"{self.prog}: error: {message}\n")


def _selector_error(selector: str) -> AppError:
    return AppError(ERROR_SELECTOR.format(selector=selector), "invalid_selector", ERROR_SELECTOR_SUGGESTION)


# --- Argument parsing ---

def _common_options() -> argparse.ArgumentParser:
    # unset flags stay None so the configuration file value survives
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("run options")
    group.add_argument("--instance", choices=ALL_NAMES, help="annotation instance")
    group.add_argument("--vars", help="comma-separated variables for X-parameterized instances")
    group.add_argument("--bound", type=int, help="bound of nat_sat, tropical_trunc or fuzz_grid")
    group.add_argument("--diff", choices=("monus", "ring", "cond"), help="difference semantics")
    group.add_argument("--seed", type=int, help="seed for every sampled check")
    group.add_argument("--trials", type=int, help="sampled trials per axiom check")
    group.add_argument("--identity-trials", type=int, help="sampled relation tuples per identity check")
    group.add_argument("--format", choices=OUTPUT_FORMATS, help="output format")
    group.add_argument("--workers", type=int, help="worker threads for independent checks")
    group.add_argument("--allow-order4", action="store_true", default=None,
                       help="lift the carrier-order bound of enumeration and monus uniqueness to 4")
    group.add_argument("--config", type=Path, help="configuration file (default: config/lab_config.json)")
    group.add_argument("--save-config", action="store_true",
                       help="write the effective settings back to the configuration file")
    group.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="logging level")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = LabArgumentParser(prog="krel-lab", description=f"{APP_NAME}: K-relations and the axioms of difference.")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p_eval = commands.add_parser("eval", parents=[common], help="evaluate a query over annotated CSV relations")
    p_eval.add_argument("query", help="query text, e.g. \"R JOIN (S - T)\"")
    p_eval.add_argument("csv", nargs="+", help="relation files; each is named after its file stem")
    p_eval.add_argument("--save", type=Path, metavar="PATH", help="also write the result relation as CSV")
    p_eval.set_defaults(handler=_run_eval)

    p_check = commands.add_parser("check", parents=[common], help="check axioms, identities and lab properties")
    p_check.add_argument("--axiom", action="append", default=[], metavar="An",
                         help="axiom to check (repeatable, comma lists accepted)")
    p_check.add_argument("--identity", action="append", default=[], metavar="In",
                         help="relational identity to check: I1..I13, EXT1, EXT2")
    p_check.add_argument("--all-axioms", action="store_true", help="check A1..A13")
    p_check.add_argument("--all-identities", action="store_true", help="check I1..I13, EXT1, EXT2")
    p_check.add_argument("--galois", action="store_true", help="check a - b <= c iff a <= b + c")
    p_check.add_argument("--monus-uniqueness", action="store_true",
                         help="count operation tables satisfying A9..A12")
    p_check.add_argument("--prop34", action="store_true", help="search the lattice pair that breaks A13")
    p_check.add_argument("--oracle", action="store_true", help="compare eval_query with a naive evaluator")
    p_check.add_argument("--embedded", action="store_true",
                         help="check the selected axioms over the image of the security embedding")
    p_check.add_argument("--table3", action="store_true", help="classify every built-in m-semiring on A13")
    p_check.set_defaults(handler=_run_check)

    p_enum = commands.add_parser("enumerate", parents=[common], help="census of finite commutative semirings")
    p_enum.add_argument("order", type=int, help="carrier order (2 or 3; 4 with --allow-order4)")
    p_enum.add_argument("--dump", action="store_true", help="print the operation tables of every structure")
    p_enum.add_argument("--labels", help="permutation of 0..n-1 used during enumeration, e.g. 1,0,2")
    p_enum.set_defaults(handler=_run_enumerate)

    p_table3 = commands.add_parser("table3", parents=[common], help="same as check --table3")
    p_table3.set_defaults(handler=_run_table3)

    p_embed = commands.add_parser("embed-security", parents=[common], help="print the security embedding")
    p_embed.set_defaults(handler=_run_embed_security)

    p_instances = commands.add_parser("instances", parents=[common], help="list the registered instances")
    p_instances.set_defaults(handler=_run_instances)
    return parser


# --- Check selection ---

@dataclass(frozen=True)
class CheckSelection:
    axioms: Tuple[AxiomId, ...] = ()
    identities: Tuple[IdentityId, ...] = ()
    galois: bool = False
    monus_uniqueness: bool = False
    prop34: bool = False
    oracle: bool = False
    embedded: bool = False
    table3: bool = False

    @property
    def empty(self) -> bool:
        return not (self.axioms or self.identities or self.galois or self.monus_uniqueness
                    or self.prop34 or self.oracle or self.table3)


def _parse_selectors(values: Sequence[str], parse):
    parsed = []
    for value in values:
        for part in split_csv_list(value):
            try:
                item = parse(part)
            except ValueError:
                raise _selector_error(part)
            if item not in parsed:
                parsed.append(item)
    return tuple(parsed)


def selection_from_args(args: argparse.Namespace) -> CheckSelection:
    axioms = ALL_AXIOMS if args.all_axioms else _parse_selectors(args.axiom, AxiomId.parse)
    identities = tuple(IdentityId) if args.all_identities else _parse_selectors(args.identity, IdentityId.parse)
    selection = CheckSelection(axioms, identities, args.galois, args.monus_uniqueness, args.prop34,
                               args.oracle, args.embedded, args.table3)
    if selection.empty:
        raise _selector_error("(none)")
    if selection.embedded and (identities or selection.galois or selection.monus_uniqueness or selection.prop34):
        raise _selector_error("--embedded applies to axioms only")
    return selection


# --- Commands ---

def _emit(out: TextIO, lines: Sequence[str]):
    for line in lines:
        print(line, file=out)


def format_relation(relation: KRelation, output_format: str) -> List[str]:
    if output_format == "csv":
        return relation_to_csv(relation).rstrip("\n").split("\n")
    if output_format == "records":
        render = relation.instance.render
        return [json.dumps({**dict(zip(relation.schema, row)), ANNOTATION_COLUMN: render(k)}, ensure_ascii=False)
                for row, k in relation.items()]
    return render_relation_text(relation)


def cmd_eval(cfg: RunConfig, query: str, out: TextIO, save_path: Optional[Path] = None) -> int:
    """Loads the input relations, evaluates `query` under the configured semantics and prints the result."""
    inst = cfg.instance()
    db = load_database(cfg.inputs, inst)
    tree = parse_query(query, {name: rel.schema for name, rel in db.items()},
                       {name: rel.column_kinds() for name, rel in db.items()})
    result = eval_query(db, tree, cfg.diff)
    _emit(out, format_relation(result, cfg.output_format))
    if save_path is not None:
        save_relation_csv(result, str(save_path))
        logger.info(f"Saved {len(result)} row(s) to {save_path}")
    return EXIT_OK


def _report_unexpected(book: ExpectationBook, inst: SemiringInstance, reports: Sequence[CheckReport]) -> bool:
    unexpected = [r for r in reports if book.is_unexpected(inst, r)]
    for report in unexpected:
        expected = book.expected(inst, report.semantics, report.subject)
        logger.error(f"Unexpected verdict: {report.subject} on {report.instance} is {report.outcome}, expected {expected}")
    return bool(unexpected)


def _prop34_lines(inst: SemiringInstance, cfg: RunConfig, book: ExpectationBook) -> Tuple[List[str], bool]:
    found = find_prop34_witness(inst, cfg.axiom_trials, cfg.seed)
    if cfg.output_format == "records":
        record = {"subject": "PROP34", "instance": inst.label, "found": not isinstance(found, NotFound),
                  "result": found.describe()}
        line = json.dumps(record, ensure_ascii=False)
    else:
        line = f"PROP34 {inst.label}: {found.describe()}"
    unexpected = isinstance(found, NotFound) and book.a13_expectation(inst.name) == VERDICT_FAILS
    if unexpected:
        logger.error(f"No lattice witness found on {inst.label} although A13 is expected to fail")
    return [line], unexpected


def cmd_check(cfg: RunConfig, selection: CheckSelection, out: TextIO,
              book: Optional[ExpectationBook] = None) -> int:
    book = book or ExpectationBook()
    unexpected = False

    if selection.table3:
        unexpected |= cmd_table3(cfg, out) != EXIT_OK
        if replace(selection, table3=False).empty:
            return EXIT_UNEXPECTED_VERDICT if unexpected else EXIT_OK

    inst = embedded_image() if selection.embedded else cfg.instance()
    runner = get_background_runner(cfg.workers)
    reports: List[CheckReport] = []
    with get_performance_monitor().track(f"check on {inst.label}"):
        if selection.axioms:
            if selection.embedded:
                reports += runner.run([lambda ax=ax: check_embedded_axiom(ax) for ax in selection.axioms])
            else:
                reports += run_axiom_suite(inst, cfg.diff, cfg.strategy(inst), selection.axioms, runner)
        if selection.identities:
            reports += run_identity_suite(inst, cfg.diff, cfg.generator(), cfg.identity_trials,
                                          selection.identities, runner, cfg.strategy(inst))
        if selection.galois:
            reports.append(check_galois(inst, cfg.strategy(inst)))
        if selection.monus_uniqueness:
            reports.append(check_monus_uniqueness(inst, cfg.allow_order4))
        if selection.oracle:
            oracle = run_oracle_equivalence(cfg.instance_name, cfg.identity_trials, cfg.seed, cfg.generator())
            reports.append(oracle.to_check_report())

    if reports:
        print(render_reports(reports, cfg.output_format), file=out)
        unexpected |= _report_unexpected(book, inst, reports)
    if selection.prop34:
        lines, missing = _prop34_lines(inst, cfg, book)
        _emit(out, lines)
        unexpected |= missing
    return EXIT_UNEXPECTED_VERDICT if unexpected else EXIT_OK


def _parse_labels(text: Optional[str], order: int) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        labels = tuple(int(part) for part in split_csv_list(text))
    except ValueError:
        labels = ()
    if sorted(labels) != list(range(order)):
        raise ConfigurationError(ERROR_CONFIGURATION.format(key="labels", value=text), "configuration_error",
                                 f"Pass a permutation of 0..{order - 1}.")
    return labels


def cmd_enumerate(cfg: RunConfig, order: int, out: TextIO, dump: bool = False,
                  labels: Optional[Tuple[int, ...]] = None) -> int:
    runner = get_background_runner(cfg.workers)
    with get_performance_monitor().track(f"enumerate order {order}"):
        report = enumerate_finite_semirings(order, cfg.allow_order4, labels, runner)
    status, stored = RegressionStore(Path(cfg.regression_path)).check_or_record(order, report.counts)

    if cfg.output_format == "records":
        print(json.dumps({"order": order, **report.counts, "candidates_examined": report.candidates_examined,
                          "regression": status}), file=out)
    else:
        _emit(out, render_enumeration(report, dump))
        print(f"regression: {status}" + (f" (stored {stored})" if status == "mismatch" else ""), file=out)

    if not report.consistent:
        logger.error(f"Order {order}: an enumerated structure with a derived monus violates A9-A12")
        return EXIT_UNEXPECTED_VERDICT
    return EXIT_UNEXPECTED_VERDICT if status == "mismatch" else EXIT_OK


def cmd_table3(cfg: RunConfig, out: TextIO) -> int:
    runner = get_background_runner(cfg.workers)
    report = classify_builtins(cfg.variables, cfg.axiom_trials, cfg.seed, runner)
    if cfg.output_format == "records":
        _emit(out, table3_records(report))
    elif cfg.output_format == "csv":
        print(format_reports_csv(e.deciding_check for e in report.entries).rstrip("\n"), file=out)
    else:
        _emit(out, render_table3(report))
    for entry in report.unexpected:
        logger.error(f"Unexpected A13 verdict on {entry.label}: {entry.observed}, expected {entry.expected}")
    return EXIT_UNEXPECTED_VERDICT if report.unexpected else EXIT_OK


def cmd_embed_security(cfg: RunConfig, out: TextIO) -> int:
    violations = homomorphism_violations()
    a13 = check_embedded_axiom(AxiomId.A13)
    _emit(out, render_embedding(embedding_table(), violations, monus_preservation_report()))
    print(render_reports([a13], cfg.output_format), file=out)
    return EXIT_UNEXPECTED_VERDICT if violations or not a13.holds else EXIT_OK


def describe_instance(inst: SemiringInstance) -> dict:
    difference = "monus" if inst.monus is not None else "ring" if inst.negate is not None else "none"
    return {
        "instance": inst.label,
        "display": inst.display,
        "carrier": f"finite({len(inst.elements)})" if inst.is_finite else "countable",
        "difference": difference,
        "lattice": inst.lattice,
        "variables": takes_variables(inst.name),
        "proxy_for": inst.proxy_for,
    }


def cmd_instances(cfg: RunConfig, out: TextIO) -> int:
    """One line per registered instance: carrier, difference operation and parameters."""
    instances = list(builtin_instances(cfg.variables))
    instances += [make_instance(name, bound=cfg.bound if name == cfg.instance_name else None)
                  for name in BOUNDED_NAMES]
    for inst in instances:
        info = describe_instance(inst)
        if cfg.output_format == "records":
            print(json.dumps(info, ensure_ascii=False), file=out)
            continue
        notes = [note for flag, note in ((info["lattice"], "lattice"), (info["variables"], "takes --vars"))
                 if flag]
        if info["proxy_for"]:
            notes.append(f"proxy for {info['proxy_for']}")
        print(f"{info['instance']:<18} {info['display']:<10} {info['carrier']:<12} {info['difference']:<6} "
              f"{', '.join(notes)}".rstrip(), file=out)
    return EXIT_OK


# --- Dispatch ---

def _run_eval(cfg: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    return cmd_eval(cfg, args.query, out, args.save)


def _run_check(cfg: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    return cmd_check(cfg, selection_from_args(args), out)


def _run_enumerate(cfg: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    return cmd_enumerate(cfg, args.order, out, args.dump, _parse_labels(args.labels, args.order))


def _run_table3(cfg: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    return cmd_table3(cfg, out)


def _run_embed_security(cfg: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    return cmd_embed_security(cfg, out)


def _run_instances(cfg: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    return cmd_instances(cfg, out)


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
         err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)

    config_manager = ConfigManager(args.config)
    log_config = dict(config_manager.config)
    if args.log_level:
        log_config["log_level"] = args.log_level
    setup_application_logging(log_config)

    error_handler = get_error_handler()
    try:
        cfg = build_run_config(config_manager.config, vars(args), tuple(getattr(args, "csv", ()) or ()))
        logger.debug(f"Running '{args.command}' with {cfg}")
        if args.save_config:
            config_manager.update_config(merge_overrides(config_manager.config, vars(args)))
            config_manager.save_config()
        return args.handler(cfg, args, out)
    except AppError as e:
        error_handler.handle_error(e, context=args.command)
        print(error_handler.format_error_message(e), file=err)
        logger.debug(error_handler.create_error_report())
        return EXIT_DIAGNOSTIC
    except Exception as e:
        app_error = error_handler.handle_error(e, context=args.command)
        print(error_handler.format_error_message(app_error), file=err)
        logger.debug(error_handler.create_error_report())
        return EXIT_DIAGNOSTIC
