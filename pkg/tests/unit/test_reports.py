"""
Unit tests for report rendering.
"""

import json

from app.core.algebra import CheckReport, VerdictKind, make_witness
from app.instances.security import SecurityLevel
from app.lab.embedding import embedding_table, homomorphism_violations, monus_preservation_report
from app.lab.enumeration import enumerate_finite_semirings
from app.lab.reports import (
    format_report_record, format_report_text, format_reports_csv, render_embedding, render_enumeration,
    render_reports, render_table3, table3_records,
)
from app.lab.table3 import classify_builtins
from app.utils.constants import REPORT_FIELD_ORDER

T, S, NEVER = SecurityLevel.TOP_SECRET, SecurityLevel.SECRET, SecurityLevel.NEVER


def failing_a13() -> CheckReport:
    witness = make_witness(("a", "b", "c"), (T, S, T), T, NEVER, str)
    return CheckReport(subject="A13", instance="security", verdict=VerdictKind.FAILS,
                       strategy="exhaustive", semantics="monus", witness=witness)


class TestCheckReports:
    def test_text_with_witness(self):
        assert format_report_text(failing_a13()) == \
            "A13 security [exhaustive, monus]: Fails  a=T, b=S, c=T  lhs=T  rhs=0s"

    def test_text_with_trials(self):
        report = CheckReport(subject="A1", instance="nat", verdict=VerdictKind.HOLDS_SAMPLED,
                             strategy="sampled(5,seed=1,size=2)", trials=5)
        assert format_report_text(report) == "A1 nat [sampled(5,seed=1,size=2)]: HoldsSampled after 5 trial(s)"

    def test_text_with_reason(self):
        report = CheckReport(subject="A9", instance="int", verdict=VerdictKind.INAPPLICABLE,
                             strategy="exhaustive", semantics="monus", reason="no monus")
        assert format_report_text(report).endswith(": Inapplicable  (no monus)")

    def test_record_field_order(self):
        record = json.loads(format_report_record(failing_a13()))
        assert list(record) == list(REPORT_FIELD_ORDER)
        assert record["witness"] == {"a": "T", "b": "S", "c": "T"}
        assert record["trials"] is None

    def test_csv(self):
        lines = format_reports_csv([failing_a13()]).splitlines()
        assert lines[0] == ",".join(REPORT_FIELD_ORDER)
        assert lines[1] == 'A13,security,monus,exhaustive,Fails,,"a=T, b=S, c=T",T,0s,'

    def test_render_reports_dispatch(self):
        reports = [failing_a13(), failing_a13()]
        assert len(render_reports(reports, "records").splitlines()) == 2
        assert len(render_reports(reports, "csv").splitlines()) == 3
        assert render_reports(reports, "text").splitlines()[0] == format_report_text(reports[0])


class TestTable3Rendering:
    def test_layout(self):
        report = classify_builtins(trials=20, names=("bool", "security"))
        lines = render_table3(report)
        assert lines[0] == "|= A13    |/= A13"
        assert lines[1] == "bool      security"
        assert lines[-1] == "A13 classification: 2 agree, 0 disagree"
        assert lines[3].startswith("bool: holds [exhaustive] published holds, agree")
        assert "lattice pair a=S, b=T" in lines[4]

    def test_records(self):
        report = classify_builtins(trials=20, names=("bool",))
        records = [json.loads(line) for line in table3_records(report)]
        assert records[0]["published"] == "holds"
        assert records[0]["agrees"] is True
        assert records[-1] == {"summary": "A13 classification: 1 agree, 0 disagree"}


class TestCensusAndEmbeddingRendering:
    def test_enumeration(self):
        lines = render_enumeration(enumerate_finite_semirings(2))
        assert lines[:4] == [
            "order 2: 2 commutative semiring(s) up to isomorphism",
            "  naturally ordered: 1",
            "  with monus: 1",
            "  satisfying A13: 1",
        ]
        assert lines[4] == "structure 1: naturally ordered, monus, A9-A12 hold, A13 holds"

    def test_enumeration_dump_lists_every_structure(self):
        lines = render_enumeration(enumerate_finite_semirings(2), dump=True)
        assert "structure 0: not naturally ordered" in lines

    def test_embedding(self):
        lines = render_embedding(embedding_table(), homomorphism_violations(), monus_preservation_report())
        assert lines[0] == "0s -> {}"
        assert lines[4] == "1s -> {1s,C,S,T}"
        assert lines[5] == "homomorphism: holds on all 25 pairs"
        assert lines[6] == "monus not preserved on 6 pair(s):"
        assert len(lines) == 13
