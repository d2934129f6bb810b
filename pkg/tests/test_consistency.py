from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import jaccard
from normcheck.consistency import (
    CheckerConfig,
    ConsistencyFinding,
    FindingKind,
    Location,
    Severity,
    check_adapted_definitions,
    check_dangling_references,
    check_duplicate_definitions,
    check_multi_parent,
    check_title_content_mismatch,
    definition_similarity,
    sort_findings,
)
from normcheck.corpus import TermEntry
from normcheck.extract import ReferenceLink
from normcheck.populate import CandidateClass, CandidateStatus

HAND_CASES = [
    ("a b c", "b c d", 2 / 4),
    (
        "elementary activity carried out on a manufacturing resource",
        "elementary activity carried out by a manufacturing process",
        6 / 10,
    ),
    ("ISO 15531-44 part", "ISO 15531 part", 3 / 4),
    ("Flow control", "flow, CONTROL.", 1.0),
    ("one two three", "three four five six", 1 / 6),
    ("x", "", 0.0),
    ("", "...", 1.0),
]


@pytest.mark.parametrize(("a", "b", "expected"), HAND_CASES)
def test_similarity_hand_cases(a, b, expected):
    assert abs(definition_similarity(a, b) - expected) <= 1e-12
    assert abs(jaccard(a, b) - expected) <= 1e-12


text = st.text(alphabet="abcAB 12.-é", max_size=30)


@settings(max_examples=300, deadline=None)
@given(text, text)
def test_similarity_properties(a, b):
    s = definition_similarity(a, b)
    assert 0.0 <= s <= 1.0
    assert s == definition_similarity(b, a)
    assert definition_similarity(a, a) == 1.0
    assert abs(s - jaccard(a, b)) <= 1e-12


def entry(term, definition, doc_id, clause, start=0, adapted=None):
    return TermEntry(term, definition, clause, doc_id, (start, start + 5), adapted)


def test_duplicate_and_divergent():
    entries = [
        entry("flow control", "control of a flow", "p1", "3.1"),
        entry("Flow  Control", "control of a flow", "p2", "3.4"),
        entry("operation", "elementary activity carried out on a manufacturing resource", "p1", "3.2", 10),
        entry("operation", "elementary activity carried out by a manufacturing process", "p3", "3.1"),
        entry("solo", "alone", "p1", "3.3", 20),
    ]
    findings = check_duplicate_definitions(entries, CheckerConfig())
    got = [(f.kind, f.severity, [l.doc_id for l in f.locations], f.similarity) for f in findings]
    assert got == [
        (FindingKind.DUPLICATE_DEFINITION, Severity.WARNING, ["p1", "p2"], 1.0),
        (FindingKind.DIVERGENT_DEFINITION, Severity.ERROR, ["p1", "p3"], pytest.approx(0.6, abs=1e-12)),
    ]
    lenient = check_duplicate_definitions(entries, CheckerConfig(duplicate_similarity_threshold=0.6))
    assert {f.kind for f in lenient} == {FindingKind.DUPLICATE_DEFINITION}


def test_same_clause_twice_is_not_a_duplicate():
    entries = [entry("a", "x", "p1", "3.1"), entry("a", "x", "p1", "3.1")]
    assert check_duplicate_definitions(entries, CheckerConfig()) == []


def test_checker_config_validation():
    with pytest.raises(ValueError):
        CheckerConfig(duplicate_similarity_threshold=0.0)
    with pytest.raises(ValueError):
        CheckerConfig(duplicate_similarity_threshold=1.5)
    with pytest.raises(ValueError):
        CheckerConfig(case_ambiguity_min_count=0)


def test_adapted():
    findings = check_adapted_definitions([entry("bsr", "x", "p", "3.1", adapted="ISO/TS 16668"), entry("y", "z", "p", "3.2")])
    assert [(f.kind, f.severity, f.detail) for f in findings] == [
        (FindingKind.ADAPTED_DEFINITION, Severity.INFO, "definition of 'bsr' is adapted from ISO/TS 16668")
    ]


def test_title_content_mismatch():
    entries = [
        entry("resource view", "resource status: specific aggregation", "p", "3.3"),
        entry("resource view", "Resource  View: fine", "p", "3.4"),
        entry("time", "see note 1: it", "p", "3.5"),
        entry("thing", "plain definition", "p", "3.6"),
    ]
    findings = check_title_content_mismatch(entries)
    assert [(f.kind, f.locations[0].clause_number) for f in findings] == [(FindingKind.TITLE_CONTENT_MISMATCH, "3.3")]


def test_dangling():
    links = [
        ReferenceLink("p", (0, 9), "ISO 99999", False),
        ReferenceLink("p", (20, 25), "ISO 1", True, "q"),
    ]
    (finding,) = check_dangling_references(links)
    assert finding.kind is FindingKind.DANGLING_REFERENCE and finding.severity is Severity.WARNING
    assert "ISO 99999" in finding.detail


def test_multi_parent():
    e = entry("part", "fascicle", "p", "3.2")
    candidates = [
        CandidateClass("part", ("a", "b"), e, "fascicle", CandidateStatus.AMBIGUOUS),
        CandidateClass("tool", ("a",), e, "x", CandidateStatus.NEW),
    ]
    (finding,) = check_multi_parent(candidates)
    assert finding.kind is FindingKind.MULTI_PARENT_WARNING and finding.severity is Severity.WARNING


def test_finding_validation_and_sorting():
    with pytest.raises(ValueError):
        ConsistencyFinding(FindingKind.CASE_AMBIGUITY, Severity.INFO, (), "x")
    with pytest.raises(ValueError):
        ConsistencyFinding(FindingKind.CASE_AMBIGUITY, Severity.INFO, (Location("a", "", (0, 1)),), "x", 1.5)
    f1 = ConsistencyFinding(FindingKind.DANGLING_REFERENCE, Severity.WARNING, (Location("b", "1", (0, 1)),), "x")
    f2 = ConsistencyFinding(FindingKind.ADAPTED_DEFINITION, Severity.INFO, (Location("a", "1", (9, 10)),), "x")
    f3 = ConsistencyFinding(FindingKind.ADAPTED_DEFINITION, Severity.INFO, (Location("a", "1", (3, 4)),), "x")
    assert sort_findings([f1, f2, f3]) == [f3, f2, f1]


def test_case_ambiguity_on_fixture(fixture_run):
    (finding,) = [f for f in fixture_run.findings if f.kind is FindingKind.CASE_AMBIGUITY]
    upper = [l for l in finding.locations if fixture_run.corpus.get(l.doc_id).slice(l.span) == "IS"]
    lower = [l for l in finding.locations if fixture_run.corpus.get(l.doc_id).slice(l.span) == "is"]
    assert len(upper) == 1 and len(lower) == len(finding.locations) - 1 > 0
    assert (upper[0].doc_id, upper[0].clause_number) == ("part01", "1")


def test_case_ambiguity_threshold(fixture_run):
    from normcheck.consistency import check_case_ambiguity

    many = CheckerConfig(case_ambiguity_min_count=10**6)
    assert check_case_ambiguity(fixture_run.annotated, fixture_run.annotated.index, many) == []
