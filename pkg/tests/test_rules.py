from __future__ import annotations

import random

import pytest

from oracles import regex_references
from normcheck.annotate.model import Annotation, AnnotationSet
from normcheck.annotate.pipeline import builtin_phases
from normcheck.annotate.rules import parse_rules, run_phase
from normcheck.corpus import ingest_document
from normcheck.errors import RuleError

META = {"doc_id": "d", "standard_ref": "X 1", "title": "t"}


def doc(text):
    return ingest_document(text.encode("utf-8"), META)


def run(rules, text, existing=()):
    d = doc(text)
    out = run_phase(parse_rules(rules), d, AnnotationSet("s", tuple(existing)))
    return d, [a for a in out if a.ann_id not in {e.ann_id for e in existing}]


def spans(d, anns, ann_type=None):
    return [d.slice(a.span) for a in anns if ann_type is None or a.ann_type == ann_type]


def test_builtin_references():
    (phase,) = builtin_phases()
    text = "See ISO 15531-44, ISO/TS 16668 and IEC 62264-1:2013; also ISO 8601 and iso 9 and ISO."
    d = doc(text)
    out = run_phase(phase, d, AnnotationSet())
    assert spans(d, out) == ["ISO 15531-44", "ISO/TS 16668", "IEC 62264-1:2013", "ISO 8601"]
    assert [a.features["standard_ref"] for a in out] == spans(d, out)
    assert {a.source for a in out} == {"Rule:StandardRef"}


def test_builtin_references_match_regex_oracle():
    (phase,) = builtin_phases()
    pieces = ["ISO", "IEC", "TS", "EN", "IS", "iso", "x", "15531", "44", "2004", "-", "/", ":", " ", " ", "\n", ", ", "é"]
    rng = random.Random(7)
    for _ in range(300):
        text = "".join(rng.choice(pieces) for _ in range(rng.randint(1, 25)))
        d = doc(text) if text.strip() else None
        if d is None:
            continue
        out = run_phase(phase, d, AnnotationSet())
        assert [a.span for a in out] == regex_references(d.text), text


def test_token_tests_and_orth():
    d, anns = run(
        'phase P; rule R: {orth==Upper} {kind==Number} -> Code;',
        "abc DEF 12 Ghi 3 XY 4",
    )
    assert spans(d, anns) == ["DEF 12", "XY 4"]


def test_operators():
    d, anns = run('phase P; rule R: {Word!="a"} {Word=~"^b"} -> X;', "a bb c bd")
    assert spans(d, anns) == ["c bd"]


def test_quantifiers_and_alternatives():
    d, anns = run('phase P; rule R: {Word=="x"} ("-" | "+")+ ({Number})? -> X;', "x-+- 3 x y x+")
    assert spans(d, anns) == ["x-+- 3", "x+"]


def test_bindings_and_features():
    d, anns = run(
        'phase P; rule R: {Word=="part"} ({Number})#num -> Part{n=$num, kind="fascicle"}, Num@num;',
        "see part 44 now",
    )
    by_type = {a.ann_type: a for a in anns}
    assert dict(by_type["Part"].features) == {"n": "44", "kind": "fascicle"}
    assert d.slice(by_type["Part"].span) == "part 44"
    assert d.slice(by_type["Num"].span) == "44"


def test_longest_match_then_priority_then_order():
    rules = """phase P;
    rule Short priority 50: {Word=="flow"} -> A;
    rule Long priority 1: {Word=="flow"} {Word=="control"} -> B;
    rule Tie1 priority 5: {Word=="time"} -> C;
    rule Tie2 priority 9: {Word=="time"} -> D;
    rule Same1 priority 3: {Word=="unit"} -> E;
    rule Same2 priority 3: {Word=="unit"} -> F;
    """
    d, anns = run(rules, "flow control time unit flow")
    assert [(d.slice(a.span), a.ann_type) for a in anns] == [
        ("flow control", "B"),
        ("time", "D"),
        ("unit", "E"),
        ("flow", "A"),
    ]


def test_annotation_tests_see_earlier_phases_only():
    d = doc("spare part here")
    mention = Annotation(0, (0, 10), "Mention", {"ontology_id": "tech"})
    rules = 'phase P; rule R: {ann:Mention, ontology_id=="tech"} {Word} -> Tagged; rule S: {ann:Tagged} -> Never;'
    out = run_phase(parse_rules(rules), d, AnnotationSet("s", (mention,)))
    new = [a for a in out if a.ann_id != 0]
    assert [(a.ann_type, d.slice(a.span)) for a in new] == [("Tagged", "spare part here")]
    assert new[0].ann_id == 1


def test_annotation_feature_mismatch():
    d = doc("spare part")
    mention = Annotation(0, (0, 10), "Mention", {"ontology_id": "isto"})
    out = run_phase(parse_rules('phase P; rule R: {ann:Mention, ontology_id=="tech"} -> T;'), d, AnnotationSet("s", (mention,)))
    assert len(out) == 1


def test_comments_and_control():
    phase = parse_rules('// header\nphase P;\ncontrol LongestMatch;\nrule R: "x" -> X; // trailing\n')
    assert [r.name for r in phase.rules] == ["R"]


@pytest.mark.parametrize(
    "text",
    [
        "",
        "phase P; rule R: -> X;",
        'phase P; rule R: {Word}? -> X;',
        'phase P; rule R: ({Word})* -> X;',
        'phase P; rule R: "a" -> X; rule R: "b" -> Y;',
        'phase P; rule R: "a" -> X{v=$missing};',
        'phase P; rule R: "a" -> X@missing;',
        'phase P; rule R: {Bogus=="a"} -> X;',
        'phase P; rule R: {kind==Nope} -> X;',
        'phase P; control Appelt; rule R: "a" -> X;',
        'phase P; rule R: "a" -> X',
        'phase P; rule R: ( | "a") -> X;',
        "phase P; rule R: % -> X;",
    ],
)
def test_invalid_rules_raise(text):
    with pytest.raises(RuleError):
        parse_rules(text)
