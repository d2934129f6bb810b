from __future__ import annotations

import random

from oracles import brute_force_gazetteer, random_gazetteer_case
from normcheck.annotate.gazetteer import MENTION, gazetteer_annotate
from normcheck.corpus import ingest_document
from normcheck.ontology import build_label_index, case_policy_for, label_tokens, ontology_from_dict

META = {"doc_id": "d", "standard_ref": "X 1", "title": "t"}


def annotate(text, payloads):
    models = [ontology_from_dict(p) for p in payloads]
    doc = ingest_document(text.encode("utf-8"), META)
    return doc, models, gazetteer_annotate(doc, build_label_index(models))


def oracle(text, models):
    labels = []
    for model in models:
        for entry in model.classes:
            for label, _ in entry.labels():
                labels.append(
                    (model.ontology_id, entry.iri, label_tokens(label), case_policy_for(label).value != "AcronymExact")
                )
    return brute_force_gazetteer(text, labels)


def found(anns):
    return {(a.start, a.end, a.features["ontology_id"], a.features["class_iri"]) for a in anns}


def run_oracle_cases(count, seed=20240601):
    rng = random.Random(seed)
    mismatches = []
    for case in range(count):
        text, payloads = random_gazetteer_case(rng)
        doc, models, anns = annotate(text, payloads)
        expected = oracle(doc.text, models)
        if found(anns) != expected:
            mismatches.append((case, text, payloads))
    return mismatches


def test_matches_brute_force_oracle():
    assert run_oracle_cases(150) == []


def payload(oid, *labels):
    return {
        "ontology_id": oid,
        "iri_base": f"http://x/{oid}#",
        "classes": [{"iri": f"C{i}", "primary_label": l} for i, l in enumerate(labels)],
    }


def test_longest_match_wins_within_ontology():
    doc, _, anns = annotate("the flow control unit", [payload("a", "flow", "flow control", "control unit")])
    assert [(doc.slice(a.span), a.features["matched_label"]) for a in anns] == [("flow control", "flow control")]


def test_overlaps_across_ontologies_are_kept():
    doc, _, anns = annotate("spare part list", [payload("a", "part"), payload("b", "spare part")])
    assert sorted((doc.slice(a.span), a.features["ontology_id"]) for a in anns) == [("part", "a"), ("spare part", "b")]


def test_acronym_is_case_exact():
    p = {"ontology_id": "a", "classes": [{"iri": "urn:IS", "primary_label": "international standard", "alt_labels": ["IS"]}]}
    doc, _, anns = annotate("This is an IS. It is.", [p])
    (ann,) = anns
    assert doc.slice(ann.span) == "IS"
    assert ann.ann_type == MENTION
    assert dict(ann.features) == {
        "class_iri": "urn:IS",
        "ontology_id": "a",
        "matched_label": "IS",
        "label_kind": "alternate",
        "case_policy": "AcronymExact",
    }


def test_label_spans_whitespace_and_case():
    doc, _, anns = annotate("Flow\n  Control here", [payload("a", "flow control")])
    assert [doc.slice(a.span) for a in anns] == ["Flow\n  Control"]


def test_word_boundaries_respected():
    _, _, anns = annotate("resources overflow", [payload("a", "resource", "flow")])
    assert list(anns) == []


def test_same_label_two_classes_one_ontology():
    p = {"ontology_id": "a", "classes": [{"iri": "X", "primary_label": "part"}, {"iri": "Y", "primary_label": "item", "alt_labels": ["part"]}]}
    _, _, anns = annotate("a part", [p])
    assert sorted(a.features["class_iri"] for a in anns) == ["X", "Y"]


def test_empty_index():
    _, _, anns = annotate("anything", [])
    assert len(anns) == 0
