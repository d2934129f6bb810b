from __future__ import annotations

import json

import pytest

from normcheck.annotate.model import EXTRACTOR, GAZETTEER, Annotation, rule_source
from normcheck.annotate.pipeline import Pipeline, run_pipeline
from normcheck.corpus import Corpus, ingest_document
from normcheck.errors import ManifestError, UnknownSource
from normcheck.extract import (
    canonical_term,
    classify_provenance,
    extract_references,
    link_mentions,
    load_registry,
    normalize_standard_ref,
)
from normcheck.ontology import DomainCategory, ontology_from_dict

ISTO = {
    "ontology_id": "isto",
    "iri_base": "http://x/isto#",
    "domain_category": "GenericStandards",
    "classes": [{"iri": "IS", "primary_label": "international standard", "alt_labels": ["IS"]}],
}
MFG = {
    "ontology_id": "mfg",
    "iri_base": "http://x/mfg#",
    "domain_category": "DomainSpecific",
    "classes": [{"iri": "Resource", "primary_label": "resource"}],
}


def small_corpus():
    a = ingest_document(
        "1 Scope\nThis IS covers the Resource and each resource. See ISO 2 and ISO 9999.\n".encode(),
        {"doc_id": "a", "standard_ref": "ISO 1", "title": "A"},
    )
    b = ingest_document(
        "1 Scope\nA resource, per ISO 1:2004 and ISO/TS 16668.\n".encode(),
        {"doc_id": "b", "standard_ref": "ISO 2", "title": "B"},
    )
    return Corpus("c", (a, b))


@pytest.fixture()
def annotated():
    models = [ontology_from_dict(ISTO), ontology_from_dict(MFG)]
    return run_pipeline(Pipeline.default(), small_corpus(), models)


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("ISO 15531-44", "ISO 15531-44"),
        ("ISO 15531-1:2004", "ISO 15531-1"),
        ("ISO/TS 16668", "ISO/TS 16668"),
        ("ISO TS 16668", "ISO/TS 16668"),
        ("ISO / TS  16668", "ISO/TS 16668"),
        ("IEC 62264 - 1 : 2013", "IEC 62264-1"),
        ("iso 8601", "ISO 8601"),
        ("not a ref", "not a ref"),
    ],
)
def test_normalize_standard_ref(text, expected):
    assert normalize_standard_ref(text) == expected


def test_canonical_term():
    assert canonical_term("Flow\n Control", "CaseInsensitive") == "flow control"
    assert canonical_term("IS", "AcronymExact") == "IS"


def test_link_mentions_groups_by_iri_and_surface(annotated):
    entities = link_mentions(annotated)
    summary = [(e.entity_id, e.canonical_term, e.class_iri, len(e.mention_ann_ids)) for e in entities]
    assert summary == [
        ("ent-00001", "IS", "http://x/isto#IS", 1),
        ("ent-00002", "resource", "http://x/mfg#Resource", 3),
    ]


def test_references_resolve_against_corpus_then_registry(annotated):
    links = extract_references(annotated, load_registry(None) | {"ISO/TS 16668": "BSR"})
    got = [(l.from_doc, l.cited_text, l.target_ref, l.resolved, l.target_doc) for l in links]
    assert got == [
        ("a", "ISO 2", "ISO 2", True, "b"),
        ("a", "ISO 9999", "ISO 9999", False, None),
        ("b", "ISO 1:2004", "ISO 1", True, "a"),
        ("b", "ISO/TS 16668", "ISO/TS 16668", True, "ISO/TS 16668"),
    ]


def test_load_registry(tmp_path):
    path = tmp_path / "r.json"
    path.write_text(json.dumps([{"standard_ref": "ISO TS 16668", "title": "x"}]), encoding="utf-8")
    assert load_registry(path) == {"ISO/TS 16668": "x"}
    with pytest.raises(ManifestError):
        load_registry(tmp_path / "missing.json")
    path.write_text("{}", encoding="utf-8")
    with pytest.raises(ManifestError):
        load_registry(path)


def test_classify_provenance():
    cats = {"isto": DomainCategory.GENERIC_STANDARDS}
    mention = Annotation(0, (0, 1), "Mention", {"ontology_id": "isto"}, GAZETTEER)
    assert classify_provenance(mention, cats) is DomainCategory.GENERIC_STANDARDS
    explicit = Annotation(1, (0, 1), "Mention", {"ontology_id": "isto", "domain_category": "ExternalTechnical"})
    assert classify_provenance(explicit, cats) is DomainCategory.EXTERNAL_TECHNICAL
    ref = Annotation(2, (0, 1), "Reference", {}, rule_source("StandardRef"))
    assert classify_provenance(ref, cats) is DomainCategory.STANDARDS_DATABASE
    term = Annotation(3, (0, 1), "TermDefinition", {}, EXTRACTOR)
    assert classify_provenance(term, cats) is DomainCategory.DOMAIN_SPECIFIC
    for bad in (
        Annotation(4, (0, 1), "Mention", {"ontology_id": "nope"}),
        Annotation(5, (0, 1), "Other", {}, rule_source("R")),
        Annotation(6, (0, 1), "Mention", {"domain_category": "Bogus"}),
    ):
        with pytest.raises(UnknownSource):
            classify_provenance(bad, cats)


def test_every_fixture_annotation_has_a_category(fixture_run):
    from normcheck.extract import ontology_categories

    cats = ontology_categories(fixture_run.ontologies)
    for item in fixture_run.annotated:
        for ann in item.annotations:
            classify_provenance(ann, cats)
