"""The annotation pipeline: tokenize, gazetteer, rule phases, extractors."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from normcheck.annotate.gazetteer import gazetteer_annotate
from normcheck.annotate.model import EXTRACTOR, Annotation, AnnotationSet
from normcheck.annotate.rules import Phase, parse_rules, run_phase
from normcheck.annotate.tokens import Token, tokenize
from normcheck.corpus import Corpus, Document, TermEntry, extract_term_entries
from normcheck.ontology import LabelIndex, OntologyModel, build_label_index

logger = logging.getLogger(__name__)

TERM_DEFINITION = "TermDefinition"
REFERENCE = "Reference"
DEFAULT_SET = "normcheck"


def builtin_phases() -> tuple[Phase, ...]:
    source = resources.files("normcheck.data").joinpath("standard_refs.rules")
    return (parse_rules(source.read_text(encoding="utf-8"), "<builtin:standard_refs.rules>"),)


@dataclass(frozen=True)
class Pipeline:
    phases: tuple[Phase, ...] = ()
    gazetteer: bool = True
    extractors: bool = True

    @classmethod
    def default(cls, extra_phases: Sequence[Phase] = ()) -> Pipeline:
        return cls(builtin_phases() + tuple(extra_phases))


@dataclass(frozen=True)
class AnnotatedDocument:
    document: Document
    tokens: tuple[Token, ...]
    annotations: AnnotationSet
    term_entries: tuple[TermEntry, ...]


@dataclass
class AnnotatedCorpus:
    corpus: Corpus
    ontologies: tuple[OntologyModel, ...]
    index: LabelIndex
    documents: dict[str, AnnotatedDocument] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)

    @property
    def annotation_sets(self) -> dict[str, AnnotationSet]:
        return {doc_id: item.annotations for doc_id, item in self.documents.items()}

    def __iter__(self) -> Iterator[AnnotatedDocument]:
        return iter(self.documents.values())

    def term_entries(self) -> list[TermEntry]:
        return [entry for item in self for entry in item.term_entries]

    def ontology(self, ontology_id: str) -> OntologyModel:
        for model in self.ontologies:
            if model.ontology_id == ontology_id:
                return model
        raise KeyError(ontology_id)


def _term_annotations(entries: Sequence[TermEntry], first_id: int) -> list[Annotation]:
    out = []
    for offset, entry in enumerate(entries):
        features = {"term": entry.term, "clause_number": entry.clause_number}
        if entry.adapted_from:
            features["adapted_from"] = entry.adapted_from
        out.append(Annotation(first_id + offset, entry.span, TERM_DEFINITION, features, EXTRACTOR))
    return out


def annotate_document(pipeline: Pipeline, doc: Document, index: LabelIndex) -> AnnotatedDocument:
    tokens = tokenize(doc.text)
    annotations = AnnotationSet(DEFAULT_SET)
    if pipeline.gazetteer:
        annotations = gazetteer_annotate(doc, index, tokens, DEFAULT_SET)
    for phase in pipeline.phases:
        annotations = run_phase(phase, doc, annotations, tokens)
    entries = tuple(extract_term_entries(doc))
    if pipeline.extractors:
        annotations = annotations.extended(_term_annotations(entries, annotations.next_id))
    return AnnotatedDocument(doc, tuple(tokens), annotations, entries)


def run_pipeline(
    pipeline: Pipeline,
    corpus: Corpus,
    ontologies: Sequence[OntologyModel] | Mapping[str, OntologyModel],
    jobs: int = 1,
) -> AnnotatedCorpus:
    """Annotate every document of ``corpus``; results are keyed and ordered by doc_id.

    A failure in one document is recorded in ``errors`` and does not stop
    the others.
    """
    models = tuple(ontologies.values()) if isinstance(ontologies, Mapping) else tuple(ontologies)
    index = build_label_index(models)
    result = AnnotatedCorpus(corpus, models, index)
    docs = sorted(corpus.documents, key=lambda d: d.doc_id)
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        futures = [(doc, pool.submit(annotate_document, pipeline, doc, index)) for doc in docs]
        for doc, future in futures:
            try:
                result.documents[doc.doc_id] = future.result()
            except Exception as exc:  # noqa: BLE001 - isolate per-document failures
                logger.error("%s: annotation failed: %s", doc.doc_id, exc)
                result.errors[doc.doc_id] = f"{type(exc).__name__}: {exc}"
    return result
