"""End-to-end run: ingest, annotate, extract, populate, check."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from normcheck.annotate.pipeline import AnnotatedCorpus, Pipeline, run_pipeline
from normcheck.annotate.rules import load_rules
from normcheck.consistency import CheckerConfig, ConsistencyFinding, run_all_checks
from normcheck.corpus import Corpus, load_corpus
from normcheck.extract import Entity, ReferenceLink, extract_references, link_mentions, load_registry
from normcheck.ontology import OntologyModel, load_ontology
from normcheck.populate import CandidateClass, propose_candidates


@dataclass
class RunOutputs:
    corpus: Corpus
    ontologies: tuple[OntologyModel, ...]
    annotated: AnnotatedCorpus
    entities: list[Entity]
    links: list[ReferenceLink]
    candidates: list[CandidateClass]
    findings: list[ConsistencyFinding]
    config: CheckerConfig
    failures: dict[str, str] = field(default_factory=dict)


def run_workflow(
    manifest: str | Path,
    ontology_paths: Sequence[str | Path],
    rule_paths: Sequence[str | Path] = (),
    registry_path: str | Path | None = None,
    config: CheckerConfig | None = None,
    jobs: int = 1,
) -> RunOutputs:
    config = config or CheckerConfig()
    ontologies = tuple(load_ontology(path) for path in ontology_paths)
    pipeline = Pipeline.default([load_rules(path) for path in rule_paths])
    registry = load_registry(registry_path)
    corpus, failures = load_corpus(manifest, jobs=jobs)
    annotated = run_pipeline(pipeline, corpus, ontologies, jobs=jobs)
    failures.update(annotated.errors)
    entities = link_mentions(annotated)
    links = extract_references(annotated, registry)
    candidates = propose_candidates(annotated.term_entries(), annotated.index)
    findings = run_all_checks(corpus, annotated, entities, links, candidates, config)
    return RunOutputs(corpus, ontologies, annotated, entities, links, candidates, findings, config, failures)
