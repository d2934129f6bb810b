"""Entities, cross-references and provenance lifted from pipeline annotations."""

from __future__ import annotations

import json
import re
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from pathlib import Path

from normcheck.annotate.gazetteer import MENTION
from normcheck.annotate.model import EXTRACTOR, Annotation
from normcheck.annotate.pipeline import REFERENCE, TERM_DEFINITION, AnnotatedCorpus
from normcheck.corpus import Span
from normcheck.errors import ManifestError, UnknownSource
from normcheck.ontology import CasePolicy, DomainCategory, OntologyModel

_STANDARD_REF = re.compile(
    r"(?P<org>[A-Za-z]+(?:\s*/\s*[A-Za-z]+|\s+[A-Za-z]+)*)\s*"
    r"(?P<number>\d+)(?P<parts>(?:\s*-\s*\d+)*)(?:\s*:\s*\d+)?"
)


@dataclass(frozen=True)
class Entity:
    entity_id: str
    canonical_term: str
    class_iri: str
    mention_ann_ids: tuple[tuple[str, int], ...]

    def to_json(self) -> dict[str, object]:
        return {
            "entity_id": self.entity_id,
            "canonical_term": self.canonical_term,
            "class_iri": self.class_iri,
            "mentions": [[doc_id, ann_id] for doc_id, ann_id in self.mention_ann_ids],
        }


@dataclass(frozen=True)
class ReferenceLink:
    """A citation of a standard. For registry hits ``target_doc`` holds the
    registry's standard reference rather than a corpus doc_id."""

    from_doc: str
    span: Span
    target_ref: str
    resolved: bool
    target_doc: str | None = None
    cited_text: str = ""

    def to_json(self) -> dict[str, object]:
        return {
            "from_doc": self.from_doc,
            "start": self.span[0],
            "end": self.span[1],
            "cited_text": self.cited_text,
            "target_ref": self.target_ref,
            "resolved": self.resolved,
            "target_doc": self.target_doc,
        }


def canonical_term(surface: str, case_policy: str | CasePolicy) -> str:
    collapsed = " ".join(surface.split())
    if CasePolicy(case_policy) is CasePolicy.ACRONYM_EXACT:
        return collapsed
    return collapsed.lower()


def link_mentions(annotated: AnnotatedCorpus) -> list[Entity]:
    """Group Mentions by (class IRI, canonical surface). Surface identity is
    the only co-reference signal."""
    groups: dict[tuple[str, str], list[tuple[str, int]]] = defaultdict(list)
    for item in annotated:
        doc = item.document
        for ann in item.annotations.of_type(MENTION):
            policy = ann.features.get("case_policy", CasePolicy.CASE_INSENSITIVE.value)
            key = (ann.features["class_iri"], canonical_term(doc.slice(ann.span), policy))
            groups[key].append((doc.doc_id, ann.ann_id))
    return [
        Entity(f"ent-{n:05d}", term, iri, tuple(sorted(mentions)))
        for n, ((iri, term), mentions) in enumerate(sorted(groups.items()), start=1)
    ]


def normalize_standard_ref(text: str) -> str:
    """``ISO TS 16668`` -> ``ISO/TS 16668``; ``ISO 15531-1:2004`` -> ``ISO 15531-1``."""
    m = _STANDARD_REF.fullmatch(text.strip())
    if m is None:
        return " ".join(text.split())
    org = "/".join(part.upper() for part in re.split(r"[\s/]+", m["org"]) if part)
    parts = re.sub(r"\s+", "", m["parts"])
    return f"{org} {m['number']}{parts}"


def load_registry(path: str | Path | None) -> dict[str, str]:
    """Read ``[{standard_ref, title}]``; keys are normalized references."""
    if path is None:
        return {}
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ManifestError(f"registry not found: {path}") from exc
    except (OSError, json.JSONDecodeError) as exc:
        raise ManifestError(f"cannot read registry {path}: {exc}") from exc
    if not isinstance(payload, list):
        raise ManifestError(f"{path}: registry must be a JSON list")
    return {normalize_standard_ref(str(item["standard_ref"])): str(item.get("title", "")) for item in payload}


def extract_references(annotated: AnnotatedCorpus, registry: Mapping[str, str]) -> list[ReferenceLink]:
    in_corpus = {normalize_standard_ref(doc.standard_ref): doc.doc_id for doc in annotated.corpus}
    known = {normalize_standard_ref(ref) for ref in registry}
    links = []
    for item in annotated:
        doc = item.document
        for ann in item.annotations.of_type(REFERENCE):
            cited = ann.features.get("standard_ref") or doc.slice(ann.span)
            target = normalize_standard_ref(cited)
            if target in in_corpus:
                links.append(ReferenceLink(doc.doc_id, ann.span, target, True, in_corpus[target], cited))
            elif target in known:
                links.append(ReferenceLink(doc.doc_id, ann.span, target, True, target, cited))
            else:
                links.append(ReferenceLink(doc.doc_id, ann.span, target, False, None, cited))
    return links


def ontology_categories(models: Iterable[OntologyModel]) -> dict[str, DomainCategory]:
    return {model.ontology_id: model.domain_category for model in models}


def classify_provenance(annotation: Annotation, categories: Mapping[str, DomainCategory]) -> DomainCategory:
    """Knowledge-domain category of an annotation.

    Term definitions extracted from the document itself count as
    domain-specific knowledge.
    """
    explicit = annotation.features.get("domain_category")
    if explicit:
        try:
            return DomainCategory(explicit)
        except ValueError as exc:
            raise UnknownSource(f"annotation {annotation.ann_id}: bad domain_category {explicit!r}") from exc
    ontology_id = annotation.features.get("ontology_id")
    if ontology_id:
        if ontology_id not in categories:
            raise UnknownSource(f"annotation {annotation.ann_id}: unknown ontology {ontology_id!r}")
        return categories[ontology_id]
    if annotation.rule_name is not None and annotation.ann_type == REFERENCE:
        return DomainCategory.STANDARDS_DATABASE
    if annotation.source == EXTRACTOR and annotation.ann_type == TERM_DEFINITION:
        return DomainCategory.DOMAIN_SPECIFIC
    raise UnknownSource(f"annotation {annotation.ann_id} ({annotation.ann_type}) has no attributable source")
