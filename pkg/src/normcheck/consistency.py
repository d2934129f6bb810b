"""Cross-document consistency checks over terms, references and annotations."""

from __future__ import annotations

import re
from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from normcheck.annotate.gazetteer import MENTION
from normcheck.annotate.pipeline import AnnotatedCorpus
from normcheck.annotate.tokens import TokenKind, tokenize
from normcheck.corpus import Corpus, Document, Span, TermEntry, extract_term_entries
from normcheck.extract import Entity, ReferenceLink
from normcheck.ontology import LabelIndex
from normcheck.populate import CandidateClass, CandidateStatus

_LEAD_IN = re.compile(r"\s*(?P<term>[^\W\d_]+(?:[ \t]+[^\W\d_]+)*)[ \t]*:")


class FindingKind(str, Enum):
    DUPLICATE_DEFINITION = "DuplicateDefinition"
    DIVERGENT_DEFINITION = "DivergentDefinition"
    ADAPTED_DEFINITION = "AdaptedDefinition"
    DANGLING_REFERENCE = "DanglingReference"
    CASE_AMBIGUITY = "CaseAmbiguity"
    TITLE_CONTENT_MISMATCH = "TitleContentMismatch"
    MULTI_PARENT_WARNING = "MultiParentWarning"


class Severity(str, Enum):
    INFO = "Info"
    WARNING = "Warning"
    ERROR = "Error"


@dataclass(frozen=True)
class Location:
    doc_id: str
    clause_number: str
    span: Span


@dataclass(frozen=True)
class ConsistencyFinding:
    kind: FindingKind
    severity: Severity
    locations: tuple[Location, ...]
    detail: str
    similarity: float | None = None

    def __post_init__(self) -> None:
        if not self.locations:
            raise ValueError(f"{self.kind.value} finding without a location")
        if self.similarity is not None and not 0.0 <= self.similarity <= 1.0:
            raise ValueError(f"similarity {self.similarity} outside [0, 1]")

    def sort_key(self) -> tuple[str, int, str, str]:
        first = self.locations[0]
        return (first.doc_id, first.span[0], self.kind.value, self.detail)

    def to_json(self) -> dict[str, object]:
        return {
            "kind": self.kind.value,
            "severity": self.severity.value,
            "detail": self.detail,
            "similarity": self.similarity,
            "locations": [
                {"doc_id": loc.doc_id, "clause": loc.clause_number, "start": loc.span[0], "end": loc.span[1]}
                for loc in self.locations
            ],
        }


@dataclass(frozen=True)
class CheckerConfig:
    duplicate_similarity_threshold: float = 0.95
    case_ambiguity_min_count: int = 1

    def __post_init__(self) -> None:
        if not 0.0 < self.duplicate_similarity_threshold <= 1.0:
            raise ValueError("duplicate_similarity_threshold must lie in (0, 1]")
        if self.case_ambiguity_min_count < 1:
            raise ValueError("case_ambiguity_min_count must be at least 1")


def _vocabulary(text: str) -> set[str]:
    return {tok.surface.lower() for tok in tokenize(text) if tok.kind in (TokenKind.WORD, TokenKind.NUMBER)}


def definition_similarity(a: str, b: str) -> float:
    """Jaccard similarity of the case-folded word and number tokens."""
    left, right = _vocabulary(a), _vocabulary(b)
    if not left and not right:
        return 1.0
    if not left or not right:
        return 0.0
    return len(left & right) / len(left | right)


def _location(entry: TermEntry) -> Location:
    return Location(entry.doc_id, entry.clause_number, entry.span)


def _fold_term(term: str) -> str:
    return " ".join(term.split()).casefold()


def check_duplicate_definitions(term_entries: Sequence[TermEntry], config: CheckerConfig) -> list[ConsistencyFinding]:
    groups: dict[str, list[TermEntry]] = defaultdict(list)
    for entry in term_entries:
        groups[_fold_term(entry.term)].append(entry)
    findings = []
    for term, entries in groups.items():
        clauses = {(e.doc_id, e.clause_number) for e in entries}
        if len(clauses) < 2:
            continue
        entries = sorted(entries, key=lambda e: (e.doc_id, e.span[0]))
        lowest = min(definition_similarity(x.definition, y.definition) for x, y in combinations(entries, 2))
        where = ", ".join(f"{e.doc_id} {e.clause_number}" for e in entries)
        if lowest >= config.duplicate_similarity_threshold:
            kind, severity = FindingKind.DUPLICATE_DEFINITION, Severity.WARNING
            detail = f"term '{term}' is defined {len(entries)} times ({where})"
        else:
            kind, severity = FindingKind.DIVERGENT_DEFINITION, Severity.ERROR
            detail = f"term '{term}' has diverging definitions ({where}); similarity {lowest:.3f}"
        findings.append(
            ConsistencyFinding(kind, severity, tuple(_location(e) for e in entries), detail, lowest)
        )
    return findings


def check_adapted_definitions(term_entries: Sequence[TermEntry]) -> list[ConsistencyFinding]:
    return [
        ConsistencyFinding(
            FindingKind.ADAPTED_DEFINITION,
            Severity.INFO,
            (_location(entry),),
            f"definition of '{entry.term}' is adapted from {entry.adapted_from}",
        )
        for entry in term_entries
        if entry.adapted_from
    ]


def check_case_ambiguity(
    annotated: AnnotatedCorpus,
    index: LabelIndex,
    config: CheckerConfig | None = None,
) -> list[ConsistencyFinding]:
    """Flag acronym labels whose lowercase form also occurs as ordinary words."""
    config = config or CheckerConfig()
    labels: dict[tuple[str, ...], str] = {}
    for hit in index.acronym_hits():
        labels.setdefault(hit.tokens, hit.label)
    findings = []
    for tokens, label in sorted(labels.items()):
        lowered = tuple(tok.lower() for tok in tokens)
        if lowered == tokens:
            continue
        acronym: list[Location] = []
        plain: list[Location] = []
        width = len(tokens)
        for item in annotated:
            doc = item.document
            for ann in item.annotations.of_type(MENTION):
                if ann.features.get("matched_label") == label:
                    acronym.append(Location(doc.doc_id, doc.clause_number_at(ann.start), ann.span))
            words = [tok for tok in item.tokens if tok.kind is not TokenKind.SPACE]
            for i in range(len(words) - width + 1):
                window = words[i:i + width]
                if all(tok.kind is TokenKind.WORD for tok in window) and tuple(t.surface for t in window) == lowered:
                    span = (window[0].span[0], window[-1].span[1])
                    plain.append(Location(doc.doc_id, doc.clause_number_at(span[0]), span))
        if len(plain) < config.case_ambiguity_min_count:
            continue
        locations = sorted(acronym + plain, key=lambda loc: (loc.doc_id, loc.span))
        findings.append(
            ConsistencyFinding(
                FindingKind.CASE_AMBIGUITY,
                Severity.INFO,
                tuple(locations),
                f"acronym '{label}' ({len(acronym)} mentions) also occurs as lowercase "
                f"'{' '.join(lowered)}' ({len(plain)} occurrences)",
            )
        )
    return findings


def check_title_content_mismatch(documents: Iterable[Document] | Iterable[TermEntry]) -> list[ConsistencyFinding]:
    """Term clauses whose definition opens with ``<other term>:``."""
    entries: list[TermEntry] = []
    for item in documents:
        entries.extend(extract_term_entries(item) if isinstance(item, Document) else [item])
    findings = []
    for entry in entries:
        m = _LEAD_IN.match(entry.definition)
        if m is None:
            continue
        lead = " ".join(m["term"].split())
        if lead.casefold() != _fold_term(entry.term):
            findings.append(
                ConsistencyFinding(
                    FindingKind.TITLE_CONTENT_MISMATCH,
                    Severity.ERROR,
                    (_location(entry),),
                    f"clause {entry.clause_number} is titled '{entry.term}' but its content defines '{lead}'",
                )
            )
    return findings


def check_dangling_references(reference_links: Sequence[ReferenceLink], documents: Corpus | None = None) -> list[ConsistencyFinding]:
    findings = []
    for link in reference_links:
        if link.resolved:
            continue
        clause = documents.get(link.from_doc).clause_number_at(link.span[0]) if documents is not None else ""
        findings.append(
            ConsistencyFinding(
                FindingKind.DANGLING_REFERENCE,
                Severity.WARNING,
                (Location(link.from_doc, clause, link.span),),
                f"reference to {link.target_ref} resolves neither in the corpus nor in the registry",
            )
        )
    return findings


def check_multi_parent(candidates: Sequence[CandidateClass]) -> list[ConsistencyFinding]:
    return [
        ConsistencyFinding(
            FindingKind.MULTI_PARENT_WARNING,
            Severity.WARNING,
            (_location(candidate.evidence),),
            f"term '{candidate.term}' fits {len(candidate.proposed_parents)} places: "
            + ", ".join(candidate.proposed_parents),
        )
        for candidate in candidates
        if candidate.status is CandidateStatus.AMBIGUOUS
    ]


def sort_findings(findings: Iterable[ConsistencyFinding]) -> list[ConsistencyFinding]:
    return sorted(findings, key=ConsistencyFinding.sort_key)


def run_all_checks(
    corpus: Corpus,
    annotations: AnnotatedCorpus,
    entities: Sequence[Entity],
    links: Sequence[ReferenceLink],
    candidates: Sequence[CandidateClass],
    config: CheckerConfig | None = None,
) -> list[ConsistencyFinding]:
    """Every check, merged and sorted by (doc_id, start, kind)."""
    config = config or CheckerConfig()
    entries = annotations.term_entries()
    findings = [
        *check_duplicate_definitions(entries, config),
        *check_adapted_definitions(entries),
        *check_case_ambiguity(annotations, annotations.index, config),
        *check_title_content_mismatch(entries),
        *check_dangling_references(links, corpus),
        *check_multi_parent(candidates),
    ]
    return sort_findings(findings)
