"""Candidate ontology classes proposed from terms-and-definitions entries.

Candidates are written for review; the source ontologies are never changed.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from normcheck.annotate.tokens import TokenKind, content_tokens, tokenize
from normcheck.corpus import TermEntry
from normcheck.ontology import LabelIndex, OntologyModel, build_label_index, label_tokens

CANDIDATE_ROOT = "urn:normcheck:CandidateConcept"

_DETERMINERS = frozenset({"a", "an", "the"})
_COPULAS = frozenset({"is", "means"})
_STOP_WORDS = frozenset({"that", "which", "of", "for"})


class CandidateStatus(str, Enum):
    NEW = "New"
    MATCHES_EXISTING = "MatchesExisting"
    AMBIGUOUS = "Ambiguous"


@dataclass(frozen=True)
class CandidateClass:
    term: str
    proposed_parents: tuple[str, ...]
    evidence: TermEntry
    genus: str | None
    status: CandidateStatus

    def __post_init__(self) -> None:
        if (self.status is CandidateStatus.AMBIGUOUS) != (len(self.proposed_parents) >= 2):
            raise ValueError(f"candidate {self.term!r}: Ambiguous iff two or more parents")

    @property
    def placement(self) -> tuple[str, ...]:
        return self.proposed_parents or (CANDIDATE_ROOT,)

    def to_json(self) -> dict[str, object]:
        return {
            "term": self.term,
            "status": self.status.value,
            "genus": self.genus,
            "proposed_parents": list(self.proposed_parents),
            "placement": list(self.placement),
            "evidence": {
                "doc_id": self.evidence.doc_id,
                "clause_number": self.evidence.clause_number,
                "start": self.evidence.span[0],
                "end": self.evidence.span[1],
            },
        }


def extract_genus(definition: str) -> str | None:
    """Head noun phrase of a definition, lowercased.

    >>> extract_genus("a resource that is not yet allocated")
    'resource'
    """
    toks = content_tokens(tokenize(definition))
    # the first run of words, up to a stop word or punctuation
    run_end = 0
    while run_end < len(toks) and toks[run_end].kind is TokenKind.WORD and toks[run_end].surface.lower() not in _STOP_WORDS:
        run_end += 1
    start = 0
    for i in range(run_end):
        if toks[i].surface.lower() in _COPULAS:
            start = i + 1
            break
    while start < run_end and toks[start].surface.lower() in _DETERMINERS:
        start += 1
    words = [tok.surface.lower() for tok in toks[start:run_end]]
    return " ".join(words) or None


def _sort_clause(number: str) -> tuple[tuple[int, object], ...]:
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in number.split("."))


def _distinct_iris(index: LabelIndex, tokens: Sequence[str]) -> tuple[str, ...]:
    return tuple(sorted({hit.iri for hit in index.lookup(tokens)}))


def propose_candidates(
    term_entries: Sequence[TermEntry],
    models: Sequence[OntologyModel] | LabelIndex,
) -> list[CandidateClass]:
    """Place every term entry relative to the ontologies.

    A term that is already a label matches that class; otherwise the genus
    of its definition is looked up. Several hits are all reported as an
    ambiguous placement, never narrowed down.
    """
    index = models if isinstance(models, LabelIndex) else build_label_index(models)
    out = []
    for entry in sorted(term_entries, key=lambda e: (e.doc_id, _sort_clause(e.clause_number), e.span)):
        genus = extract_genus(entry.definition)
        existing = _distinct_iris(index, label_tokens(entry.term))
        if len(existing) == 1:
            out.append(CandidateClass(entry.term, existing, entry, genus, CandidateStatus.MATCHES_EXISTING))
            continue
        parents = existing
        if not parents and genus:
            parents = _distinct_iris(index, label_tokens(genus))
        status = CandidateStatus.AMBIGUOUS if len(parents) >= 2 else CandidateStatus.NEW
        out.append(CandidateClass(entry.term, parents, entry, genus, status))
    return out
