"""Ontology-backed gazetteer: label lookup over the token stream."""

from __future__ import annotations

from normcheck.annotate.model import GAZETTEER, Annotation, AnnotationSet
from normcheck.annotate.tokens import Token, content_tokens, tokenize
from normcheck.corpus import Document
from normcheck.ontology import LabelHit, LabelIndex

MENTION = "Mention"


def _candidates(surfaces: list[str], index: LabelIndex) -> list[list[tuple[int, list[LabelHit]]]]:
    """For every start position, the (length, hits) pairs that match, longest first."""
    n = len(surfaces)
    longest = index.max_tokens
    table = []
    for i in range(n):
        found = []
        for length in range(min(longest, n - i), 0, -1):
            hits = index.lookup(surfaces[i:i + length])
            if hits:
                found.append((length, hits))
        table.append(found)
    return table


def gazetteer_annotate(
    doc: Document,
    index: LabelIndex,
    tokens: list[Token] | None = None,
    set_name: str = "",
    first_id: int = 0,
) -> AnnotationSet:
    """Emit a Mention for every label match.

    Within one ontology, overlapping matches are resolved leftmost-longest.
    Matches from different ontologies are kept even when they overlap.
    """
    if not index:
        return AnnotationSet(set_name)
    toks = content_tokens(tokens if tokens is not None else tokenize(doc.text))
    table = _candidates([tok.surface for tok in toks], index)
    found: list[tuple[int, int, str, str, LabelHit]] = []
    for ontology_id in index.ontology_ids():
        i = 0
        while i < len(toks):
            step = 1
            for length, hits in table[i]:
                own = [hit for hit in hits if hit.ontology_id == ontology_id]
                if not own:
                    continue
                start, end = toks[i].span[0], toks[i + length - 1].span[1]
                seen = set()
                for hit in own:
                    if hit.iri not in seen:
                        seen.add(hit.iri)
                        found.append((start, end, ontology_id, hit.iri, hit))
                step = length
                break
            i += step
    found.sort(key=lambda item: item[:4])
    annotations = []
    for offset, (start, end, ontology_id, iri, hit) in enumerate(found):
        annotations.append(
            Annotation(
                first_id + offset,
                (start, end),
                MENTION,
                {
                    "class_iri": iri,
                    "ontology_id": ontology_id,
                    "matched_label": hit.label,
                    "label_kind": hit.label_kind.value,
                    "case_policy": hit.case_policy.value,
                },
                GAZETTEER,
            )
        )
    return AnnotationSet(set_name, tuple(annotations))
