"""Tokenization, ontology gazetteer and pattern-rule annotation."""

from normcheck.annotate.gazetteer import MENTION, gazetteer_annotate
from normcheck.annotate.model import Annotation, AnnotationSet
from normcheck.annotate.pipeline import (
    REFERENCE,
    TERM_DEFINITION,
    AnnotatedCorpus,
    AnnotatedDocument,
    Pipeline,
    annotate_document,
    run_pipeline,
)
from normcheck.annotate.rules import Phase, Rule, load_rules, parse_rules, run_phase
from normcheck.annotate.tokens import Orth, Token, TokenKind, tokenize

__all__ = [
    "MENTION",
    "REFERENCE",
    "TERM_DEFINITION",
    "AnnotatedCorpus",
    "AnnotatedDocument",
    "Annotation",
    "AnnotationSet",
    "Orth",
    "Phase",
    "Pipeline",
    "Rule",
    "Token",
    "TokenKind",
    "annotate_document",
    "gazetteer_annotate",
    "load_rules",
    "parse_rules",
    "run_phase",
    "run_pipeline",
    "tokenize",
]
