"""Character-class tokenizer producing byte-offset tokens that tile the text."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from normcheck.corpus import Span

_TOKEN = re.compile(r"(?P<word>[^\W\d_]+)|(?P<number>\d+)|(?P<space>\s+)|(?P<punct>.)", re.DOTALL)


class TokenKind(str, Enum):
    WORD = "Word"
    NUMBER = "Number"
    PUNCT = "Punct"
    SPACE = "Space"


class Orth(str, Enum):
    LOWER = "Lower"
    UPPER = "Upper"
    CAPITALIZED = "Capitalized"
    MIXED = "Mixed"
    NA = "NA"


@dataclass(frozen=True)
class Token:
    span: Span
    surface: str
    kind: TokenKind
    orth: Orth


def word_orth(surface: str) -> Orth:
    if surface.lower() == surface.upper():
        return Orth.NA
    if surface.islower():
        return Orth.LOWER
    if surface.isupper():
        return Orth.UPPER
    if surface[0].isupper() and surface[1:].islower():
        return Orth.CAPITALIZED
    return Orth.MIXED


_KINDS = {
    "word": TokenKind.WORD,
    "number": TokenKind.NUMBER,
    "space": TokenKind.SPACE,
    "punct": TokenKind.PUNCT,
}


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into maximal letter, digit and whitespace runs plus single
    punctuation characters. Spans are UTF-8 byte offsets."""
    tokens = []
    offset = 0
    for m in _TOKEN.finditer(text):
        surface = m.group()
        kind = _KINDS[m.lastgroup]
        size = len(surface.encode("utf-8"))
        orth = word_orth(surface) if kind is TokenKind.WORD else Orth.NA
        tokens.append(Token((offset, offset + size), surface, kind, orth))
        offset += size
    return tokens


def content_tokens(tokens: list[Token]) -> list[Token]:
    return [tok for tok in tokens if tok.kind is not TokenKind.SPACE]
