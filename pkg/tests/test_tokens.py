from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from normcheck.annotate.tokens import Orth, TokenKind, content_tokens, tokenize, word_orth


def kinds(text):
    return [(t.surface, t.kind) for t in tokenize(text)]


def test_basic_split():
    assert kinds("ISO/TS 16668-1:2004") == [
        ("ISO", TokenKind.WORD),
        ("/", TokenKind.PUNCT),
        ("TS", TokenKind.WORD),
        (" ", TokenKind.SPACE),
        ("16668", TokenKind.NUMBER),
        ("-", TokenKind.PUNCT),
        ("1", TokenKind.NUMBER),
        (":", TokenKind.PUNCT),
        ("2004", TokenKind.NUMBER),
    ]


def test_letters_and_digits_split():
    assert [t.surface for t in tokenize("abc123def")] == ["abc", "123", "def"]
    assert [t.surface for t in tokenize("snake_case")] == ["snake", "_", "case"]


def test_byte_offsets():
    toks = tokenize("é x")
    assert [t.span for t in toks] == [(0, 2), (2, 3), (3, 4)]


def test_orth():
    assert word_orth("ISO") is Orth.UPPER
    assert word_orth("iso") is Orth.LOWER
    assert word_orth("Iso") is Orth.CAPITALIZED
    assert word_orth("iSo") is Orth.MIXED
    assert word_orth("中文") is Orth.NA
    assert tokenize("12")[0].orth is Orth.NA


def test_content_tokens_drop_space():
    assert [t.surface for t in content_tokens(tokenize("a  b\nc"))] == ["a", "b", "c"]


@settings(max_examples=1000, deadline=None)
@given(st.text())
def test_tokens_tile_text(text):
    data = text.encode("utf-8")
    toks = tokenize(text)
    offset = 0
    for tok in toks:
        assert tok.span[0] == offset < tok.span[1]
        assert data[tok.span[0]:tok.span[1]].decode("utf-8") == tok.surface
        offset = tok.span[1]
    assert offset == len(data)
    assert "".join(t.surface for t in toks) == text
