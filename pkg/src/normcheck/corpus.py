"""Ingestion of normative documents and recovery of their clause structure.

Documents are plain UTF-8 text in which a clause opens on a line of the form
``<number> <heading>`` (``3.1.5 flow control``) or ``Annex <letter> ...``.
All spans are byte offsets into the UTF-8 encoding of ``Document.text``.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterator, Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path

from normcheck.errors import DecodeError, EmptyDocument, ManifestError, NormcheckError

Span = tuple[int, int]

_BOM = b"\xef\xbb\xbf"

_NUMBERED_HEADING = re.compile(
    r"(?P<number>\d+(?:\.\d+)*|[A-Z](?:\.\d+)+)[ \t]+(?P<heading>\S.*?)[ \t]*"
)
_ANNEX_HEADING = re.compile(r"Annex[ \t]+(?P<number>[A-Z])(?![^\s])[ \t]*(?P<heading>.*?)[ \t]*")

_TERMS_HEADINGS = frozenset({"terms and definitions", "terms, definitions and abbreviated terms"})

_ADAPTED = re.compile(
    r"\[\s*adapted\s+from\s+(?P<bracketed>[^\]\n]+?)\s*\]"
    r"|adapted\s+from\s+(?P<bare>[^\]\n;,]+)",
    re.IGNORECASE,
)


class ClauseKind(str, Enum):
    SCOPE = "Scope"
    TERMS_AND_DEFINITIONS = "TermsAndDefinitions"
    BODY = "Body"
    ANNEX = "Annex"
    BIBLIOGRAPHY = "Bibliography"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Clause:
    number: str
    heading: str
    span: Span
    kind: ClauseKind
    children: tuple[Clause, ...] = ()

    def walk(self) -> Iterator[Clause]:
        yield self
        for child in self.children:
            yield from child.walk()

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class TermEntry:
    term: str
    definition: str
    clause_number: str
    doc_id: str
    span: Span
    adapted_from: str | None = None


@dataclass(frozen=True)
class Document:
    doc_id: str
    standard_ref: str
    title: str
    text: str
    clauses: tuple[Clause, ...]
    page_count_hint: int | None = None

    @cached_property
    def data(self) -> bytes:
        return self.text.encode("utf-8")

    def slice(self, span: Span) -> str:
        start, end = span
        return self.data[start:end].decode("utf-8")

    def iter_clauses(self) -> Iterator[Clause]:
        for clause in self.clauses:
            yield from clause.walk()

    def clause_at(self, offset: int) -> Clause | None:
        """Deepest clause whose span contains ``offset``."""
        found = None
        level = self.clauses
        while level:
            for clause in level:
                if clause.span[0] <= offset < clause.span[1]:
                    found = clause
                    level = clause.children
                    break
            else:
                break
        return found

    def clause_number_at(self, offset: int) -> str:
        clause = self.clause_at(offset)
        return clause.number if clause is not None else ""


@dataclass(frozen=True)
class Corpus:
    corpus_id: str
    documents: tuple[Document, ...] = ()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for doc in self.documents:
            if not doc.doc_id:
                raise ManifestError("document with empty doc_id")
            if doc.doc_id in seen:
                raise ManifestError(f"duplicate doc_id {doc.doc_id!r} in corpus {self.corpus_id!r}")
            seen.add(doc.doc_id)

    def get(self, doc_id: str) -> Document:
        for doc in self.documents:
            if doc.doc_id == doc_id:
                return doc
        raise KeyError(doc_id)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    def __len__(self) -> int:
        return len(self.documents)


def ingest_document(raw: bytes, metadata: Mapping[str, object]) -> Document:
    """Decode ``raw``, normalize line endings to LF and parse its clauses."""
    for key in ("doc_id", "standard_ref", "title"):
        if not str(metadata.get(key) or "").strip():
            raise ValueError(f"metadata field {key!r} must be nonempty")
    if raw.startswith(_BOM):
        raw = raw[len(_BOM):]
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError(f"{metadata['doc_id']}: invalid UTF-8 at byte {exc.start}") from exc
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    if not text.strip():
        raise EmptyDocument(f"{metadata['doc_id']}: document has no content")
    hint = metadata.get("page_count_hint")
    return Document(
        doc_id=str(metadata["doc_id"]),
        standard_ref=str(metadata["standard_ref"]),
        title=str(metadata["title"]),
        text=text,
        clauses=parse_clauses(text),
        page_count_hint=int(hint) if hint is not None else None,
    )


@dataclass
class _OpenClause:
    number: str
    heading: str
    kind: ClauseKind
    start: int
    end: int = -1
    children: list[_OpenClause] = field(default_factory=list)

    def freeze(self) -> Clause:
        return Clause(
            self.number,
            self.heading,
            (self.start, self.end),
            self.kind,
            tuple(child.freeze() for child in self.children),
        )


def _match_heading(line: str) -> tuple[str, str] | None:
    m = _NUMBERED_HEADING.fullmatch(line)
    if m:
        return m["number"], m["heading"]
    m = _ANNEX_HEADING.fullmatch(line)
    if m:
        return m["number"], m["heading"] or f"Annex {m['number']}"
    return None


def _clause_kind(number: str, heading: str) -> ClauseKind:
    if number[0].isalpha():
        return ClauseKind.ANNEX
    folded = heading.casefold()
    if folded in _TERMS_HEADINGS:
        return ClauseKind.TERMS_AND_DEFINITIONS
    if folded == "scope":
        return ClauseKind.SCOPE
    if folded == "bibliography":
        return ClauseKind.BIBLIOGRAPHY
    return ClauseKind.BODY


def _is_within(parent: str, child: str) -> bool:
    return child.startswith(parent + ".")


def parse_clauses(doc_text: str) -> tuple[Clause, ...]:
    """Recover the clause tree of ``doc_text``.

    Lines that do not look like headings stay in the body of the enclosing
    clause. Text without any heading becomes one ``Unknown`` clause numbered
    ``"0"`` covering everything.
    """
    total = len(doc_text.encode("utf-8"))
    roots: list[_OpenClause] = []
    stack: list[_OpenClause] = []
    offset = 0
    for line in doc_text.split("\n"):
        heading = _match_heading(line)
        if heading is not None:
            number, title = heading
            while stack and not _is_within(stack[-1].number, number):
                stack.pop().end = offset
            node = _OpenClause(number, title, _clause_kind(number, title), offset)
            (stack[-1].children if stack else roots).append(node)
            stack.append(node)
        offset += len(line.encode("utf-8")) + 1
    for node in stack:
        node.end = total
    if not roots:
        if total == 0:
            return ()
        return (Clause("0", "", (0, total), ClauseKind.UNKNOWN),)
    return tuple(node.freeze() for node in roots)


def _heading_line_end(doc: Document, clause: Clause) -> int:
    newline = doc.data.find(b"\n", clause.span[0], clause.span[1])
    return clause.span[1] if newline < 0 else newline + 1


def _adapted_source(definition: str) -> str | None:
    m = _ADAPTED.search(definition)
    if m is None:
        return None
    ref = m["bracketed"] if m["bracketed"] is not None else m["bare"]
    ref = ref.strip().rstrip(".").strip()
    return ref or None


def extract_term_entries(doc: Document) -> list[TermEntry]:
    """One entry per leaf clause below a terms-and-definitions clause."""
    entries: list[TermEntry] = []
    for clause in doc.iter_clauses():
        if clause.kind is not ClauseKind.TERMS_AND_DEFINITIONS:
            continue
        for leaf in clause.walk():
            if leaf is clause or not leaf.is_leaf:
                continue
            body = doc.slice((_heading_line_end(doc, leaf), leaf.span[1])).strip()
            if not body:
                continue
            entries.append(
                TermEntry(
                    term=leaf.heading,
                    definition=body,
                    clause_number=leaf.number,
                    doc_id=doc.doc_id,
                    span=leaf.span,
                    adapted_from=_adapted_source(body),
                )
            )
    return entries


def load_corpus(manifest_path: str | Path, jobs: int = 1) -> tuple[Corpus, dict[str, str]]:
    """Read a corpus manifest and ingest every listed document.

    Documents that fail to load are skipped; the second element maps their
    doc_id to a one-line diagnostic.
    """
    manifest_path = Path(manifest_path)
    try:
        payload = json.loads(manifest_path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ManifestError(f"manifest not found: {manifest_path}") from exc
    except (OSError, json.JSONDecodeError) as exc:
        raise ManifestError(f"cannot read manifest {manifest_path}: {exc}") from exc
    if not isinstance(payload, dict) or "documents" not in payload:
        raise ManifestError(f"{manifest_path}: expected an object with 'documents'")
    entries = payload["documents"]
    base = manifest_path.parent
    ids = [str(entry.get("doc_id", "")) for entry in entries]
    if len(set(ids)) != len(ids):
        raise ManifestError(f"{manifest_path}: duplicate doc_id in manifest")

    def _load(entry: Mapping[str, object]) -> Document:
        path = base / str(entry["path"])
        return ingest_document(path.read_bytes(), entry)

    failures: dict[str, str] = {}
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        futures = [(entry, pool.submit(_load, entry)) for entry in entries]
        documents = []
        for entry, future in futures:
            try:
                documents.append(future.result())
            except (OSError, ValueError, KeyError, NormcheckError) as exc:
                failures[str(entry.get("doc_id", entry.get("path")))] = str(exc)
    corpus_id = str(payload.get("corpus_id") or manifest_path.stem)
    return Corpus(corpus_id, tuple(documents)), failures
