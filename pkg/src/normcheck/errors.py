"""Exception hierarchy shared by every normcheck module."""

from __future__ import annotations


class NormcheckError(Exception):
    """Base class for all errors raised by normcheck."""


class DecodeError(NormcheckError):
    """Raw document bytes are not valid UTF-8."""


class EmptyDocument(NormcheckError):
    """Document contains no non-whitespace characters."""


class ManifestError(NormcheckError):
    """Corpus manifest is missing, malformed or inconsistent."""


class ParseError(NormcheckError):
    """Ontology file could not be parsed."""


class DanglingEdge(NormcheckError):
    """A subclass edge points at an IRI that is not a declared class."""


class DuplicateIri(NormcheckError):
    """The same class IRI is declared twice in one ontology."""


class RuleError(NormcheckError):
    """Rule file is malformed or an action uses an unbound label."""


class UnknownSource(NormcheckError):
    """An annotation cannot be attributed to a knowledge-domain category."""


class IoError(NormcheckError):
    """Output bundle could not be written."""
