"""Ontology-based annotation and cross-part consistency checking for
multi-part normative documents."""

from __future__ import annotations

__version__ = "0.1.0"
