"""Lightweight ontologies used as annotation vocabularies.

Two on-disk encodings are supported: a native JSON format and a restricted
RDF/XML profile (classes, labels, named superclasses, property declarations).
Anything outside that profile is skipped with a warning.
"""

from __future__ import annotations

import json
import logging
import xml.etree.ElementTree as ET
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from urllib.parse import urljoin

from normcheck.errors import DanglingEdge, DuplicateIri, ParseError

logger = logging.getLogger(__name__)

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
SKOS = "http://www.w3.org/2004/02/skos/core#"
DCTERMS = "http://purl.org/dc/terms/"
XML = "http://www.w3.org/XML/1998/namespace"
NORMCHECK = "urn:normcheck:vocab#"

ACRONYM_MAX_LENGTH = 6


class DomainCategory(str, Enum):
    GENERIC_STANDARDS = "GenericStandards"
    STANDARDS_DATABASE = "StandardsDatabase"
    EXTERNAL_TECHNICAL = "ExternalTechnical"
    DOMAIN_SPECIFIC = "DomainSpecific"


class CasePolicy(str, Enum):
    ACRONYM_EXACT = "AcronymExact"
    CASE_INSENSITIVE = "CaseInsensitive"


class LabelKind(str, Enum):
    PRIMARY = "primary"
    ALTERNATE = "alternate"


@dataclass(frozen=True)
class ClassEntry:
    iri: str
    primary_label: str
    alt_labels: tuple[str, ...] = ()
    definition: str | None = None
    source_ref: str | None = None

    def labels(self) -> Iterable[tuple[str, LabelKind]]:
        yield self.primary_label, LabelKind.PRIMARY
        for label in self.alt_labels:
            yield label, LabelKind.ALTERNATE


@dataclass(frozen=True)
class OntologyModel:
    """A validated ontology. Equality is structural; warnings are ignored."""

    ontology_id: str
    iri_base: str
    domain_category: DomainCategory
    classes: frozenset[ClassEntry] = frozenset()
    subclass_edges: frozenset[tuple[str, str]] = frozenset()
    object_properties: frozenset[str] = frozenset()
    datatype_properties: frozenset[str] = frozenset()
    fold_plural: bool = False
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        iris: set[str] = set()
        for entry in self.classes:
            if entry.iri in iris:
                raise DuplicateIri(f"{self.ontology_id}: duplicate class IRI {entry.iri}")
            iris.add(entry.iri)
        for child, parent in sorted(self.subclass_edges):
            for end in (child, parent):
                if end not in iris:
                    raise DanglingEdge(
                        f"{self.ontology_id}: subclass edge ({child}, {parent}) "
                        f"refers to undeclared class {end}"
                    )

    @property
    def object_property_count(self) -> int:
        return len(self.object_properties)

    @property
    def datatype_property_count(self) -> int:
        return len(self.datatype_properties)

    def get(self, iri: str) -> ClassEntry:
        for entry in self.classes:
            if entry.iri == iri:
                return entry
        raise KeyError(iri)

    def parents(self, iri: str) -> list[str]:
        return sorted(parent for child, parent in self.subclass_edges if child == iri)

    def acyclic_edges(self) -> frozenset[tuple[str, str]]:
        """Subclass edges with cycles broken by dropping the lowest edge of each cycle."""
        edges = set(self.subclass_edges)
        while True:
            cycle = _find_cycle(edges)
            if cycle is None:
                return frozenset(edges)
            edges.discard(min(cycle))


def _find_cycle(edges: set[tuple[str, str]]) -> list[tuple[str, str]] | None:
    graph: dict[str, list[str]] = defaultdict(list)
    for child, parent in sorted(edges):
        graph[child].append(parent)
    state: dict[str, int] = {}
    path: list[str] = []

    def visit(node: str) -> list[tuple[str, str]] | None:
        state[node] = 1
        path.append(node)
        for nxt in graph.get(node, ()):
            if state.get(nxt) == 1:
                loop = path[path.index(nxt):] + [nxt]
                return list(zip(loop, loop[1:]))
            if nxt not in state:
                found = visit(nxt)
                if found:
                    return found
        path.pop()
        state[node] = 2
        return None

    for start in sorted(graph):
        if start not in state:
            found = visit(start)
            if found:
                return found
    return None


def _structural_warnings(ontology_id: str, edges: Iterable[tuple[str, str]]) -> list[str]:
    notes = []
    by_child: dict[str, list[str]] = defaultdict(list)
    for child, parent in edges:
        by_child[child].append(parent)
    for child in sorted(by_child):
        if len(by_child[child]) >= 2:
            notes.append(
                f"MultiParent: {child} has {len(by_child[child])} superclasses "
                f"({', '.join(sorted(by_child[child]))})"
            )
    if _find_cycle(set(edges)):
        notes.append(f"Cycle: subclass hierarchy of {ontology_id} contains a cycle")
    return notes


def _resolve(iri_base: str, ref: str) -> str:
    if ":" in ref:
        return ref
    return iri_base + ref.lstrip("#")


def _clean_label(label: object, where: str) -> str:
    if not isinstance(label, str) or not label.strip():
        raise ParseError(f"{where}: labels must be nonempty strings")
    return " ".join(label.split())


def _category(value: object, where: str) -> DomainCategory:
    try:
        return DomainCategory(value)
    except ValueError as exc:
        raise ParseError(f"{where}: unknown domain_category {value!r}") from exc


def _build_model(
    ontology_id: str,
    iri_base: str,
    category: DomainCategory,
    classes: Sequence[ClassEntry],
    edges: Iterable[tuple[str, str]],
    object_properties: Iterable[str],
    datatype_properties: Iterable[str],
    fold_plural: bool,
    warnings: list[str],
) -> OntologyModel:
    iris = [entry.iri for entry in classes]
    if len(set(iris)) != len(iris):
        dup = sorted(iri for iri in set(iris) if iris.count(iri) > 1)[0]
        raise DuplicateIri(f"{ontology_id}: duplicate class IRI {dup}")
    edges = frozenset(edges)
    model = OntologyModel(
        ontology_id=ontology_id,
        iri_base=iri_base,
        domain_category=category,
        classes=frozenset(classes),
        subclass_edges=edges,
        object_properties=frozenset(object_properties),
        datatype_properties=frozenset(datatype_properties),
        fold_plural=fold_plural,
        warnings=tuple(warnings + _structural_warnings(ontology_id, edges)),
    )
    for note in model.warnings:
        logger.info("%s: %s", ontology_id, note)
    return model


def _property_iri(iri_base: str, item: object, where: str) -> str:
    if isinstance(item, str):
        return _resolve(iri_base, item)
    if isinstance(item, Mapping) and isinstance(item.get("iri"), str):
        return _resolve(iri_base, item["iri"])
    raise ParseError(f"{where}: property must be an IRI string or an object with 'iri'")


def ontology_from_dict(payload: Mapping[str, object], where: str = "<dict>") -> OntologyModel:
    """Build a model from the native JSON structure."""
    if not isinstance(payload, Mapping):
        raise ParseError(f"{where}: top level must be an object")
    try:
        ontology_id = str(payload["ontology_id"])
        iri_base = str(payload.get("iri_base", ""))
        category = _category(payload.get("domain_category", "DomainSpecific"), where)
        raw_classes = payload.get("classes", [])
        raw_edges = payload.get("subclass_edges", [])
        classes = []
        for item in raw_classes:
            classes.append(
                ClassEntry(
                    iri=_resolve(iri_base, str(item["iri"])),
                    primary_label=_clean_label(item.get("primary_label"), where),
                    alt_labels=tuple(_clean_label(x, where) for x in item.get("alt_labels", [])),
                    definition=item.get("definition"),
                    source_ref=item.get("source_ref"),
                )
            )
        edges = []
        for pair in raw_edges:
            if len(pair) != 2:
                raise ParseError(f"{where}: subclass edge must be [child, parent]")
            edges.append((_resolve(iri_base, str(pair[0])), _resolve(iri_base, str(pair[1]))))
        obj_props = [_property_iri(iri_base, p, where) for p in payload.get("object_properties", [])]
        dt_props = [_property_iri(iri_base, p, where) for p in payload.get("datatype_properties", [])]
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"{where}: malformed ontology ({exc})") from exc
    return _build_model(
        ontology_id,
        iri_base,
        category,
        classes,
        edges,
        obj_props,
        dt_props,
        bool(payload.get("fold_plural", False)),
        [],
    )


def load_ontology_native(path: str | Path) -> OntologyModel:
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    return ontology_from_dict(payload, str(path))


def _q(ns: str, local: str) -> str:
    return f"{{{ns}}}{local}"


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def load_ontology_rdfxml_subset(
    path: str | Path,
    ontology_id: str | None = None,
    domain_category: DomainCategory | str | None = None,
) -> OntologyModel:
    """Load the supported RDF/XML profile; unsupported constructs become warnings.

    The ontology id, IRI base and category are read from the ``owl:Ontology``
    header (``nc:ontologyId``, ``nc:iriBase``, ``nc:domainCategory`` in the
    ``urn:normcheck:vocab#`` namespace) unless given explicitly.
    """
    path = Path(path)
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as exc:
        raise ParseError(f"{path}: malformed XML ({exc})") from exc
    if root.tag != _q(RDF, "RDF"):
        raise ParseError(f"{path}: root element must be rdf:RDF")

    base = root.get(_q(XML, "base"), "")
    header = root.find(_q(OWL, "Ontology"))
    if header is not None:
        base = base or header.get(_q(RDF, "about"), "")
        ontology_id = ontology_id or header.findtext(_q(NORMCHECK, "ontologyId"))
        iri_base = header.findtext(_q(NORMCHECK, "iriBase")) or (base + "#")
        domain_category = domain_category or header.findtext(_q(NORMCHECK, "domainCategory"))
        fold_plural = (header.findtext(_q(NORMCHECK, "foldPlural")) or "").strip() == "true"
    else:
        iri_base = base + "#"
        fold_plural = False
    ontology_id = ontology_id or path.stem
    category = _category(domain_category or "DomainSpecific", str(path))

    def iri_of(elem: ET.Element) -> str | None:
        about = elem.get(_q(RDF, "about"))
        if about is not None:
            return urljoin(base, about) if base else about
        ident = elem.get(_q(RDF, "ID"))
        if ident is not None:
            return f"{base}#{ident}"
        return None

    warnings: list[str] = []
    classes: list[ClassEntry] = []
    edges: list[tuple[str, str]] = []
    obj_props: list[str] = []
    dt_props: list[str] = []

    for elem in root:
        tag = elem.tag
        if tag == _q(OWL, "Ontology"):
            for child in elem:
                if child.tag == _q(OWL, "imports"):
                    warnings.append(f"skipped owl:imports {child.get(_q(RDF, 'resource'))}")
            continue
        if tag in (_q(OWL, "ObjectProperty"), _q(OWL, "DatatypeProperty")):
            iri = iri_of(elem)
            if iri is None:
                warnings.append(f"skipped anonymous {_local(tag)}")
                continue
            (obj_props if tag == _q(OWL, "ObjectProperty") else dt_props).append(iri)
            continue
        if tag != _q(OWL, "Class"):
            warnings.append(f"skipped unsupported element {_local(tag)}")
            continue
        iri = iri_of(elem)
        if iri is None:
            warnings.append("skipped anonymous owl:Class")
            continue
        labels: list[str] = []
        alt: list[str] = []
        definition = source_ref = None
        for child in elem:
            ctag = child.tag
            if ctag == _q(RDFS, "label"):
                labels.append(_clean_label(child.text, f"{path}: {iri}"))
            elif ctag == _q(SKOS, "altLabel"):
                alt.append(_clean_label(child.text, f"{path}: {iri}"))
            elif ctag == _q(SKOS, "definition"):
                definition = child.text
            elif ctag == _q(DCTERMS, "source"):
                source_ref = child.text
            elif ctag == _q(RDFS, "subClassOf"):
                target = child.get(_q(RDF, "resource"))
                if target is not None:
                    edges.append((iri, urljoin(base, target) if base else target))
                else:
                    inner = [_local(x.tag) for x in child]
                    warnings.append(f"skipped anonymous superclass ({', '.join(inner) or 'empty'}) of {iri}")
            else:
                warnings.append(f"skipped {_local(ctag)} on {iri}")
        if not labels:
            raise ParseError(f"{path}: class {iri} has no rdfs:label")
        classes.append(ClassEntry(iri, labels[0], tuple(labels[1:] + alt), definition, source_ref))

    for note in warnings:
        logger.warning("%s: %s", path, note)
    return _build_model(
        ontology_id, iri_base, category, classes, edges, obj_props, dt_props, fold_plural, warnings
    )


def load_ontology(path: str | Path) -> OntologyModel:
    """Dispatch on file extension: ``.json`` is native, anything else RDF/XML."""
    if Path(path).suffix.lower() == ".json":
        return load_ontology_native(path)
    return load_ontology_rdfxml_subset(path)


def ontology_stats(model: OntologyModel) -> dict[str, int]:
    with_parent = {child for child, _ in model.subclass_edges}
    return {
        "classes": len(model.classes),
        "object_properties": model.object_property_count,
        "datatype_properties": model.datatype_property_count,
        "subclass_edges": len(model.subclass_edges),
        "roots": sum(1 for entry in model.classes if entry.iri not in with_parent),
    }


def case_policy_for(label: str) -> CasePolicy:
    if label.isupper() and len(label) <= ACRONYM_MAX_LENGTH:
        return CasePolicy.ACRONYM_EXACT
    return CasePolicy.CASE_INSENSITIVE


def label_tokens(label: str) -> tuple[str, ...]:
    """Non-space token surfaces of ``label``."""
    from normcheck.annotate.tokens import TokenKind, tokenize

    return tuple(tok.surface for tok in tokenize(label) if tok.kind is not TokenKind.SPACE)


@dataclass(frozen=True)
class LabelHit:
    iri: str
    ontology_id: str
    label: str
    label_kind: LabelKind
    case_policy: CasePolicy
    tokens: tuple[str, ...]


def _fold(tokens: Sequence[str]) -> tuple[str, ...]:
    return tuple(tok.lower() for tok in tokens)


class LabelIndex:
    """Label token sequences of one or more ontologies, keyed case-insensitively.

    Lookup applies each hit's case policy, so an AcronymExact label such as
    ``IS`` only answers to the exact surface ``IS``.
    """

    def __init__(self, hits: Iterable[LabelHit], fold_plural: Iterable[str] = ()) -> None:
        entries: dict[tuple[str, ...], list[LabelHit]] = defaultdict(list)
        for hit in hits:
            entries[_fold(hit.tokens)].append(hit)
        self._entries = {
            key: tuple(sorted(set(value), key=lambda h: (h.ontology_id, h.iri, h.label, h.label_kind.value)))
            for key, value in entries.items()
        }
        self.max_tokens = max((len(key) for key in self._entries), default=0)
        self.fold_plural = frozenset(fold_plural)

    @property
    def entries(self) -> Mapping[tuple[str, ...], tuple[LabelHit, ...]]:
        return dict(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def ontology_ids(self) -> list[str]:
        return sorted({hit.ontology_id for hits in self._entries.values() for hit in hits})

    def lookup(self, tokens: Sequence[str]) -> list[LabelHit]:
        """Hits whose label matches ``tokens`` under the label's case policy."""
        tokens = tuple(tokens)
        if not tokens:
            return []
        found = [hit for hit in self._entries.get(_fold(tokens), ()) if _accepts(hit, tokens)]
        last = tokens[-1]
        if self.fold_plural and len(last) > 1 and last[-1] in "sS":
            singular = tokens[:-1] + (last[:-1],)
            for hit in self._entries.get(_fold(singular), ()):
                if hit.ontology_id in self.fold_plural and _accepts(hit, singular) and hit not in found:
                    found.append(hit)
        return found

    def acronym_hits(self) -> list[LabelHit]:
        return sorted(
            (hit for hits in self._entries.values() for hit in hits if hit.case_policy is CasePolicy.ACRONYM_EXACT),
            key=lambda h: (h.label, h.ontology_id, h.iri),
        )


def _accepts(hit: LabelHit, tokens: tuple[str, ...]) -> bool:
    if hit.case_policy is CasePolicy.ACRONYM_EXACT:
        return hit.tokens == tokens
    return True


def build_label_index(models: Sequence[OntologyModel]) -> LabelIndex:
    hits = []
    for model in models:
        for entry in sorted(model.classes, key=lambda e: e.iri):
            for label, kind in entry.labels():
                tokens = label_tokens(label)
                if not tokens:
                    continue
                hits.append(LabelHit(entry.iri, model.ontology_id, label, kind, case_policy_for(label), tokens))
    return LabelIndex(hits, [m.ontology_id for m in models if m.fold_plural])
