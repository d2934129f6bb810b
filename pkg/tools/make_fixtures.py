"""Regenerate the synthetic fixtures under ``fixtures/``.

The corpus mirrors the six-part structure of ISO 15531 MANDATE with invented
text; the seeded defects live in the literal terms-and-definitions clauses
below, the bulk body text is filler drawn from a seeded RNG.

    python tools/make_fixtures.py [--out fixtures]
"""

from __future__ import annotations

import argparse
import json
import random
import re
from pathlib import Path
from xml.sax.saxutils import escape

from normcheck.ontology import case_policy_for, label_tokens

TARGET_DOC_BYTES = 50_000

# (label, parent label, alternate labels)
ISTO_CLASSES = [
    ("normative document", None, []),
    ("standard", "normative document", []),
    ("international standard", "standard", ["IS"]),
    ("draft international standard", "international standard", []),
    ("final draft international standard", "international standard", []),
    ("regional standard", "standard", []),
    ("national standard", "standard", []),
    ("multi-part standard", "standard", []),
    ("technical specification", "normative document", []),
    ("technical report", "normative document", []),
    ("publicly available specification", "normative document", []),
    ("guide", "normative document", []),
    ("amendment", "normative document", []),
    ("corrigendum", "normative document", []),
    ("document element", None, []),
    ("scope", "document element", []),
    ("normative reference", "document element", []),
    ("terms and definitions", "document element", []),
    ("clause", "document element", []),
    ("subclause", "clause", []),
    ("annex", "document element", []),
    ("normative annex", "annex", []),
    ("informative annex", "annex", []),
    ("bibliography", "document element", []),
    ("foreword", "document element", []),
    ("introduction", "document element", []),
    ("note", "document element", []),
    ("example", "document element", []),
    ("figure", "document element", []),
    ("table", "document element", []),
    ("formula", "document element", []),
    ("title", "document element", []),
    ("main title", "title", []),
    ("provision", None, []),
    ("requirement", "provision", []),
    ("recommendation", "provision", []),
    ("permission", "provision", []),
    ("statement", "provision", []),
    ("normative element", "provision", []),
    ("informative element", "provision", []),
    ("terminology element", None, []),
    ("term", "terminology element", []),
    ("definition", "terminology element", []),
    ("preferred term", "term", []),
    ("admitted term", "term", []),
    ("deprecated term", "term", []),
    ("abbreviated term", "term", []),
    ("symbol", "terminology element", []),
    ("designation", "terminology element", []),
    ("concept", "terminology element", []),
    ("vocabulary", "terminology element", []),
    ("terminology", "terminology element", []),
    ("standardization body", None, []),
    ("standards developing organization", "standardization body", []),
    ("technical committee", "standardization body", []),
    ("subcommittee", "technical committee", []),
    ("working group", "standardization body", []),
    ("national body", "standardization body", []),
    ("liaison organization", "standardization body", []),
    ("secretariat", "standardization body", []),
    ("convenor", "standardization body", []),
    ("project leader", "standardization body", []),
    ("expert", "standardization body", []),
    ("development stage", None, []),
    ("preliminary stage", "development stage", []),
    ("proposal stage", "development stage", []),
    ("preparatory stage", "development stage", []),
    ("committee stage", "development stage", []),
    ("enquiry stage", "development stage", []),
    ("approval stage", "development stage", []),
    ("publication stage", "development stage", []),
    ("review stage", "development stage", []),
    ("withdrawal stage", "development stage", []),
    ("standardization activity", None, []),
    ("standardization", "standardization activity", []),
    ("drafting", "standardization activity", []),
    ("ballot", "standardization activity", []),
    ("vote", "standardization activity", []),
    ("consensus", "standardization activity", []),
    ("systematic review", "standardization activity", []),
    ("confirmation", "standardization activity", []),
    ("revision", "standardization activity", []),
    ("withdrawal", "standardization activity", []),
    ("publication", "standardization activity", []),
    ("edition", "standardization activity", []),
    ("reference number", "standardization activity", []),
    ("conformity concept", None, []),
    ("conformity", "conformity concept", []),
    ("conformity assessment", "conformity concept", []),
    ("certification", "conformity assessment", []),
    ("accreditation", "conformity assessment", []),
    ("specification", "conformity concept", []),
    ("code of practice", "conformity concept", []),
    ("guideline", "conformity concept", []),
    ("stakeholder", "conformity concept", []),
    ("working draft", "normative document", []),
    ("committee draft", "normative document", []),
    ("new work item proposal", "standardization activity", []),
    ("draft amendment", "amendment", []),
    ("drafting rule", "provision", []),
    ("document structure", "document element", []),
    ("numbering", "document element", []),
    ("directive", "provision", []),
    ("mirror committee", "standardization body", []),
    ("national adoption", "standardization activity", []),
    ("regional adoption", "standardization activity", []),
    ("national deviation", "provision", []),
    ("normative document series", "normative document", []),
    ("technical corrigendum", "corrigendum", []),
    ("maintenance agency", "standardization body", []),
    ("registration authority", "standardization body", []),
    ("copyright notice", "document element", []),
    ("patent statement", "statement", []),
    ("publication date", "standardization activity", []),
    ("stability date", "standardization activity", []),
    ("committee internal ballot", "ballot", []),
    ("formal vote", "vote", []),
    ("comment resolution", "standardization activity", []),
    ("editing committee", "standardization body", []),
    ("plenary meeting", "standardization activity", []),
    ("resolution", "standardization activity", []),
    ("harmonized standard", "standard", []),
    ("product standard", "standard", []),
    ("test method standard", "standard", []),
    ("terminology database", "terminology element", []),
]

ISTO_OBJECT_PROPERTIES = [
    "hasPart", "isPartOf", "hasScope", "hasClause", "hasAnnex", "hasEdition", "supersedes",
    "isSupersededBy", "refersTo", "isReferencedBy", "isDevelopedBy", "develops", "hasSecretariat",
    "hasConvenor", "hasProjectLeader", "hasStage", "precedes", "follows", "amends", "isAmendedBy",
    "corrects", "isCorrectedBy", "defines", "isDefinedIn", "hasTerm", "hasDefinition",
    "hasPreferredTerm", "hasAdmittedTerm", "hasDeprecatedTerm", "hasRequirement",
    "hasRecommendation", "hasPermission", "adopts", "isAdoptedBy", "hasLiaisonWith", "isMemberOf",
    "hasMember", "votesOn", "publishes", "isPublishedBy", "withdraws", "confirms", "revises",
    "hasNormativeReference",
]
ISTO_DATATYPE_PROPERTIES = ["hasReferenceNumber", "hasEditionNumber", "hasPublicationDate", "hasPageCount"]

ISO15531_CLASSES = [
    ("manufacturing management concept", None, []),
    ("resource", "manufacturing management concept", []),
    ("generic resource", "resource", []),
    ("specific resource", "resource", []),
    ("individual resource", "resource", []),
    ("human resource", "resource", []),
    ("resource information", "manufacturing management concept", []),
    ("resource characteristic", "resource information", []),
    ("resource administration", "resource information", []),
    ("resource status", "resource information", []),
    ("resource view", "resource information", []),
    ("resource representation", "resource information", []),
    ("resource configuration", "resource information", []),
    ("resource hierarchy", "resource information", []),
    ("product", "manufacturing management concept", []),
    ("component", "product", []),
    ("raw material", "product", []),
    ("finished product", "product", []),
    ("semi-finished product", "product", []),
    ("manufacturing process", "manufacturing management concept", []),
    ("operation", "manufacturing process", []),
    ("activity", "manufacturing process", []),
    ("set-up operation", "operation", []),
    ("maintenance operation", "operation", []),
    ("transport operation", "operation", []),
    ("inspection operation", "operation", []),
    ("manufacturing flow", "manufacturing management concept", []),
    ("material flow", "manufacturing flow", []),
    ("information flow", "manufacturing flow", []),
    ("service flow", "manufacturing flow", []),
    ("product flow", "manufacturing flow", []),
    ("flow control", "manufacturing flow", []),
    ("flow monitoring", "manufacturing flow", []),
    ("time concept", "manufacturing management concept", []),
    ("time domain", "time concept", []),
    ("time domain element", "time concept", []),
    ("time interval", "time domain element", []),
    ("point in time", "time domain element", []),
    ("time unit", "time concept", []),
    ("time boundary", "point in time", []),
    ("duration", "time concept", []),
    ("date and time", "time concept", []),
    ("calendar", "time concept", []),
    ("time period", "time interval", []),
    ("time stamp", "time concept", []),
    ("order", "manufacturing management concept", []),
    ("production order", "order", []),
    ("customer order", "order", []),
    ("purchase order", "order", []),
    ("work order", "order", []),
    ("shop floor", "manufacturing management concept", []),
    ("shop floor data", "shop floor", []),
    ("data acquisition", "shop floor", []),
    ("data acquisition system", "shop floor", []),
    ("measurement", "shop floor", []),
    ("quantitative data", "shop floor data", []),
    ("qualitative data", "shop floor data", []),
    ("control level", "shop floor", []),
    ("management level", "shop floor", []),
    ("enterprise", "manufacturing management concept", []),
    ("factory", "enterprise", []),
    ("plant", "enterprise", []),
    ("workshop", "enterprise", []),
    ("work centre", "enterprise", []),
    ("production line", "enterprise", []),
    ("manufacturing cell", "enterprise", []),
    ("management data", "manufacturing management concept", []),
    ("manufacturing management data", "management data", []),
    ("capacity", "management data", []),
    ("availability", "management data", []),
    ("schedule", "management data", []),
    ("scheduling", "management data", []),
    ("event", "management data", []),
    ("state", "management data", []),
    ("constraint", "management data", []),
    ("part", None, []),
    ("manufacturing management", "manufacturing management concept", []),
    ("production planning", "manufacturing management", []),
    ("production control", "manufacturing management", []),
    ("inventory", "management data", []),
    ("stock", "inventory", []),
    ("lot", "product", []),
    ("batch", "product", []),
    ("routing", "manufacturing process", []),
    ("process plan", "manufacturing process", []),
    ("work in progress", "product", []),
    ("resource usage", "resource information", []),
    ("resource allocation", "resource information", []),
    ("resource capability", "resource characteristic", []),
    ("physical value", "resource representation", []),
    ("aggregation of resources", "resource view", []),
    ("time scale", "time concept", []),
    ("time zone", "time concept", []),
    ("recurrence", "time concept", []),
    ("shift", "time period", []),
    ("downtime", "time period", []),
    ("lead time", "duration", []),
    ("cycle time", "duration", []),
    ("throughput", "management data", []),
    ("queue time", "duration", []),
]
# classes with a second superclass, as in the time model
ISO15531_EXTRA_EDGES = [("time boundary", "time domain element")]
ISO15531_OBJECT_PROPERTIES = [
    "usesResource", "producesProduct", "consumesMaterial", "hasOperation", "precedesOperation",
    "hasStatus", "hasView", "hasCharacteristic", "hasConfiguration", "isScheduledIn", "startsAt",
    "endsAt", "hasDuration", "isMeasuredBy", "acquiredFrom", "controlsFlow", "monitorsFlow",
    "belongsToFactory", "hasOrder", "hasTimeDomain",
]
ISO15531_DATATYPE_PROPERTIES = ["hasIdentifier", "hasQuantity", "hasValue", "hasTimeValue", "hasUnitName", "hasPriority"]

TECH_CLASSES = [
    ("technical concept", None, []),
    ("product data", "technical concept", []),
    ("spare part", "product data", ["part"]),
    ("assembly", "product data", []),
    ("bill of material", "product data", []),
    ("product model", "product data", []),
    ("product structure", "product data", []),
    ("data modelling concept", "technical concept", []),
    ("data model", "data modelling concept", []),
    ("information model", "data modelling concept", []),
    ("schema", "data modelling concept", []),
    ("entity", "data modelling concept", []),
    ("attribute", "data modelling concept", []),
    ("data type", "data modelling concept", []),
    ("supertype", "entity", []),
    ("subtype", "entity", []),
    ("global rule", "data modelling concept", []),
    ("application protocol", "data modelling concept", []),
    ("integrated resource", "data modelling concept", []),
    ("conformance class", "data modelling concept", []),
    ("implementation method", "data modelling concept", []),
    ("exchange structure", "implementation method", []),
    ("library concept", "technical concept", []),
    ("parts library", "library concept", []),
    ("reference dictionary", "library concept", []),
    ("basic semantic register", "library concept", []),
    ("data dictionary", "library concept", []),
    ("property definition", "library concept", []),
    ("unit of measure", "library concept", []),
    ("quantity", "library concept", []),
    ("identifier", "library concept", []),
    ("classification", "library concept", []),
    ("reference data", "library concept", []),
    ("data element", "library concept", []),
    ("automation system", "technical concept", []),
    ("enterprise control system", "automation system", []),
    ("manufacturing execution system", "automation system", []),
    ("programmable controller", "automation system", []),
    ("sensor", "automation system", []),
    ("actuator", "automation system", []),
    ("machine tool", "automation system", []),
    ("robot", "automation system", []),
    ("conveyor", "automation system", []),
    ("knowledge representation", "technical concept", []),
    ("ontology", "knowledge representation", []),
    ("class", "knowledge representation", []),
    ("object property", "knowledge representation", []),
    ("datatype property", "knowledge representation", []),
    ("axiom", "knowledge representation", []),
    ("individual", "knowledge representation", []),
    ("annotation", "knowledge representation", []),
    ("semantic annotation", "annotation", []),
    ("language resource", "knowledge representation", []),
    ("processing resource", "knowledge representation", []),
    ("gazetteer", "processing resource", []),
    ("tokeniser", "processing resource", []),
    ("corpus", "language resource", []),
    ("interoperability", "technical concept", []),
    ("data exchange", "interoperability", []),
    ("data sharing", "interoperability", []),
    ("life cycle", "technical concept", []),
    ("product life cycle", "life cycle", []),
    ("configuration management", "technical concept", []),
    ("change management", "configuration management", []),
    ("version", "configuration management", []),
    ("document management", "technical concept", []),
    ("file format", "document management", []),
    ("digital document", "document management", []),
    ("metadata", "document management", []),
    ("physical quantity", "quantity", []),
    ("measured value", "quantity", []),
    ("tolerance", "quantity", []),
    ("supplier", "technical concept", []),
    ("manufacturer", "supplier", []),
    ("catalogue", "library concept", []),
]
TECH_OBJECT_PROPERTIES = [
    "isComponentOf", "hasComponent", "isSuppliedBy", "hasProperty", "hasUnit", "isClassifiedAs",
    "conformsTo", "isDescribedBy", "implements", "isVersionOf", "replaces", "isInstanceOf",
]
TECH_DATATYPE_PROPERTIES = ["hasPartNumber", "hasName", "hasVersionNumber"]

ONTOLOGIES = {
    "isto": ("http://example.org/isto#", "GenericStandards", ISTO_CLASSES, [],
             ISTO_OBJECT_PROPERTIES, ISTO_DATATYPE_PROPERTIES, "isto.owl"),
    "iso15531": ("http://example.org/iso15531#", "DomainSpecific", ISO15531_CLASSES, ISO15531_EXTRA_EDGES,
                 ISO15531_OBJECT_PROPERTIES, ISO15531_DATATYPE_PROPERTIES, "ISO 15531"),
    "tech": ("http://example.org/tech#", "ExternalTechnical", TECH_CLASSES, [],
             TECH_OBJECT_PROPERTIES, TECH_DATATYPE_PROPERTIES, "ISO 13584-1"),
}


def local_name(label: str) -> str:
    return "".join(word.capitalize() for word in re.split(r"[^A-Za-z0-9]+", label) if word)


def ontology_payload(ontology_id: str) -> dict[str, object]:
    iri_base, category, classes, extra_edges, obj_props, dt_props, source = ONTOLOGIES[ontology_id]
    ids = {label: local_name(label) for label, _, _ in classes}
    payload_classes = []
    edges = []
    for label, parent, alts in classes:
        payload_classes.append(
            {
                "iri": ids[label],
                "primary_label": label,
                "alt_labels": list(alts),
                "definition": f"synthetic class for {label}",
                "source_ref": source,
            }
        )
        if parent is not None:
            edges.append([ids[label], ids[parent]])
    edges += [[ids[child], ids[parent]] for child, parent in extra_edges]
    return {
        "ontology_id": ontology_id,
        "iri_base": iri_base,
        "domain_category": category,
        "classes": payload_classes,
        "subclass_edges": edges,
        "object_properties": list(obj_props),
        "datatype_properties": list(dt_props),
    }


def rdfxml(payload: dict[str, object]) -> str:
    base = str(payload["iri_base"]).rstrip("#")
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<rdf:RDF",
        '    xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"',
        '    xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"',
        '    xmlns:owl="http://www.w3.org/2002/07/owl#"',
        '    xmlns:skos="http://www.w3.org/2004/02/skos/core#"',
        '    xmlns:dcterms="http://purl.org/dc/terms/"',
        '    xmlns:nc="urn:normcheck:vocab#"',
        f'    xml:base="{base}">',
        f'  <owl:Ontology rdf:about="{base}">',
        f"    <nc:ontologyId>{payload['ontology_id']}</nc:ontologyId>",
        f"    <nc:domainCategory>{payload['domain_category']}</nc:domainCategory>",
        "  </owl:Ontology>",
    ]
    parents: dict[str, list[str]] = {}
    for child, parent in payload["subclass_edges"]:
        parents.setdefault(child, []).append(parent)
    for cls in payload["classes"]:
        out.append(f'  <owl:Class rdf:about="#{cls["iri"]}">')
        out.append(f"    <rdfs:label>{escape(cls['primary_label'])}</rdfs:label>")
        out += [f"    <skos:altLabel>{escape(alt)}</skos:altLabel>" for alt in cls["alt_labels"]]
        out.append(f"    <skos:definition>{escape(cls['definition'])}</skos:definition>")
        out.append(f"    <dcterms:source>{escape(cls['source_ref'])}</dcterms:source>")
        out += [f'    <rdfs:subClassOf rdf:resource="#{parent}"/>' for parent in parents.get(cls["iri"], [])]
        out.append("  </owl:Class>")
    out += [f'  <owl:ObjectProperty rdf:about="#{p}"/>' for p in payload["object_properties"]]
    out += [f'  <owl:DatatypeProperty rdf:about="#{p}"/>' for p in payload["datatype_properties"]]
    out.append("</rdf:RDF>")
    return "\n".join(out) + "\n"


def check_vocabulary(payloads: list[dict[str, object]]) -> None:
    """Only 'part' may be shared across ontologies; only 'IS' may be an acronym."""
    owners: dict[tuple[str, ...], set[str]] = {}
    for payload in payloads:
        for cls in payload["classes"]:
            for label in [cls["primary_label"], *cls["alt_labels"]]:
                key = tuple(t.lower() for t in label_tokens(label))
                owners.setdefault(key, set()).add(f"{payload['ontology_id']}:{cls['iri']}")
                if case_policy_for(label).value == "AcronymExact":
                    assert label == "IS", label
    shared = {key: who for key, who in owners.items() if len(who) > 1}
    assert set(shared) == {("part",)}, shared


# Corpus

PARTS = [
    ("part01", "ISO 15531-1", "General overview", 32),
    ("part31", "ISO 15531-31", "Resource information model", 29),
    ("part32", "ISO 15531-32", "Conceptual model for resources usage management data", 37),
    ("part42", "ISO 15531-42", "Time model", 43),
    ("part43", "ISO 15531-43", "Data model for flow monitoring and manufacturing data exchange", 25),
    ("part44", "ISO 15531-44", "Information modelling for shop floor data acquisition", 31),
]

SERIES_TITLE = "Industrial automation systems and integration - Industrial manufacturing management data"

NORMATIVE_REFERENCES = {
    "part01": ["ISO 10303-1", "ISO 13584-1", "ISO/TS 16668"],
    "part31": ["ISO 15531-1:2004", "ISO 10303-11"],
    "part32": ["ISO 15531-1:2004", "ISO 15531-31", "ISO 10303-11"],
    "part42": ["ISO 15531-1:2004", "ISO 8601", "ISO 10303-11"],
    "part43": ["ISO 15531-1:2004", "ISO 15531-42", "IEC 62264-1"],
    "part44": ["ISO 15531-1:2004", "ISO 15531-42", "ISO 13584-24", "ISO 10303-11"],
}

REGISTRY = [
    ("ISO 15531", "Industrial automation systems and integration - Industrial manufacturing management data"),
    ("ISO 10303-1", "Product data representation and exchange - Part 1: Overview and fundamental principles"),
    ("ISO 10303-11", "Product data representation and exchange - Part 11: The EXPRESS language reference manual"),
    ("ISO 13584-1", "Parts library - Part 1: Overview and fundamental principles"),
    ("ISO 13584-24", "Parts library - Part 24: Logical resource: Logical model of supplier library"),
    ("ISO/TS 16668", "Basic semantic register: Rules, guidelines and methodology"),
    ("ISO 8601", "Date and time - Representations for information interchange"),
    ("IEC 62264-1", "Enterprise-control system integration - Part 1: Models and terminology"),
]

# Literal terms-and-definitions clauses. Seeded defects:
#   flow control   part01 3.1.1 == part42 3.1          -> DuplicateDefinition
#   operation      part01 3.1.2 ~ part43 3.1 (J = 0.6) -> DivergentDefinition
#   basic semantic register, adapted from ISO/TS 16668  -> AdaptedDefinition
#   part32 3.3 titled "resource view", opens "resource status:" -> TitleContentMismatch
#   part01 3.2.1 "part" labeled in iso15531 and tech    -> MultiParentWarning
FLOW_CONTROL = "control exercised over a manufacturing flow"
TERMS = {
    "part01": """3 Terms and definitions
For the purposes of this document, the following terms and definitions apply.

3.1 Terms relating to manufacturing management
3.1.1 flow control
{flow_control}

3.1.2 operation
elementary activity carried out on a manufacturing resource

3.1.3 manufacturing management
function which plans, controls and records the production of goods within an enterprise

3.1.4 basic semantic register
register of data element specifications used for exchanging data between applications [adapted from ISO/TS 16668]

3.2 Terms relating to standardization
3.2.1 part
fascicle of a multi-part standard published as a separate document
""",
    "part31": """3 Terms and definitions
For the purposes of this document, the following terms and definitions apply.

3.1 resource
any device, tool or means, excepting raw material and final product components, at the disposal of the enterprise to produce goods or services

3.2 generic resource
a resource that is described only by its type and capabilities

3.3 individual resource
a resource that is identified as one unique physical object

3.4 resource hierarchy
classification of resources into generic, specific and individual resources
""",
    "part32": """3 Terms and definitions
For the purposes of this document, the following terms and definitions apply.

3.1 resource characteristic
set of information about a resource

3.2 resource administration
administrative information attached to a resource

3.3 resource view
resource status: specific aggregation of resources considered from a given viewpoint

3.4 resource status
availability or not of a resource at a given point in time

3.5 resource representation
physical values that characterize a resource
""",
    "part42": """3 Terms and definitions
For the purposes of this document, the following terms and definitions apply.

3.1 flow control
{flow_control}

3.2 time domain
collection of time intervals and points in time used by a scheduling application

3.3 time interval
the quantity of time between two time boundaries

3.4 time boundary
instant that opens or closes a time interval

3.5 time unit
unit of measure of a duration
""",
    "part43": """3 Terms and definitions
For the purposes of this document, the following terms and definitions apply.

3.1 operation
elementary activity carried out by a manufacturing process

3.2 manufacturing flow
movement of products, components, raw materials or information between manufacturing processes

3.3 flow monitoring
observation of a manufacturing flow in order to record its state

3.4 information flow
exchange of data between the actors of a manufacturing process
""",
    "part44": """3 Terms and definitions
For the purposes of this document, the following terms and definitions apply.

3.1 shop floor data
data collected at control level and stored at management level

3.2 data acquisition system
system that collects quantitative or qualitative data from the shop floor

3.3 time stamp
date and time attached to an acquired value

3.4 acquired value
measured value transmitted by a data acquisition system
""",
}

SCOPES = {
    "part01": (
        "This part of ISO 15531 is an IS which gives a general overview of the series. "
        "It specifies the functions of the various series of parts and the relationships among them."
    ),
    "part31": "This part of ISO 15531 specifies an information model for the resources used in manufacturing.",
    "part32": "This part of ISO 15531 specifies a conceptual model for resources usage management data.",
    "part42": "This part of ISO 15531 specifies a time model for manufacturing management applications.",
    "part43": "This part of ISO 15531 specifies a data model for manufacturing flow management.",
    "part44": "This part of ISO 15531 specifies the modelling of shop floor data collected by data acquisition systems.",
}

# references in filler text must all resolve
FILLER_REFS = [
    "ISO 15531-1", "ISO 15531-31", "ISO 15531-32", "ISO 15531-42", "ISO 15531-43", "ISO 15531-44",
    "ISO 10303-11", "ISO 13584-1", "IEC 62264-1", "ISO 8601",
]

SENTENCES = [
    "The {a} is related to the {b} through the {c}.",
    "Each {a} may be associated with one or more instances of {b}, as described in {ref}.",
    "The information model represents the {a} and the {b} as separate entities.",
    "When a {a} changes, the corresponding {b} shall be updated.",
    "This clause specifies how the {a} supports the {b} within the {c}.",
    "Data about the {a} are exchanged between the {b} and the {c}.",
    "A {a} can be considered from the point of view of the {b}.",
    "The {a} does not depend on any given {b}; it exists before any appointment to an {c}.",
    "Further details on the {a} are given in {ref}.",
    "The {a} and the {b} shall be identified without ambiguity.",
    "Constraints on the {a} are expressed in the schema of {ref}.",
    "It is important to notice that the {a} is not a priori related to the {b}.",
    "The relationship between the {a} and the {b} is described by the {c}.",
]

SECTION_TOPICS = {
    "part01": ["overview of the series", "relationships among the parts", "relations with other standards"],
    "part31": ["resource hierarchy model", "resource characteristics model", "resource capabilities"],
    "part32": ["resource usage model", "resource administration model", "resource views and representations"],
    "part42": ["time domain model", "time intervals and boundaries", "calendars and time units"],
    "part43": ["flow management model", "flow monitoring model", "data exchange model"],
    "part44": ["shop floor data model", "data acquisition model", "time stamping and measurement"],
}


def filler_vocabulary() -> list[str]:
    words = []
    for classes in (ISO15531_CLASSES, TECH_CLASSES, ISTO_CLASSES):
        for label, _, _ in classes:
            if label.islower() and label != "part":
                words.append(label)
    return words


def part_text(doc_id: str, standard_ref: str, title: str) -> str:
    rng = random.Random(f"normcheck-fixture-{doc_id}")
    vocab = filler_vocabulary()
    number = standard_ref.split("-")[1]
    lines = [standard_ref, f"{SERIES_TITLE} - Part {number}: {title}", ""]
    lines += ["1 Scope", SCOPES[doc_id], ""]
    lines += [
        "2 Normative references",
        "The following documents are referred to in the text in such a way that some or all of their "
        "content constitutes requirements of this document.",
    ]
    lines += [f"{ref}, referenced document" for ref in NORMATIVE_REFERENCES[doc_id]]
    lines.append("")
    lines += TERMS[doc_id].format(flow_control=FLOW_CONTROL).rstrip("\n").split("\n")
    lines.append("")
    if doc_id == "part44":
        lines += [
            "4 Units of measurement",
            "Measurement units shall conform to ISO 99999 where applicable.",
            "",
        ]

    def paragraph() -> str:
        count = rng.randint(3, 5)
        out = []
        for _ in range(count):
            a, b, c = rng.sample(vocab, 3)
            out.append(rng.choice(SENTENCES).format(a=a, b=b, c=c, ref=rng.choice(FILLER_REFS)))
        return " ".join(out)

    body_start = 5 if doc_id == "part44" else 4
    clause = body_start
    topics = SECTION_TOPICS[doc_id]
    size = len("\n".join(lines).encode("utf-8"))
    target = TARGET_DOC_BYTES - 1500
    while size < target:
        topic = topics[(clause - body_start) % len(topics)]
        section = [f"{clause} {topic.capitalize()}", paragraph(), ""]
        for sub in range(1, 5):
            subject = rng.choice(vocab)
            section += [f"{clause}.{sub} Modelling of the {subject}", paragraph(), paragraph(), ""]
        lines += section
        size += len("\n".join(section).encode("utf-8")) + 1
        clause += 1
    lines += ["Annex A (informative) Listing of the information model", "A.1 General", paragraph(), ""]
    return "\n".join(lines)


def write(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "fixtures"))
    args = parser.parse_args()
    out = Path(args.out)

    payloads = [ontology_payload(oid) for oid in ONTOLOGIES]
    check_vocabulary(payloads)
    names = {"isto": "isto_fixture", "iso15531": "iso15531_fixture", "tech": "tech_fixture"}
    for payload in payloads:
        stem = names[payload["ontology_id"]]
        write(out / "ontologies" / f"{stem}.json", json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        write(out / "ontologies" / f"{stem}.owl", rdfxml(payload))

    documents = []
    for doc_id, ref, title, pages in PARTS:
        write(out / "mandate6" / f"{doc_id}.txt", part_text(doc_id, ref, title))
        documents.append(
            {"doc_id": doc_id, "standard_ref": ref, "title": title, "path": f"{doc_id}.txt", "page_count_hint": pages}
        )
    manifest = {"corpus_id": "mandate6", "documents": documents}
    write(out / "mandate6" / "manifest.json", json.dumps(manifest, indent=2, ensure_ascii=False) + "\n")
    registry = [{"standard_ref": ref, "title": title} for ref, title in REGISTRY]
    write(out / "registry.json", json.dumps(registry, indent=2, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
