"""Serialization of a run into a deterministic output bundle."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from collections import Counter
from datetime import datetime, timezone
from pathlib import Path

from normcheck.annotate.gazetteer import MENTION
from normcheck.annotate.pipeline import REFERENCE, TERM_DEFINITION
from normcheck.consistency import ConsistencyFinding, FindingKind, Severity
from normcheck.errors import IoError, UnknownSource
from normcheck.extract import classify_provenance, ontology_categories
from normcheck.ontology import DomainCategory, ontology_stats
from normcheck.workflow import RunOutputs

CSV_COLUMNS = ("kind", "severity", "doc_id", "clause", "start", "end", "similarity", "detail")


def dump_json(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def findings_csv(findings: list[ConsistencyFinding]) -> str:
    """One row per finding, located at its first location."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for finding in findings:
        loc = finding.locations[0]
        similarity = "" if finding.similarity is None else repr(finding.similarity)
        writer.writerow(
            (finding.kind.value, finding.severity.value, loc.doc_id, loc.clause_number,
             loc.span[0], loc.span[1], similarity, finding.detail)
        )
    return buf.getvalue()


def _md_cell(value: object) -> str:
    return str(value).replace("|", "\\|").replace("\n", " ")


def _table(header: tuple[str, ...], rows: list[tuple[object, ...]]) -> list[str]:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(_md_cell(cell) for cell in row) + " |" for row in rows]
    return lines


def summary_markdown(outputs: RunOutputs) -> str:
    corpus = outputs.corpus
    annotated = outputs.annotated
    lines = [f"# Consistency report: {corpus.corpus_id}", "", "## Corpus", ""]
    rows = []
    for doc in sorted(corpus, key=lambda d: d.doc_id):
        item = annotated.documents.get(doc.doc_id)
        anns = item.annotations if item else ()
        count = Counter(ann.ann_type for ann in anns)
        rows.append(
            (doc.doc_id, doc.standard_ref, doc.title, sum(1 for _ in doc.iter_clauses()),
             len(item.term_entries) if item else 0, count[MENTION], count[REFERENCE], count[TERM_DEFINITION])
        )
    lines += _table(
        ("doc_id", "standard", "title", "clauses", "terms", "mentions", "references", "term definitions"), rows
    )

    if outputs.failures:
        lines += ["", "## Failed inputs", ""]
        lines += [f"- `{name}`: {message}" for name, message in sorted(outputs.failures.items())]

    lines += ["", "## Ontologies", ""]
    rows = []
    for model in sorted(outputs.ontologies, key=lambda m: m.ontology_id):
        stats = ontology_stats(model)
        rows.append(
            (model.ontology_id, model.domain_category.value, stats["classes"], stats["object_properties"],
             stats["datatype_properties"], stats["subclass_edges"], stats["roots"])
        )
    lines += _table(
        ("ontology", "category", "classes", "object properties", "datatype properties", "subclass edges", "roots"),
        rows,
    )

    categories = ontology_categories(outputs.ontologies)
    by_category: Counter[str] = Counter()
    for item in annotated:
        for ann in item.annotations:
            try:
                by_category[classify_provenance(ann, categories).value] += 1
            except UnknownSource:
                by_category["Unknown"] += 1
    lines += ["", "## Annotations by knowledge domain", ""]
    order = [c.value for c in DomainCategory] + ["Unknown"]
    lines += _table(("category", "annotations"), [(c, by_category[c]) for c in order if by_category[c] or c != "Unknown"])

    resolved = sum(1 for link in outputs.links if link.resolved)
    lines += [
        "",
        "## Extraction",
        "",
        f"- entities: {len(outputs.entities)}",
        f"- references: {len(outputs.links)} ({resolved} resolved, {len(outputs.links) - resolved} unresolved)",
        f"- candidate classes: {len(outputs.candidates)}",
    ]
    status = Counter(c.status.value for c in outputs.candidates)
    lines += [f"  - {name}: {status[name]}" for name in sorted(status)]

    severities = Counter(f.severity for f in outputs.findings)
    lines += [
        "",
        "## Findings",
        "",
        f"{len(outputs.findings)} findings: "
        + ", ".join(f"{severities[s]} {s.value}" for s in (Severity.ERROR, Severity.WARNING, Severity.INFO)),
    ]
    for kind in FindingKind:
        group = [f for f in outputs.findings if f.kind is kind]
        lines += ["", f"### {kind.value} ({len(group)})", ""]
        if not group:
            lines.append("None.")
            continue
        for finding in group:
            first = finding.locations[0]
            where = f"{first.doc_id} {first.clause_number}".strip()
            extra = f" (+{len(finding.locations) - 1} more locations)" if len(finding.locations) > 1 else ""
            lines.append(f"- **{finding.severity.value}** [{where}]{extra}: {_md_cell(finding.detail)}")
    return "\n".join(lines) + "\n"


def bundle_files(outputs: RunOutputs) -> dict[str, str]:
    """Relative path -> file content for every bundle file except the manifest."""
    files: dict[str, str] = {}
    for doc_id, item in sorted(outputs.annotated.documents.items()):
        files[f"annotations/{doc_id}.json"] = dump_json(item.annotations.to_json(doc_id))
    files["entities.json"] = dump_json(
        {
            "entities": [entity.to_json() for entity in outputs.entities],
            "references": [link.to_json() for link in outputs.links],
        }
    )
    files["candidates.json"] = dump_json([candidate.to_json() for candidate in outputs.candidates])
    files["findings.json"] = dump_json([finding.to_json() for finding in outputs.findings])
    files["findings.csv"] = findings_csv(outputs.findings)
    files["summary.md"] = summary_markdown(outputs)
    return files


def write_files(files: dict[str, str], out_dir: str | Path, timestamp: bool = False) -> dict[str, object]:
    """Write ``files`` under ``out_dir`` plus a ``manifest.json`` of sha256 digests."""
    out_dir = Path(out_dir)
    entries = []
    try:
        for rel in sorted(files):
            data = files[rel].encode("utf-8")
            target = out_dir / rel
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_bytes(data)
            entries.append({"path": rel, "sha256": hashlib.sha256(data).hexdigest(), "bytes": len(data)})
        manifest: dict[str, object] = {"files": entries}
        if timestamp:
            manifest["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
        (out_dir / "manifest.json").write_text(dump_json(manifest), encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write bundle to {out_dir}: {exc}") from exc
    return manifest


def emit_bundle(outputs: RunOutputs, out_dir: str | Path, timestamp: bool = False) -> dict[str, object]:
    return write_files(bundle_files(outputs), out_dir, timestamp)
