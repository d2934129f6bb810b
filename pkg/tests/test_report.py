from __future__ import annotations

import csv
import hashlib
import io
import json

import pytest

from conftest import DATA
from normcheck.errors import IoError
from normcheck.report import CSV_COLUMNS, bundle_files, dump_json, findings_csv, summary_markdown, write_files


def test_summary_matches_golden(fixture_run):
    assert summary_markdown(fixture_run) == (DATA / "golden_summary.md").read_text(encoding="utf-8")


def test_summary_sections(fixture_run):
    text = summary_markdown(fixture_run)
    for heading in ("## Corpus", "## Ontologies", "## Annotations by knowledge domain", "## Extraction", "## Findings"):
        assert heading in text
    assert "## Failed inputs" not in text


def test_bundle_layout(fixture_run):
    files = bundle_files(fixture_run)
    docs = [f"annotations/{d}.json" for d in ("part01", "part31", "part32", "part42", "part43", "part44")]
    assert sorted(files) == sorted(docs + ["entities.json", "candidates.json", "findings.json", "findings.csv", "summary.md"])
    entities = json.loads(files["entities.json"])
    assert set(entities) == {"entities", "references"}
    findings = json.loads(files["findings.json"])
    assert len(findings) == 7


def test_findings_csv(fixture_run):
    rows = list(csv.reader(io.StringIO(findings_csv(fixture_run.findings))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 1 + len(fixture_run.findings)
    divergent = [r for r in rows if r[0] == "DivergentDefinition"]
    assert float(divergent[0][6]) == pytest.approx(0.6, abs=1e-12)


def test_dump_json_is_canonical():
    assert dump_json({"b": 1, "a": "é"}) == '{\n  "a": "é",\n  "b": 1\n}\n'


def test_write_files_manifest(tmp_path):
    manifest = write_files({"x/a.txt": "hello", "b.txt": "é"}, tmp_path)
    assert [e["path"] for e in manifest["files"]] == ["b.txt", "x/a.txt"]
    assert manifest["files"][1]["sha256"] == hashlib.sha256(b"hello").hexdigest()
    on_disk = json.loads((tmp_path / "manifest.json").read_text(encoding="utf-8"))
    assert on_disk == manifest and "generated_at" not in on_disk
    stamped = write_files({"a": "1"}, tmp_path / "t", timestamp=True)
    assert "generated_at" in stamped


def test_write_files_io_error(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    with pytest.raises(IoError):
        write_files({"a.txt": "x"}, blocker / "sub")
