from __future__ import annotations

from pathlib import Path

import pytest

from normcheck.workflow import run_workflow

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"
DATA = Path(__file__).resolve().parent / "data"
MANIFEST = FIXTURES / "mandate6" / "manifest.json"
REGISTRY = FIXTURES / "registry.json"
ONTOLOGY_STEMS = ("isto_fixture", "iso15531_fixture", "tech_fixture")
NATIVE_ONTOLOGIES = tuple(FIXTURES / "ontologies" / f"{stem}.json" for stem in ONTOLOGY_STEMS)
RDF_ONTOLOGIES = tuple(FIXTURES / "ontologies" / f"{stem}.owl" for stem in ONTOLOGY_STEMS)

_criteria: dict[int, dict[str, object]] = {}


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion covered by a test")


def pytest_runtest_logreport(report: pytest.TestReport) -> None:
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, label = marker
    entry = _criteria.setdefault(number, {"label": label, "ok": True, "tests": 0})
    if report.when == "call":
        entry["tests"] += 1
    if report.failed or (report.when == "setup" and report.skipped):
        entry["ok"] = False


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item: pytest.Item, call: pytest.CallInfo) -> object:
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter: object) -> None:
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['label']} ({entry['tests']} tests)")


@pytest.fixture(scope="session")
def fixture_run():
    return run_workflow(MANIFEST, NATIVE_ONTOLOGIES, (), REGISTRY)


@pytest.fixture(scope="session")
def fixture_index(fixture_run):
    return fixture_run.annotated.index
