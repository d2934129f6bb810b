from __future__ import annotations

import subprocess
import sys

from conftest import FIXTURES, ROOT


def test_fixtures_are_up_to_date(tmp_path):
    subprocess.run([sys.executable, str(ROOT / "tools" / "make_fixtures.py"), "--out", str(tmp_path)], check=True)
    generated = sorted(p.relative_to(tmp_path) for p in tmp_path.rglob("*") if p.is_file())
    assert generated
    for rel in generated:
        assert (tmp_path / rel).read_bytes() == (FIXTURES / rel).read_bytes(), rel


def test_fixture_documents_are_about_50kb():
    for path in sorted((FIXTURES / "mandate6").glob("*.txt")):
        assert 45_000 <= path.stat().st_size <= 55_000
