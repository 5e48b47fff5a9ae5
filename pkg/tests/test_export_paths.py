from pathlib import Path

import pytest

from hyperorb.export_paths import (
    OutputPathError,
    derive_output_file,
    ensure_parent_writable,
    write_output,
)


def test_derive_output_file():
    assert derive_output_file(Path("reports"), "poincare", "g2..5", "json") == Path("reports/poincare_g2..5.json")
    assert derive_output_file(Path("out"), "verify", "g2..40", "latex").suffix == ".tex"
    with pytest.raises(ValueError):
        derive_output_file(Path("out"), "", "g2", "text")


def test_write_to_stdout(capsys):
    assert write_output("hello\n", None, "summary", "g2", "text") is None
    assert capsys.readouterr().out == "hello\n"


def test_write_to_file_creates_parent(tmp_path):
    target = tmp_path / "nested" / "result.csv"
    assert write_output("a,b\n", target, "summary", "g2", "csv") == target
    assert target.read_text(encoding="utf-8") == "a,b\n"


def test_write_into_directory(tmp_path):
    written = write_output("{}\n", tmp_path, "reconcile", "g2", "json")
    assert written == tmp_path / "reconcile_g2.json"
    assert written.exists()


def test_parent_that_is_a_file(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("x", encoding="utf-8")
    with pytest.raises(OutputPathError):
        ensure_parent_writable(blocker / "result.txt")
