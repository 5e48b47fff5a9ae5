"""Helpers for deriving deterministic output paths and writing rendered results."""
from pathlib import Path
import sys
from typing import Optional

from .config import FORMAT_SUFFIXES


class OutputPathError(Exception):
    """Raised when the output location is not writable or cannot be created."""


def derive_output_file(out_dir: Path, command: str, index_label: str, fmt: str) -> Path:
    """Build the file name used when --out names a directory.

    Pattern: out_dir/<command>_<index_label><suffix>
    Example: reports/, poincare, g2..5, json -> reports/poincare_g2..5.json
    """
    if not command:
        raise ValueError("Command name must not be empty")
    return out_dir / f"{command}_{index_label}{FORMAT_SUFFIXES[fmt]}"


def ensure_parent_writable(path: Path) -> None:
    """Ensure the parent directory of ``path`` exists and is writable; raise OutputPathError otherwise."""
    parent = path.parent
    try:
        parent.mkdir(parents=True, exist_ok=True)
    except PermissionError as exc:
        raise OutputPathError(f"No write access to {parent}") from exc
    except OSError as exc:
        raise OutputPathError(f"Output directory {parent} cannot be created") from exc

    test_file = parent / ".write_test"
    try:
        test_file.write_text("ok", encoding="utf-8")
        test_file.unlink(missing_ok=True)
    except OSError as exc:
        raise OutputPathError(f"Output directory {parent} is not writable") from exc


def write_output(text: str, out: Optional[Path], command: str, index_label: str, fmt: str) -> Optional[Path]:
    """Write to ``out`` (a file, or a directory to derive a name in) or to stdout.

    Returns the path written, or None for stdout.
    """
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None
    target = derive_output_file(out, command, index_label, fmt) if out.is_dir() else out
    ensure_parent_writable(target)
    try:
        with open(target, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as exc:
        raise OutputPathError(f"Cannot write {target}: {exc}") from exc
    return target
