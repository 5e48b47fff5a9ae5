"""Data model for run options shared by every subcommand."""
from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from .config import (
    COMMANDS,
    DEFAULT_FORMAT,
    DEFAULT_G_MAX,
    DEFAULT_GRADING,
    DEFAULT_MODE,
    DEFAULT_STACK,
    DEFAULT_WORKERS,
    GRADINGS,
    MODES,
    OUTPUT_FORMATS,
    STACKS,
    SWEEP_G_LIMIT,
)


class UsageError(ValueError):
    """Raised for option values the command line should reject with exit code 2."""


@dataclass(frozen=True)
class IndexRange:
    """Inclusive integer range written as ``A`` or ``A..B``."""

    start: int
    stop: int

    @classmethod
    def parse(cls, text: str | int) -> "IndexRange":
        if isinstance(text, int):
            return cls(text, text)
        raw = str(text).strip()
        try:
            if ".." in raw:
                lo, hi = raw.split("..", 1)
                return cls(int(lo), int(hi))
            value = int(raw)
        except ValueError as exc:
            raise UsageError(f"Not an index or range A..B: {text!r}") from exc
        return cls(value, value)

    def values(self) -> List[int]:
        return list(range(self.start, self.stop + 1))

    def __str__(self) -> str:
        return str(self.start) if self.start == self.stop else f"{self.start}..{self.stop}"


@dataclass
class RunConfig:
    command: str
    stack: str = DEFAULT_STACK
    g: Optional[IndexRange] = None
    n: Optional[IndexRange] = None
    g_max: int = DEFAULT_G_MAX
    mode: str = DEFAULT_MODE
    grading: str = DEFAULT_GRADING
    fmt: str = DEFAULT_FORMAT
    out: Optional[Path] = None
    workers: int = DEFAULT_WORKERS

    def __post_init__(self) -> None:
        """Validate options after initialization."""
        if self.command not in COMMANDS:
            raise UsageError(f"Unknown command {self.command!r}; expected one of {COMMANDS}")
        if self.stack not in STACKS:
            raise UsageError(f"Stack must be one of {STACKS}, got {self.stack!r}")
        if self.mode not in MODES:
            raise UsageError(f"Mode must be one of {MODES}, got {self.mode!r}")
        if self.grading not in GRADINGS:
            raise UsageError(f"Grading must be one of {GRADINGS}, got {self.grading!r}")
        if self.fmt not in OUTPUT_FORMATS:
            raise UsageError(f"Format must be one of {OUTPUT_FORMATS}, got {self.fmt!r}")
        for name in ("g_max", "workers"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise UsageError(f"{name} must be an integer, got {value!r}")
        if self.workers < 1:
            raise UsageError(f"Workers must be positive, got {self.workers}")
        if isinstance(self.g, (str, int)):
            self.g = IndexRange.parse(self.g)
        if isinstance(self.n, (str, int)):
            self.n = IndexRange.parse(self.n)
        for name in ("g", "n"):
            index = getattr(self, name)
            if index is not None and not isinstance(index, IndexRange):
                raise UsageError(f"{name} must be an index or a range A..B, got {index!r}")
        if self.out is not None:
            self.out = Path(self.out)

        if self.stack == "m0n" and self.command != "sectors":
            raise UsageError("Only the sectors command is available for --stack m0n")

        if self.command == "verify":
            if self.g_max < 2:
                raise UsageError(f"--g-max must be at least 2, got {self.g_max}")
            if self.g_max > SWEEP_G_LIMIT:
                raise UsageError(f"--g-max above {SWEEP_G_LIMIT} is not supported")
            return
        if self.command == "sectors" and self.stack == "m0n":
            self._check_range(self.n, "--n", minimum=3)
            return
        self._check_range(self.g, "--g", minimum=2)
        if self.g.stop > SWEEP_G_LIMIT:
            raise UsageError(f"--g above {SWEEP_G_LIMIT} is not supported")

    @staticmethod
    def _check_range(index: Optional[IndexRange], flag: str, minimum: int) -> None:
        if index is None:
            raise UsageError(f"{flag} is required for this command")
        if index.stop < index.start:
            raise UsageError(f"{flag} range {index} is empty")
        if index.start < minimum:
            raise UsageError(f"{flag} must be at least {minimum}, got {index.start}")

    def indices(self) -> List[int]:
        """Indices the command sweeps over, in output order."""
        if self.command == "verify":
            return list(range(2, self.g_max + 1))
        if self.command == "sectors" and self.stack == "m0n":
            return self.n.values()
        return self.g.values()

    def summary(self) -> str:
        lines = [
            f"=== hyperorb {self.command} ===",
            f"Stack: {self.stack}",
            f"Index: {'n=' + str(self.n) if self.stack == 'm0n' and self.command == 'sectors' else 'g=' + str(self.g)}",
            f"Mode: {self.mode}",
            f"Grading: {self.grading}",
            f"Format: {self.fmt}",
            f"Workers: {self.workers}",
            f"Output: {self.out or 'stdout'}",
        ]
        if self.command == "verify":
            lines[2] = f"Index: g=2..{self.g_max}"
        return "\n".join(lines)


def load_config_file(path: Path) -> Dict[str, Any]:
    """Read run defaults from a YAML mapping whose keys are RunConfig field names."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError as exc:
        raise UsageError(f"Config file {path} does not exist") from exc
    except yaml.YAMLError as exc:
        raise UsageError(f"Config file {path} is not valid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"Config file {path} must contain a mapping")
    known = {f.name for f in fields(RunConfig)} - {"command"}
    unknown = sorted(set(data) - known)
    if unknown:
        raise UsageError(f"Unknown keys in {path}: {', '.join(unknown)}")
    return {key: _coerce_value(path, key, value) for key, value in data.items()}


def _coerce_value(path: Path, key: str, value: Any) -> Any:
    """YAML scalars to the types RunConfig expects; anything else is a usage error."""
    if key in ("g_max", "workers"):
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise UsageError(f"{key} in {path} must be an integer, got {value!r}")
        try:
            return int(value)
        except ValueError as exc:
            raise UsageError(f"{key} in {path} must be an integer, got {value!r}") from exc
    if key in ("g", "n"):
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise UsageError(f"{key} in {path} must be an index or a range A..B, got {value!r}")
        IndexRange.parse(value)
        return value
    if not isinstance(value, str):
        raise UsageError(f"{key} in {path} must be a string, got {value!r}")
    return value
