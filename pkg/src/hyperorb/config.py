"""Shared configuration defaults for hyperorb."""
from typing import List

# Upper end of the default invariant sweep (`verify` without --g-max)
DEFAULT_G_MAX = 40

# Sweeps run inline unless more workers are requested
DEFAULT_WORKERS = 1

# Largest genus accepted on the command line; the exact sweep is quadratic in g
SWEEP_G_LIMIT = 2000

COMMANDS: List[str] = [
    "sectors",
    "poincare",
    "stringy",
    "corollary",
    "reconcile",
    "verify",
    "summary",
]
STACKS: List[str] = ["hyp", "m0n"]
MODES: List[str] = ["paper", "fp"]
GRADINGS: List[str] = ["real", "complex"]
OUTPUT_FORMATS: List[str] = ["text", "json", "csv", "latex"]

DEFAULT_STACK = "hyp"
DEFAULT_MODE = "paper"
DEFAULT_GRADING = "real"
DEFAULT_FORMAT = "text"

# File suffix used when --out names a directory
FORMAT_SUFFIXES = {
    "text": ".txt",
    "json": ".json",
    "csv": ".csv",
    "latex": ".tex",
}
