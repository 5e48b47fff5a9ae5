#!/usr/bin/env python3
"""
Sweep timing check

Runs the full per-genus pipeline (sector enumeration, both orbifold Poincare
polynomials, the reconciliation report) for g = 2..G and reports the elapsed
time.

Usage:
    python scripts/sweep_timing.py --g-max 200 --workers 4
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hyperorb.assembler import genus_pipeline  # noqa: E402
from hyperorb.hyp_inertia import sectors_hyp  # noqa: E402
from hyperorb.sweep import SweepWorker  # noqa: E402


def run_genus(g: int) -> int:
    """Everything the report needs for one genus; returns the sector count."""
    genus_pipeline(g)
    return len(sectors_hyp(g))


def main() -> int:
    parser = argparse.ArgumentParser(
        description="Time the full hyperorb sweep",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--g-max", type=int, default=200, help="Last genus (default: 200)")
    parser.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")
    parser.add_argument("--budget", type=float, default=60.0, help="Seconds allowed (default: 60)")
    args = parser.parse_args()

    if args.g_max < 2:
        print("--g-max must be at least 2", file=sys.stderr)
        return 2

    start = time.perf_counter()
    counts = SweepWorker(run_genus, range(2, args.g_max + 1), args.workers).run()
    elapsed = time.perf_counter() - start

    print(f"g=2..{args.g_max}: {sum(counts)} sectors in {elapsed:.2f}s (budget {args.budget:.0f}s)")
    return 0 if elapsed <= args.budget else 1


if __name__ == "__main__":
    sys.exit(main())
