"""Command-line front end.

Examples:
  hyperorb sectors --g 2
  hyperorb sectors --stack m0n --n 6 --format json
  hyperorb poincare --g 2 --mode fp --grading complex
  hyperorb reconcile --g 2..5 --format csv --out reports/
  hyperorb verify --g-max 40 --workers 4

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from functools import partial
from pathlib import Path
from typing import Callable, Optional, Sequence

from .assembler import ReconciliationError
from .config import COMMANDS, GRADINGS, MODES, OUTPUT_FORMATS, STACKS
from .export import Document, merge_documents, render_document
from .export_paths import OutputPathError, write_output
from .hyp_inertia import InertiaConsistencyError
from .options import RunConfig, UsageError, load_config_file
from .reports import (
    corollary_document,
    poincare_document,
    reconcile_document,
    sectors_hyp_document,
    sectors_m0n_document,
    stringy_document,
    summary_document,
    verify_document,
)
from .sweep import SweepWorker
from .verify import check_genus, first_failure

logger = logging.getLogger("hyperorb")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--g", help="Genus or inclusive range A..B (g >= 2)")
    common.add_argument("--n", help="Number of points or inclusive range A..B (n >= 3), with --stack m0n")
    common.add_argument("--g-max", dest="g_max", type=int, help="Last genus checked by verify (default: 40)")
    common.add_argument("--stack", choices=STACKS, help="Inertia stack to enumerate (default: hyp)")
    common.add_argument("--mode", choices=MODES, help="paper: printed closed formula; fp: oracle ages")
    common.add_argument("--grading", choices=GRADINGS, help="real shifts by 2*age, complex by age")
    common.add_argument("--format", dest="fmt", choices=OUTPUT_FORMATS, help="Output format (default: text)")
    common.add_argument("--out", type=Path, help="Output file, or an existing directory to name one in")
    common.add_argument("--workers", type=int, help="Worker processes for sweeps (default: 1)")
    common.add_argument("--config", type=Path, help="YAML file with default option values")
    common.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="hyperorb",
        description="Exact orbifold cohomology of H_g and the twisted sectors of [M_(0,n)/S_n]",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("\n", 2)[2],
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "sectors": "list the sectors of the inertia stack",
        "poincare": "orbifold Poincare polynomial with per-sector shifts",
        "stringy": "stringy Chow polynomial",
        "corollary": "closed total-dimension count, literal and clamped",
        "reconcile": "printed exponents against oracle ages, sector by sector",
        "verify": "check every law for g = 2..g-max",
        "summary": "sector counts by reduced and full order",
    }
    for command in COMMANDS:
        sub.add_parser(command, parents=[common], help=helps[command])
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def build_config(args: argparse.Namespace) -> RunConfig:
    """File values first, then every flag given on the command line."""
    values = load_config_file(args.config) if args.config is not None else {}
    for name in ("g", "n", "g_max", "stack", "mode", "grading", "fmt", "out", "workers"):
        flag = getattr(args, name)
        if flag is not None:
            values[name] = flag
    return RunConfig(command=args.command, **values)


def _index_label(config: RunConfig) -> str:
    if config.command == "verify":
        return f"g2..{config.g_max}"
    if config.command == "sectors" and config.stack == "m0n":
        return f"n{config.n}"
    return f"g{config.g}"


def _task_for(config: RunConfig) -> Callable[[int], Document]:
    if config.command == "sectors":
        return sectors_m0n_document if config.stack == "m0n" else sectors_hyp_document
    if config.command == "poincare":
        return partial(poincare_document, mode=config.mode, grading=config.grading)
    if config.command == "stringy":
        return partial(stringy_document, mode=config.mode, grading=config.grading)
    return {
        "corollary": corollary_document,
        "reconcile": reconcile_document,
        "summary": summary_document,
    }[config.command]


def _progress(percent: int, message: str) -> None:
    logger.info("progress=%d%% %s", percent, message)


def run(config: RunConfig) -> int:
    """Compute, render and write one command; returns the exit code."""
    indices = config.indices()
    exit_code = EXIT_OK
    if config.command == "verify":
        results = SweepWorker(check_genus, indices, config.workers, _progress).run()
        doc = verify_document(results)
        failure = first_failure(results)
        if failure is not None:
            print(f"verify: {failure.message}", file=sys.stderr)
            exit_code = EXIT_VERIFY_FAILED
    else:
        docs = SweepWorker(_task_for(config), indices, config.workers, _progress).run()
        doc = merge_documents(config.command, docs)
    text = render_document(doc, config.fmt)
    target = write_output(text, config.out, config.command, _index_label(config), config.fmt)
    if target is not None:
        logger.info("wrote %s", target)
    return exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args.verbose)

    try:
        config = build_config(args)
        logger.debug("run config:\n%s", config.summary())
        return run(config)
    except ReconciliationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except InertiaConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except (UsageError, OutputPathError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
