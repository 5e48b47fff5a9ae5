"""Background sweep over genus (or point-count) indices."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Generic, List, Optional, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
ProgressFn = Callable[[int, str], None]  # percent done, status message


class SweepCancelled(RuntimeError):
    """Raised by SweepWorker.run when cancel() was called before the sweep finished."""


class SweepWorker(Generic[T]):
    """Evaluate ``task`` on every index, in a process pool when ``workers > 1``.

    Results come back in index order whatever the worker count, so rendered
    output does not depend on scheduling. ``task`` must be a module-level
    function so it can be sent to worker processes.
    """

    def __init__(self, task: Callable[[int], T], indices: Sequence[int], workers: int = 1,
                 progress: Optional[ProgressFn] = None) -> None:
        if workers < 1:
            raise ValueError(f"Workers must be positive, got {workers}")
        self._task = task
        self._indices = list(indices)
        self._workers = workers
        self._progress = progress
        self._cancelled = False

    def cancel(self) -> None:
        """Stop after the result currently being collected."""
        self._cancelled = True

    def _report(self, done: int, index: int) -> None:
        if self._progress is None:
            return
        percent = int(100 * done / max(len(self._indices), 1))
        self._progress(percent, f"index {index} done ({done}/{len(self._indices)})")

    def run(self) -> List[T]:
        logger.info("sweep start task=%s count=%d workers=%d",
                    getattr(self._task, "__name__", "task"), len(self._indices), self._workers)
        if self._workers == 1 or len(self._indices) < 2:
            results = self._collect(map(self._task, self._indices))
        else:
            with ProcessPoolExecutor(max_workers=self._workers) as pool:
                try:
                    results = self._collect(pool.map(self._task, self._indices))
                except SweepCancelled:
                    pool.shutdown(wait=False, cancel_futures=True)
                    raise
        logger.info("sweep done count=%d", len(results))
        return results

    def _collect(self, stream) -> List[T]:
        results: List[T] = []
        for index, result in zip(self._indices, stream):
            if self._cancelled:
                logger.warning("sweep cancelled after %d of %d", len(results), len(self._indices))
                raise SweepCancelled(f"Sweep cancelled after {len(results)} of {len(self._indices)} indices")
            results.append(result)
            self._report(len(results), index)
        return results
