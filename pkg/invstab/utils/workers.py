"""Thread fan-out for scans over independent parameters."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
import logging
from multiprocessing import cpu_count
import os

_LOGGER = logging.getLogger(__name__)

THREADS_ENV = "INVSTAB_THREADS"


def worker_count(threads: int | None = None) -> int:
    """Return the number of worker threads to use."""
    if threads is None:
        threads = int(os.getenv(THREADS_ENV, "0"))
    return threads or cpu_count()


def ordered_map[T, R](
    func: Callable[[T], R],
    items: Iterable[T],
    threads: int | None = None,
) -> list[R]:
    """Apply func to every item, keeping the input order in the result."""
    items = list(items)
    workers = min(worker_count(threads), len(items))
    if workers <= 1:
        return [func(item) for item in items]
    _LOGGER.debug("Mapping %d items over %d threads", len(items), workers)
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="invstab") as pool:
        return list(pool.map(func, items))
