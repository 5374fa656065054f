from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from typing import Callable, List, Sequence, TypeVar

from .runlog import log_line

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], size: int) -> List[List[T]]:
    size = max(1, size)
    return [list(items[i:i + size]) for i in range(0, len(items), size)]


def chunk_size(total: int, workers: int, per_worker: int = 4) -> int:
    """Roughly ``per_worker`` chunks per worker so stragglers even out."""
    if workers <= 1:
        return max(1, total)
    return max(1, -(-total // (workers * per_worker)))


def parallel_map(
    func: Callable[[T], R],
    items: Sequence[T],
    workers: int = 1,
    log_file=None,
    label: str = "parallel_map",
    processes: bool = False,
) -> List[R]:
    """
    Apply ``func`` to every item, in a pool when ``workers > 1``.

    ``processes=True`` uses a process pool for the CPU-bound exact LP sweeps;
    ``func`` and the items must then pickle (module-level functions or
    ``functools.partial`` of them, no lambdas). Otherwise a thread pool runs
    the tasks.

    Results come back in input order whatever the completion order was, so
    callers get the same output for any worker count. The first exception
    raised by a task is re-raised after the pool shut down.
    """
    total = len(items)
    kind = " (processes)" if processes and workers > 1 else ""
    log_line(log_file, f"--- {label}() START: {total} tasks, workers={workers}{kind} ---")
    if workers <= 1 or total <= 1:
        results = [func(item) for item in items]
        log_line(log_file, f"--- {label}() END ---")
        return results

    results: List[R] = [None] * total  # type: ignore[list-item]
    first_error: BaseException | None = None
    pool_cls = ProcessPoolExecutor if processes else ThreadPoolExecutor
    with pool_cls(max_workers=workers) as executor:
        futures = {executor.submit(func, item): i for i, item in enumerate(items)}
        for future in as_completed(futures):
            i = futures[future]
            try:
                results[i] = future.result()
            except Exception as e:
                log_line(log_file, f"Exception in task {i}: {e}")
                if first_error is None:
                    first_error = e
    log_line(log_file, f"--- {label}() END: {'1 error' if first_error else 'ok'} ---")
    if first_error is not None:
        raise first_error
    return results
