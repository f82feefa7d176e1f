"""Chunked map helper for the enumeration-heavy routines.

Work is split into independent chunks up front; chunk results are merged by
the caller with associative, commutative operations, so the outcome does not
depend on the worker count.
"""

from __future__ import annotations

import os
import warnings
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

WORKERS_ENV = "EPOS_WORKERS"


def resolve_workers(workers: int | None = None) -> int:
    """Explicit value, else the EPOS_WORKERS variable, else the core count."""
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_chunked(func: Callable[[T], R], chunks: Sequence[T], workers: int | None) -> list[R]:
    """Apply ``func`` to every chunk, in order, optionally across processes.

    ``func`` must be a module-level function and the chunk arguments picklable.
    Falls back to sequential execution when a process pool cannot be created.
    """
    count = resolve_workers(workers)
    if count <= 1 or len(chunks) <= 1:
        return [func(chunk) for chunk in chunks]
    try:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(count, len(chunks))) as pool:
            return list(pool.map(func, chunks))
    except (OSError, PermissionError) as exc:
        warnings.warn(f"process pool unavailable ({exc}); running sequentially")
        return [func(chunk) for chunk in chunks]


def split_ranges(total: int, pieces: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into at most ``pieces`` contiguous half-open ranges."""
    pieces = max(1, min(pieces, total)) if total else 1
    step, extra = divmod(total, pieces)
    out = []
    start = 0
    for i in range(pieces):
        end = start + step + (1 if i < extra else 0)
        out.append((start, end))
        start = end
    return out
