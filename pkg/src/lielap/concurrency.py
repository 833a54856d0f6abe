"""Worker-pool helper honoring the LIE_LAP_THREADS environment variable.

Core operations are pure functions of immutable values, so mapping them
over labels is safe to parallelize.  LIE_LAP_THREADS caps the pool size;
unset or 1 means serial execution.  Results always come back in input
order, so output assembly is deterministic regardless of the cap.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "LIE_LAP_THREADS"


def thread_cap() -> int:
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    seq: Sequence[T] = list(items)
    cap = thread_cap()
    if cap <= 1 or len(seq) <= 1:
        return [fn(x) for x in seq]
    with ThreadPoolExecutor(max_workers=min(cap, len(seq))) as pool:
        return list(pool.map(fn, seq))
