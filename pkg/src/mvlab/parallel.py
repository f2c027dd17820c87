"""Optional process-level parallelism, capped by MVLAB_THREADS (default 1)."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("MVLAB_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn, items, chunksize: int = 16) -> list:
    """Order-preserving map; runs in worker processes when the cap is above 1."""
    items = list(items)
    n = thread_cap()
    if n <= 1 or len(items) < 2 * chunksize:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))
