"""Thread-capped map used by the batch verification loops.

All core operations are pure, so per-item work is safe to run
concurrently; LIOUVILLE_LAB_THREADS caps the pool (1 disables it) and
results always come back in input order, keeping reports deterministic.
"""

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count():
    raw = os.environ.get("LIOUVILLE_LAB_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n >= 1:
        return n
    return min(os.cpu_count() or 1, 8)


def parallel_map(fn, items):
    items = list(items)
    workers = thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
