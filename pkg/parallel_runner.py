"""
Parallel execution for evchar sweeps.
Runs independent exact computations concurrently and returns results in
submission order, so reductions are identical for every worker count.
"""

import multiprocessing as mp
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")

MAX_WORKERS = 32


def effective_workers(requested: int, items: int) -> int:
    """Cap the requested worker count by the workload and the machine."""
    return max(1, min(requested, items, mp.cpu_count() * 2, MAX_WORKERS))


def map_ordered(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Apply func to every item, possibly in parallel.

    Args:
        func: Pure function to apply
        items: Work items
        workers: Requested number of worker threads

    Returns:
        Results in the order of items
    """
    if not items:
        return []

    num_workers = effective_workers(workers, len(items))
    if num_workers <= 1:
        # Run sequentially for small workloads
        return [func(item) for item in items]

    logger.debug(f"Running {getattr(func, '__name__', 'task')} on {len(items)} items with {num_workers} threads")

    # Exceptions propagate from result(); a partial sum is never returned.
    with ThreadPoolExecutor(max_workers=num_workers) as executor:
        futures = [executor.submit(func, item) for item in items]
        return [future.result() for future in futures]


def ordered_sum(func: Callable[[T], R], items: Sequence[T], workers: int = 1, start=0):
    """Exact sum of func over items, reduced in item order."""
    total = start
    for value in map_ordered(func, items, workers):
        total += value
    return total
