"""Order-preserving parallel map used by the batch computations."""

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(
    function: Callable[[T], R],
    items: Iterable[T],
    jobs: int = 1,
    desc: str | None = None,
    progress: bool = False,
) -> list[R]:
    """Apply ``function`` to every item, preserving input order.

    Args:
        function: A picklable callable when ``jobs > 1``.
        items: Inputs.
        jobs: Number of worker processes; 1 runs in-process.
        desc: Progress bar label.
        progress: Whether to display a progress bar.

    Returns:
        Results in the order of ``items``; identical for every ``jobs``.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in tqdm(items, desc=desc, disable=not progress)]
    logger.debug("Mapping %d items over %d processes", len(items), jobs)
    chunksize = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(
            tqdm(
                executor.map(function, items, chunksize=chunksize),
                total=len(items),
                desc=desc,
                disable=not progress,
            )
        )
