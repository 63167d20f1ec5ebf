"""Module for fanning independent search tasks out to worker processes."""

from concurrent.futures import ProcessPoolExecutor
from typing import (
    Callable,
    List,
    Sequence,
    TypeVar,
)
import logging

__all__ = ["run_tasks"]

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_tasks(function: Callable[[T], R],
              tasks: Sequence[T],
              jobs: int = 1) -> List[R]:
    """Apply `function` to every task and return the results in task order.

    With `jobs <= 1` (or a single task) everything runs in the calling
    process. Otherwise tasks go to a process pool, so `function` must be a
    module-level callable and tasks/results must be picklable.
    """
    if jobs <= 1 or len(tasks) <= 1:
        return [function(task) for task in tasks]

    logger.debug("dispatching %d tasks to %d workers", len(tasks), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, tasks))
