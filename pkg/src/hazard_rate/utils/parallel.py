"""Bounded worker pool for per-country batch work."""

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, TypeVar

from hazard_rate.errors import HazardRateError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class TaskResult:
    """Result of one task: either a value or the error that stopped it."""

    item: Any
    success: bool
    result: Any | None
    error: str | None
    error_code: str | None = None


class ParallelExecutor:
    """
    Execute tasks on a bounded thread pool.

    A failed item never crashes the batch; results come back in input order.
    """

    def __init__(self, max_workers: int = 4):
        """
        Initialize the executor.

        Args:
            max_workers: Maximum number of concurrent workers (1 runs sequentially)
        """
        self.max_workers = max_workers

    def execute(
        self,
        func: Callable[[T], R],
        items: list[T],
        on_progress: Callable[[int, int, T, TaskResult], None] | None = None,
    ) -> list[TaskResult]:
        """
        Execute a function on each item.

        Args:
            func: Function to execute on each item
            items: List of items to process
            on_progress: Optional callback(completed, total, item, result)

        Returns:
            List of TaskResult objects in the same order as input items
        """
        if not items:
            return []

        total = len(items)

        if self.max_workers <= 1:
            ordered: list[TaskResult] = []
            for i, item in enumerate(items, start=1):
                task_result = self._execute_single(func, item)
                ordered.append(task_result)
                if on_progress:
                    on_progress(i, total, item, task_result)
            return ordered

        # Track results by index to preserve order
        results: dict[int, TaskResult] = {}
        completed_count = 0

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_index = {
                executor.submit(self._execute_single, func, item): (i, item)
                for i, item in enumerate(items)
            }

            for future in as_completed(future_to_index):
                index, item = future_to_index[future]
                task_result = future.result()
                results[index] = task_result
                completed_count += 1
                if on_progress:
                    on_progress(completed_count, total, item, task_result)

        return [results[i] for i in range(total)]

    def _execute_single(self, func: Callable[[T], R], item: T) -> TaskResult:
        """Run func on one item, capturing any exception as a failed TaskResult."""
        try:
            return TaskResult(item=item, success=True, result=func(item), error=None)
        except HazardRateError as e:
            logger.debug(f"Error processing {item}: {e}")
            return TaskResult(item=item, success=False, result=None, error=str(e), error_code=e.code.value)
        except Exception as e:
            logger.debug(f"Error processing {item}: {e}")
            return TaskResult(item=item, success=False, result=None, error=str(e), error_code="ERROR")
