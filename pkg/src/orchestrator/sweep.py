"""Shared-nothing parameter sweeps over a process pool."""

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from loguru import logger

from src.exceptions import ConfigurationError

T = TypeVar("T")
R = TypeVar("R")


class SweepRunner:
    """Evaluate a picklable function over sweep points; results keep sweep order."""

    def __init__(self, jobs: int = 1):
        """
        Initialize runner.

        Args:
            jobs: Worker processes; 1 evaluates inline
        """
        if jobs < 1:
            raise ConfigurationError(f"jobs must be at least 1, got {jobs}")
        self.jobs = jobs

    async def map(self, func: Callable[[T], R], items: Sequence[T]) -> List[R]:
        logger.info(f"Sweep started: {len(items)} points, jobs={self.jobs}")
        if self.jobs == 1 or len(items) <= 1:
            results = [func(item) for item in items]
        else:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                futures = [loop.run_in_executor(pool, func, item) for item in items]
                results = list(await asyncio.gather(*futures))
        logger.info(f"Sweep finished: {len(results)} points")
        return results

    def run(self, func: Callable[[T], R], items: Sequence[T]) -> List[R]:
        return asyncio.run(self.map(func, items))
