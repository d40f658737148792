# -*- coding:utf-8 -*-

"""
Tasks module.
1. Fan a function out over a parameter grid:
    a) every grid point runs in the configured executor (`WORKERS.executor`);
    b) results come back in grid order;
    c) every finished point ticks the progress heartbeat.
2. `GridTask.run` drives its own event loop for synchronous callers.

Date:   2026/10/19
"""

import asyncio
import functools
from concurrent.futures import ThreadPoolExecutor, ProcessPoolExecutor

from hnrkit.utils import logger
from hnrkit.configure import config
from hnrkit.heartbeat import heartbeat

__all__ = ("GridTask", )


class GridTask(object):
    """Grid fan-out task.
    """

    @classmethod
    def _executor(cls):
        kind = config.workers.get("executor", "thread")
        max_workers = config.workers.get("max_workers")
        if kind == "process":
            return ProcessPoolExecutor(max_workers=max_workers)
        if kind == "thread":
            return ThreadPoolExecutor(max_workers=max_workers)
        return None

    @classmethod
    async def map(cls, func, items, name=None, **kwargs):
        """Evaluate `func(item, **kwargs)` for every item.

        Args:
            func: Pure function of one grid point. Must be picklable for the process executor.
            items: Grid points.
            name: Job name for progress lines, default is the function name.

        Returns:
            results: List of results in the order of `items`.
        """
        items = list(items)
        name = name or getattr(func, "__name__", "grid")
        task_id = heartbeat.register(name, len(items))
        call = functools.partial(func, **kwargs) if kwargs else func
        executor = cls._executor()
        loop = asyncio.get_running_loop()

        async def one(item):
            if executor is None:
                result = call(item)
            else:
                result = await loop.run_in_executor(executor, call, item)
            heartbeat.ticker(task_id)
            return result

        try:
            results = await asyncio.gather(*(one(item) for item in items))
            done, total = heartbeat.progress(task_id)
        finally:
            heartbeat.unregister(task_id)
            if executor is not None:
                executor.shutdown(wait=True)
        logger.debug("job:", name, "points:", "{}/{}".format(done, total), caller=cls)
        return list(results)

    @classmethod
    def run(cls, func, items, name=None, **kwargs):
        """Synchronous `map`; runs in a fresh event loop, or inline when called from a running loop.
        """
        try:
            asyncio.get_running_loop()
        except RuntimeError:
            return asyncio.run(cls.map(func, items, name=name, **kwargs))
        call = functools.partial(func, **kwargs) if kwargs else func
        return [call(item) for item in items]
