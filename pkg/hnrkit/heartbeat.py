# -*- coding:utf-8 -*-

"""
Progress heartbeat.

Grid jobs register themselves with a total count; every finished grid point ticks the
heartbeat, which prints progress every `HEARTBEAT.interval` completions.

Date:   2026/10/19
"""

import threading

from hnrkit.utils import tools
from hnrkit.utils import logger
from hnrkit.configure import config

__all__ = ("heartbeat", )


class HeartBeat(object):
    """Progress heartbeat.
    """

    def __init__(self):
        self._jobs = {}  # Running grid jobs. `{task_id: {"name": ..., "total": ..., "done": ...}}`
        self._lock = threading.Lock()

    def ticker(self, task_id):
        """Count one finished grid point of `task_id`.
        """
        print_interval = int(config.heartbeat.get("interval", 0))
        with self._lock:
            job = self._jobs.get(task_id)
            if not job:
                return
            job["done"] += 1
            done, total, name = job["done"], job["total"], job["name"]
        if print_interval > 0 and (done % print_interval == 0 or done == total):
            logger.info("job:", name, "progress:", "{}/{}".format(done, total), caller=self)

    def register(self, name, total):
        """Register a grid job.

        Args:
            name: Job name used in progress lines.
            total: Number of grid points.

        Returns:
            task_id: Task id.
        """
        task_id = tools.get_uuid1()
        with self._lock:
            self._jobs[task_id] = {"name": name, "total": total, "done": 0}
        return task_id

    def progress(self, task_id):
        """Finished and total points of a job, `(0, 0)` if unknown."""
        job = self._jobs.get(task_id)
        if not job:
            return 0, 0
        return job["done"], job["total"]

    def unregister(self, task_id):
        """Unregister a job.

        Args:
            task_id: Task id.
        """
        with self._lock:
            if task_id in self._jobs:
                self._jobs.pop(task_id)


heartbeat = HeartBeat()
