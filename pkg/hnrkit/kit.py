# -*- coding:utf-8 -*-

"""
Application object: settings, logger and the entrance of one command.

Date:   2026/10/19
"""

import asyncio
import inspect

from hnrkit.utils import logger
from hnrkit.configure import config

EXIT_INTERRUPTED = 130


class HnrKit:
    """Toolkit application object.
    """

    def __init__(self) -> None:
        self._initialized = False

    def _initialize(self, config_file):
        """Initialize."""
        self._load_settings(config_file)
        self._init_logger()
        self._initialized = True
        return self

    def start(self, config_file=None, entrance_func=None):
        """Load settings, then run the entrance.

        Args:
            config_file: Config file path, normally it's a json file, optional.
            entrance_func: Plain callable or coroutine function without arguments.

        Returns:
            The entrance's return value (an exit status for the command line), or 130 on
            KeyboardInterrupt.
        """
        self._initialize(config_file)
        if not entrance_func:
            return None
        logger.debug("run entrance:", getattr(entrance_func, "__name__", entrance_func), caller=self)
        try:
            if inspect.iscoroutinefunction(entrance_func):
                return asyncio.run(entrance_func())
            return entrance_func()
        except KeyboardInterrupt:
            logger.warn("KeyboardInterrupt has been caught, stop.", caller=self)
            return EXIT_INTERRUPTED

    def _load_settings(self, config_module) -> None:
        """Load config settings.

        Args:
            config_module: config file path, normally it's a json file.
        """
        config.loads(config_module)

    def _init_logger(self) -> None:
        """Initialize logger."""
        logger.initLogger(**config.log)
