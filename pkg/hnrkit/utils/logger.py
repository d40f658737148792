# -*- coding:utf-8 -*-

"""
Log printer.

Console output goes to stderr: stdout belongs to tables, verdicts and reports, which must
stay byte-stable.

Date:   2026/10/19
"""

import os
import sys
import shutil
import logging
import traceback
from logging.handlers import TimedRotatingFileHandler

from hnrkit.utils import tools

LOGGER_NAME = "hnrkit"

initialized = False
_logger = logging.getLogger(LOGGER_NAME)


def initLogger(level="INFO", path=None, name=None, clear=False, backup_count=0, console=True):
    """Initialize logger.

    Args:
        level: Log level, `DEBUG` / `INFO` / `WARNING` / `ERROR`, default is `INFO`.
        path: Log path, default is `/var/log/hnrkit`.
        name: Log file name, default is `hnrkit.log`.
        clear: If clear all history log file when initialize, default is `False`.
        backup_count: How many log file to be saved. We will save log file per day at middle nigh,
            default is `0` to save file permanently.
        console: If print log to stderr, otherwise print to log file.
    """
    global initialized
    if initialized:
        return
    path = path or "/var/log/hnrkit"
    name = name or "hnrkit.log"
    _logger.setLevel(level.upper() if isinstance(level, str) else level)
    if console:
        handler = logging.StreamHandler(sys.stderr)
    else:
        if clear and os.path.isdir(path):
            shutil.rmtree(path)
        if not os.path.isdir(path):
            os.makedirs(path)
        logfile = os.path.join(path, name)
        handler = TimedRotatingFileHandler(logfile, "midnight", backupCount=backup_count)
    fmt_str = "%(levelname)1.1s [%(asctime)s] %(message)s"
    fmt = logging.Formatter(fmt=fmt_str, datefmt=None)
    handler.setFormatter(fmt)
    _logger.addHandler(handler)
    _logger.propagate = False
    initialized = True


def info(*args, **kwargs):
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    _logger.info(_log(msg_header, *args, **kwargs))


def warn(*args, **kwargs):
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    _logger.warning(_log(msg_header, *args, **kwargs))


def debug(*args, **kwargs):
    if not _logger.isEnabledFor(logging.DEBUG):
        return
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    _logger.debug(_log(msg_header, *args, **kwargs))


def error(*args, **kwargs):
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    _logger.error(_log(msg_header, *args, **kwargs))


def exception(*args, **kwargs):
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    _logger.error(_log(msg_header, *args, **kwargs))
    _logger.error(traceback.format_exc())


def _render(value):
    if isinstance(value, str):
        return value
    if isinstance(value, float):
        return tools.float_to_str(value)
    if isinstance(value, (list, tuple)) and all(isinstance(v, float) for v in value):
        return "(" + ", ".join(tools.float_to_str(v) for v in value) + ")"
    try:
        return "%r" % (value, )
    except Exception:
        return str(value)


def _log(msg_header, *args, **kwargs):
    _log_msg = msg_header + " ".join(_render(l) for l in args)
    if len(kwargs) > 0:
        _log_msg += " " + " ".join("{}={}".format(k, _render(v)) for k, v in sorted(kwargs.items()))
    return _log_msg


def _log_msg_header(*args, **kwargs):
    """Fetch log message header.

    NOTE:
        logger.xxx(... , caller=self) for instance method.
        logger.xxx(... , caller=cls) for class method.
    """
    cls_name = ""
    func_name = sys._getframe().f_back.f_back.f_code.co_name
    _caller = kwargs.pop("caller", None)
    if _caller is not None:
        if not hasattr(_caller, "__name__"):
            _caller = _caller.__class__
        cls_name = _caller.__name__ + "."
    msg_header = "[{cls_name}{func_name}] ".format(cls_name=cls_name, func_name=func_name)
    return msg_header, kwargs
