#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: log.py
# @Created:   2026-09-02 16:21:52
# @Modified:  2026-10-17 10:02:41

import logging
import sys
from datetime import datetime
from typing import Dict, List, Optional, Tuple

import click

from .constants import LOGGER_NAME, TIME_FORMAT_WITHOUT_DATE

# levelname -> (tag, click color)
LEVELS: Dict[str, Tuple[str, str]] = {
    "DEBUG": ("DEB", "magenta"),
    "INFO": ("INF", "green"),
    "WARNING": ("WAR", "yellow"),
    "ERROR": ("ERR", "bright_red"),
    "CRITICAL": ("FAT", "red"),
}


class SheafLogger(logging.Logger):
    pass


class Formatter(logging.Formatter):
    """`[TAG] time name:line - message`, the line number left out for INFO."""

    def __init__(
        self,
        datefmt: str = TIME_FORMAT_WITHOUT_DATE,
        print_position: bool = True,
        colored: bool = False,
    ):
        super().__init__(datefmt=datefmt)
        self.print_position = print_position
        self.colored = colored

    def _paint(self, text: str, **styles) -> str:
        return click.style(text, **styles) if self.colored else text

    def format(self, record: logging.LogRecord) -> str:
        tag, color = LEVELS.get(record.levelname, (record.levelname[:3], "white"))
        stamp = datetime.fromtimestamp(record.created).strftime(self.datefmt or "")
        if self.datefmt == TIME_FORMAT_WITHOUT_DATE:
            stamp = stamp[:-3]  # milliseconds

        parts = [
            "[" + self._paint(tag, fg=color) + "]",
            self._paint(stamp, fg="bright_black"),
        ]
        where = "" if record.name == "root" else self._paint(record.name, fg="cyan")
        if self.print_position and record.levelname != "INFO":
            where += self._paint(f":{record.lineno}", fg="bright_yellow", bold=True)
        if where:
            parts.append(where)

        message = " ".join(parts) + " - " + record.getMessage()
        if record.exc_info:
            message += "\n" + self.formatException(record.exc_info)
        return message


def log_level(verbosity: int) -> int:
    """Map the count of `-v` flags to a log level.

    Returns:
        int: WARNING for 0, INFO for 1, DEBUG for 2 or more
    """
    if verbosity >= 2:
        return logging.DEBUG

    if verbosity == 1:
        return logging.INFO

    return logging.WARNING


def stream_handler(colored: Optional[bool] = None) -> logging.Handler:
    if colored is None:
        colored = sys.stderr.isatty()

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(Formatter(colored=colored))

    return handler


def get_logger() -> logging.Logger:
    """Get the root logger of the package.

    The logger is not registered with `logging.getLogger`, so configuring the
    host application's logging never touches it. Records go to stderr;
    stdout is reserved for results.
    """
    logger = SheafLogger(LOGGER_NAME)
    logger.addHandler(stream_handler())
    logger.setLevel(logging.WARNING)

    return logger


__logger = get_logger()
__children: List[logging.Logger] = []


def child_logger(name: str) -> logging.Logger:
    """Get a new child logger with `name`.
    Args:
        name (str): the name of child logger, usually `__name__`
    Returns:
        Logger: the instance of `logging.Logger`
    """
    log = __logger.getChild(name.replace("sheaf_homology.", ""))
    log.setLevel(__logger.level)
    log.handlers = __logger.handlers
    log.propagate = False
    __children.append(log)

    return log


def set_log_level(verbosity: int, colored: Optional[bool] = None) -> None:
    """Set the level of the root logger and of every child created so far."""
    level = log_level(verbosity)

    __logger.setLevel(level)
    if colored is not None:
        __logger.handlers[:] = [stream_handler(colored)]

    for log in __children:
        log.setLevel(level)
        log.handlers = __logger.handlers
