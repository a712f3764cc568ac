#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: concurrency.py
# @Created:   2026-09-18 15:02:47
# @Modified:  2026-10-14 08:36:20

import os

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .log import child_logger

T = TypeVar("T")
R = TypeVar("R")

logger = child_logger(__name__)


def parallel_map(
    fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = 1
) -> List[R]:
    """Apply `fn` to every item, in a thread pool when `workers` > 1.

    Results come back in input order whatever the scheduling.
    """
    items = list(items)
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug("running %d tasks on %d threads", len(items), workers)
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(fn, items))
