#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: errors.py
# @Created:   2026-09-03 09:12:40
# @Modified:  2026-10-12 18:02:11

from typing import Optional


class SheafHomologyError(Exception):
    """Base class of every error raised by this package."""


class ShapeError(SheafHomologyError):
    """Matrix dimensions do not fit together."""


class PosetError(SheafHomologyError):
    """A poset invariant is violated or a subset is not open/closed."""


class SheafError(SheafHomologyError):
    """Stalk or map data does not form a sheaf, cosheaf or morphism."""


class ComplexError(SheafHomologyError):
    """Differentials do not compose to zero, or degrees do not match."""


class InputError(SheafHomologyError):
    """A description file cannot be read or does not match the schema."""

    def __init__(self, message: str, path: Optional[str] = None) -> None:
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
