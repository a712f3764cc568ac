#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: mode.py
# @Created:   2026-09-02 15:29:53
# @Modified:  2026-09-14 20:57:45

from enum import Enum


class OutputMode(Enum):
    TEXT = "text"
    JSON = "json"


class ColorMode(Enum):
    OFF = "off"
    ON = "on"
    AUTO = "auto"
