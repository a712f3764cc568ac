#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: constants.py
# @Created:   2026-09-02 10:51:04
# @Modified:  2026-10-11 20:58:23

PACKAGE_NAME = "sheaf-homology"

CONFIGURATION_FILENAME = "pyproject.toml"
USER_CONFIGURATION_FILENAME = "config.toml"
CONFIGURATION_SECTION = "sheaf_homology"
CONFIGURATION_CONTENTS = """[tool.sheaf_homology]
max-deg = 2
threads = 1
json = false
"""

DEFAULT_MAX_DEG = 2
DEFAULT_THREADS = 1

# shf enumerates every connected open of U_x; warn above this many elements
SHF_WARN_ELEMENTS = 15

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

CORPUS_PACKAGE = "sheaf_homology.corpus"

LOGGER_NAME = "sheaf-homology"

TIME_FORMAT_WITHOUT_DATE = "%H:%M:%S.%f"
