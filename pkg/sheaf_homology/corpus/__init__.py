#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: __init__.py
# @Created:   2026-09-27 16:02:44
# @Modified:  2026-09-27 16:02:44

"""Bundled spaces and sheaves, addressable by bare file name from the command line."""
