#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: __init__.py
# @Created:   2026-09-02 10:48:17
# @Modified:  2026-10-17 00:20:05

"""Homology, cohomology and duality of sheaves on finite topological spaces."""

__version__ = "0.4.0"

from .duality import (
    DualizingComplex,
    ManifoldReport,
    dualizing_complex,
    global_pv_consequence,
    homological_manifold_check,
    pv_check,
    restriction_comparison,
)
from .errors import (
    ComplexError,
    InputError,
    PosetError,
    ShapeError,
    SheafError,
    SheafHomologyError,
)
from .homology import (
    bar_homology,
    cap_product,
    cohomology,
    homology,
    local_homology,
    standard_resolution,
)
from .poset import FinitePoset, MonotoneMap
from .report import Report
from .schema import parse, read_sheaf, read_space
from .sheaf import Cosheaf, Sheaf, SheafComplex, SheafMorphism, constant_sheaf
from .zlinalg import FgAbGroup, GroupMap, IntMatrix

__all__ = [
    "ComplexError",
    "Cosheaf",
    "DualizingComplex",
    "FgAbGroup",
    "FinitePoset",
    "GroupMap",
    "InputError",
    "IntMatrix",
    "ManifoldReport",
    "MonotoneMap",
    "PosetError",
    "Report",
    "ShapeError",
    "Sheaf",
    "SheafComplex",
    "SheafError",
    "SheafHomologyError",
    "SheafMorphism",
    "bar_homology",
    "cap_product",
    "cohomology",
    "constant_sheaf",
    "dualizing_complex",
    "global_pv_consequence",
    "homological_manifold_check",
    "homology",
    "local_homology",
    "parse",
    "pv_check",
    "read_sheaf",
    "read_space",
    "restriction_comparison",
    "standard_resolution",
]
