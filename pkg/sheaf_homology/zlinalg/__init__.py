#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: __init__.py
# @Created:   2026-09-03 11:38:10
# @Modified:  2026-10-16 08:52:40

from .matrix import (
    IntMatrix,
    SmithDecomposition,
    Vector,
    column_span_basis,
    kernel_basis,
    smith_decomposition,
    smith_normal_form,
    solve_integer,
    solve_matrix,
)
from .groups import (
    FgAbGroup,
    GroupMap,
    Invariants,
    ext1,
    hom,
    hom_inclusion,
    is_exact,
    normalize,
    render_invariants,
    tensor,
    tensor_maps,
    tensor_presentation,
    tor1,
)
from .complexes import (
    ChainComplex,
    ChainMap,
    HomologyData,
    complex_homology,
    connecting_map,
    stack_maps,
    total_complex,
)
from .diagrams import Cocone, Cone, Diagram, colimit, limit

__all__ = [
    "ChainComplex",
    "ChainMap",
    "Cocone",
    "Cone",
    "Diagram",
    "FgAbGroup",
    "GroupMap",
    "HomologyData",
    "IntMatrix",
    "Invariants",
    "SmithDecomposition",
    "Vector",
    "colimit",
    "column_span_basis",
    "complex_homology",
    "connecting_map",
    "ext1",
    "hom",
    "hom_inclusion",
    "is_exact",
    "kernel_basis",
    "limit",
    "normalize",
    "render_invariants",
    "smith_decomposition",
    "smith_normal_form",
    "solve_integer",
    "solve_matrix",
    "stack_maps",
    "tensor",
    "tensor_maps",
    "tensor_presentation",
    "tor1",
    "total_complex",
]
