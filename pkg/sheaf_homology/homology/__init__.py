#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: __init__.py
# @Created:   2026-09-12 16:20:03
# @Modified:  2026-10-16 18:30:44

from .bar import (
    BarComplex,
    bar_complex,
    bar_inclusion,
    bar_map,
    bar_pushforward,
    bar_total,
    cobar_complex,
    cobar_map,
    cobar_pullback,
    cobar_total,
)
from .cap import CapPairing, cap_chain, cap_naturality_check, cap_product, cap_sign
from .checks import (
    duality_sequence_check,
    excision_check,
    homotopy_check,
    is_cohomologically_trivial,
    is_l_acyclic,
    kunneth,
    kunneth_homology,
    local_homology_sequence_check,
    local_mv_check,
    long_exact_sequence_check,
    mv_closed_check,
    mv_open_check,
    universal_coefficients,
    verify,
)
from .derived import (
    bar_homology,
    bar_homology_map,
    cohomology,
    cosections,
    derived_dual,
    derived_tensor_homology,
    homology,
    homology_with_coefficients,
    local_homology,
    pushforward,
    stalk_cohomology,
)
from .resolution import Resolution, standard_resolution

__all__ = [
    "BarComplex",
    "CapPairing",
    "Resolution",
    "bar_complex",
    "bar_homology",
    "bar_homology_map",
    "bar_inclusion",
    "bar_map",
    "bar_pushforward",
    "bar_total",
    "cap_chain",
    "cap_naturality_check",
    "cap_product",
    "cap_sign",
    "cobar_complex",
    "cobar_map",
    "cobar_pullback",
    "cobar_total",
    "cohomology",
    "cosections",
    "derived_dual",
    "derived_tensor_homology",
    "duality_sequence_check",
    "excision_check",
    "homology",
    "homology_with_coefficients",
    "homotopy_check",
    "is_cohomologically_trivial",
    "is_l_acyclic",
    "kunneth",
    "kunneth_homology",
    "local_homology",
    "local_homology_sequence_check",
    "local_mv_check",
    "long_exact_sequence_check",
    "mv_closed_check",
    "mv_open_check",
    "pushforward",
    "stalk_cohomology",
    "standard_resolution",
    "universal_coefficients",
    "verify",
]
