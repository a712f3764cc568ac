#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: derived.py
# @Created:   2026-09-14 10:03:52
# @Modified:  2026-10-16 15:18:40

"""Derived homology and cohomology of sheaves on finite posets."""

from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..log import child_logger
from ..poset import Chain, Element, FinitePoset, MonotoneMap
from ..sheaf import (
    Sheaf,
    SheafComplex,
    SheafMorphism,
    closed_restriction,
    cosections_cocone,
    identity_morphism,
    inverse_image,
    inverse_image_morphism,
    tensor,
    tensor_morphism,
)
from ..zlinalg import (
    ChainComplex,
    FgAbGroup,
    GroupMap,
    IntMatrix,
    column_span_basis,
)
from .bar import (
    bar_complex,
    bar_map,
    bar_pushforward,
    bar_total,
    cobar_complex,
    cobar_total,
    cofaces,
)
from .resolution import Resolution, standard_resolution

logger = child_logger(__name__)

SheafLike = Union[Sheaf, SheafComplex]


def resolution_margin(max_deg: int) -> int:
    return max_deg + 2


def cosections(f: Sheaf) -> FgAbGroup:
    """L(X, F), the colimit of the stalk diagram."""
    return cosections_cocone(f, frozenset(f.elements)).group


def _degrees(c: ChainComplex, max_deg: int, sign: int = 1) -> List[FgAbGroup]:
    return [c.homology(sign * i) for i in range(max_deg + 1)]


def homology(f: SheafLike, max_deg: int, minimal: bool = True) -> List[FgAbGroup]:
    """H_0 … H_max_deg of 𝕃(X, F).

    A sheaf goes through L(X, P_•) of its standard resolution. A complex of
    sheaves goes through the total bar complex, whose columns are functorial
    in the terms.
    """
    if isinstance(f, SheafComplex):
        return _degrees(bar_total(f), max_deg)
    res = standard_resolution(f, resolution_margin(max_deg), minimal=minimal)
    return _degrees(res.cosections_complex(), max_deg)


def bar_homology(f: SheafLike, max_deg: int) -> List[FgAbGroup]:
    if isinstance(f, SheafComplex):
        return _degrees(bar_total(f), max_deg)
    return _degrees(bar_complex(f).complex, max_deg)


def cohomology(f: SheafLike, max_deg: int) -> List[FgAbGroup]:
    """H^0 … H^max_deg of ℝΓ(X, F)."""
    if isinstance(f, SheafComplex):
        if f.global_sections is not None:
            return _degrees(f.global_sections, max_deg, sign=-1)
        return _degrees(cobar_total(f), max_deg, sign=-1)
    return _degrees(cobar_complex(f).complex, max_deg, sign=-1)


def pushforward(fmap: MonotoneMap, f: Sheaf, max_deg: int) -> List[GroupMap]:
    """f_*: H_i(X, f⁻¹F) → H_i(Y, F) for i ≤ max_deg."""
    chain_map = bar_pushforward(fmap, f)
    return [chain_map.on_homology(i) for i in range(max_deg + 1)]


def local_homology(
    p: FinitePoset, y: Iterable[Element], f: Sheaf, max_deg: int
) -> List[FgAbGroup]:
    """H_i^Y(X, F) = H_i(X, F_Y)."""
    return homology(closed_restriction(p, y, f), max_deg)


# derived tensor products


def tensor_resolution_complex(res: Resolution, g: Sheaf) -> SheafComplex:
    """P_• ⊗ G in cohomological degrees −k; a model of F ⊗^L G since the
    terms of P have free stalks."""
    terms = {-k: tensor(res.term(k), g) for k in res.terms}
    ident = identity_morphism(g)
    diffs = {
        -k: tensor_morphism(d, ident, terms[-k], terms[-k + 1])
        for k, d in res.differentials.items()
    }
    return SheafComplex(g.base, terms, diffs)


def derived_tensor_homology(f: Sheaf, g: Sheaf, max_deg: int) -> List[FgAbGroup]:
    """H_i(X, F ⊗^L G)."""
    res = standard_resolution(f, resolution_margin(max_deg))
    return _degrees(bar_total(tensor_resolution_complex(res, g)), max_deg)


def pulled_back_tensor_complex(
    fmap: MonotoneMap, res: Resolution, gmap: MonotoneMap, g: Sheaf
) -> SheafComplex:
    """f⁻¹P_• ⊗ g⁻¹G on the common source of the two maps."""
    pulled = inverse_image(gmap, g)
    terms = {-k: tensor(inverse_image(fmap, res.term(k)), pulled) for k in res.terms}
    ident = identity_morphism(pulled)
    diffs = {
        -k: tensor_morphism(
            inverse_image_morphism(fmap, d), ident, terms[-k], terms[-k + 1]
        )
        for k, d in res.differentials.items()
    }
    return SheafComplex(pulled.base, terms, diffs)


def coefficient_resolution(g: FgAbGroup) -> ChainComplex:
    """0 → ℤ^{k'} → ℤ^{n} → G → 0 from the relations of G."""
    relations = column_span_basis(g.relations)
    return ChainComplex(
        {0: FgAbGroup.free(g.ngens), 1: FgAbGroup.free(relations.cols)},
        {1: relations},
    )


def homology_with_coefficients(f: Sheaf, g: FgAbGroup, max_deg: int) -> List[FgAbGroup]:
    """H_i(X, F ⊗^L G) as H_i(L(X, P_•) ⊗ (ℤ^{k'} → ℤ^n))."""
    res = standard_resolution(f, resolution_margin(max_deg))
    product = res.cosections_complex().tensor(coefficient_resolution(g))
    return _degrees(product, max_deg)


# derived dual


def _dual_generators(
    p: FinitePoset,
    res: Resolution,
    chains: Dict[Element, Dict[int, List[Chain]]],
    degree: int,
    below: Optional[Element],
) -> List[Tuple[int, int, Chain]]:
    """Generators (k, j, σ) of the dual in cohomological degree k + n = degree.

    σ runs over n-chains of U_{x_j}; at the stalk of y only the chains inside
    U_y survive, i.e. those whose first element lies above y.
    """
    out = []
    for k in sorted(res.anchors):
        n = degree - k
        if n < 0:
            continue
        for j, x in enumerate(res.anchors[k]):
            for sigma in chains[x].get(n, []):
                if below is None or p.le(below, sigma[0]):
                    out.append((k, j, sigma))
    return out


def _dual_differential(
    p: FinitePoset,
    res: Resolution,
    source: List[Tuple[int, int, Chain]],
    target: List[Tuple[int, int, Chain]],
    within: frozenset,
) -> IntMatrix:
    """D = d_res + (−1)^k δ on Hom(P_k, cobar(U_x)) blocks."""
    index = {g: i for i, g in enumerate(target)}
    data = [[0] * len(source) for _ in target]
    for col, (k, j, sigma) in enumerate(source):
        d_next = res.matrices.get(k + 1)
        if d_next is not None:
            # ℤ_{U_{x_j'}} → ℤ_{U_{x_j}} with coefficient c_{j j'} dualizes to a projection
            for jj in range(d_next.cols):
                c = d_next[j, jj]
                if c:
                    row = index.get((k + 1, jj, sigma))
                    if row is not None:
                        data[row][col] += c
        sign = -1 if k % 2 else 1
        upper = p.minimal_open(res.anchors[k][j]) & within
        for tau, s in cofaces(p, sigma, upper):
            row = index.get((k, j, tau))
            if row is not None:
                data[row][col] += sign * s
    return IntMatrix.from_rows(data, len(source))


def derived_dual(f: Sheaf, max_deg: int) -> SheafComplex:
    """F^∨ = ℝHom(F, ℤ) as Hom(P_•, cobar) over the standard resolution.

    HHom(ℤ_{U_x}, ℤ) = j_{x*}ℤ is replaced by the complex whose n-th term has
    stalk ℤ^{n-chains of U_x ∩ U_y} at y: a sum of skyscrapers, so Γ-acyclic.
    The result carries its global sections complex.
    """
    p = f.base
    res = standard_resolution(f, resolution_margin(max_deg))
    anchors = {x for a in res.anchors.values() for x in a}
    chains = {x: p.all_chains(p.minimal_open(x)) for x in anchors}
    top = max(res.anchors, default=-1) + max(p.height, 0)
    everything = frozenset(p.elements)

    stalk_gens = {
        (m, y): _dual_generators(p, res, chains, m, y)
        for m in range(top + 1)
        for y in p.elements
    }
    terms: Dict[int, Sheaf] = {}
    for m in range(top + 1):
        maps = {}
        for x, y in p.covers:
            src, dst = stalk_gens[(m, x)], stalk_gens[(m, y)]
            pos = {g: i for i, g in enumerate(src)}
            rows = [[0] * len(src) for _ in dst]
            for i, g in enumerate(dst):
                rows[i][pos[g]] = 1
            maps[(x, y)] = IntMatrix.from_rows(rows, len(src))
        terms[m] = Sheaf(
            p, {y: FgAbGroup.free(len(stalk_gens[(m, y)])) for y in p.elements}, maps
        )
    diffs = {}
    for m in range(top):
        components = {
            y: _dual_differential(
                p, res, stalk_gens[(m, y)], stalk_gens[(m + 1, y)], p.minimal_open(y)
            )
            for y in p.elements
        }
        diffs[m] = SheafMorphism(terms[m], terms[m + 1], components)

    global_gens = {m: _dual_generators(p, res, chains, m, None) for m in range(top + 1)}
    global_sections = ChainComplex(
        {-m: FgAbGroup.free(len(global_gens[m])) for m in global_gens},
        {
            -m: _dual_differential(p, res, global_gens[m], global_gens[m + 1], everything)
            for m in range(top)
        },
    )
    logger.debug(
        "derived dual in degrees 0..%d, global ranks %s",
        top,
        [len(global_gens[m]) for m in range(top + 1)],
    )
    return SheafComplex(p, terms, diffs, global_sections=global_sections)


def stalk_cohomology(k: SheafComplex, x: Element, degrees: Iterable[int]) -> Dict[int, FgAbGroup]:
    """H^m of the stalk complex at x."""
    c = k.stalk_complex(x)
    return {m: c.homology(-m) for m in degrees}


def bar_homology_map(phi: SheafMorphism, max_deg: int) -> List[GroupMap]:
    """H_i(X, F) → H_i(X, G) for a sheaf morphism, through the bar complexes."""
    chain_map = bar_map(phi)
    return [chain_map.on_homology(i) for i in range(max_deg + 1)]
