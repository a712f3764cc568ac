#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: bar.py
# @Created:   2026-09-12 09:41:17
# @Modified:  2026-10-16 14:02:36

"""Normalized bar and cobar complexes over strict chains.

The bar complex has C_n = ⊕_{x_0 < … < x_n} F(x_0) with ∂ = Σ(−1)^i d_i,
where d_0 applies ρ_{x_0→x_1} and d_i (i ≥ 1) drops x_i. Its homology is the
left derived colimit of the stalk diagram.

The cobar complex has C^n = ⊕_{x_0 < … < x_n} F(x_n), stored in chain degree
−n, with (δφ)(σ) = Σ_{i≤n} (−1)^i φ(d_iσ) + (−1)^{n+1} ρ_{x_n→x_{n+1}} φ(d_{n+1}σ).
Its cohomology is ℝΓ(X, F).
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from ..log import child_logger
from ..poset import Chain, Element, FinitePoset, MonotoneMap
from ..sheaf import Sheaf, SheafComplex, SheafMorphism, inverse_image
from ..zlinalg import ChainComplex, ChainMap, FgAbGroup, IntMatrix, total_complex

logger = child_logger(__name__)


@dataclass(frozen=True, eq=False)
class BarComplex:
    """A (co)bar complex with the block layout of every degree.

    `offsets[n][σ]` is the first coordinate of the block of chain σ in degree
    n; for the cobar complex n is the cochain degree (chain degree −n).
    """

    sheaf: Sheaf
    chains: Mapping[int, List[Chain]]
    offsets: Mapping[int, Dict[Chain, int]]
    complex: ChainComplex
    cochain: bool = False

    def _degree(self, n: int) -> int:
        return -n if self.cochain else n

    def block_size(self, chain: Chain) -> int:
        x = chain[-1] if self.cochain else chain[0]
        return self.sheaf.stalk(x).ngens

    def block(self, n: int, vector: Sequence[int], chain: Chain) -> List[int]:
        start = self.offsets[n][chain]
        return list(vector[start : start + self.block_size(chain)])

    def vector(self, n: int, blocks: Mapping[Chain, Sequence[int]]) -> List[int]:
        """Assemble a vector of degree n from per-chain blocks."""
        out = [0] * self.complex.group(self._degree(n)).ngens
        for chain, values in blocks.items():
            start = self.offsets[n][chain]
            for i, v in enumerate(values):
                out[start + i] += v
        return out

    def homology(self, n: int) -> FgAbGroup:
        return self.complex.homology(self._degree(n))


def _layout(
    f: Sheaf, chains: Mapping[int, List[Chain]], cochain: bool
) -> Dict[int, Dict[Chain, int]]:
    offsets = {}
    for n, cs in chains.items():
        k, table = 0, {}
        for c in cs:
            table[c] = k
            k += f.stalk(c[-1] if cochain else c[0]).ngens
        offsets[n] = table
    return offsets


def _groups(
    f: Sheaf, chains: Mapping[int, List[Chain]], cochain: bool
) -> Dict[int, FgAbGroup]:
    return {
        (-n if cochain else n): FgAbGroup.direct_sum(
            [f.stalk(c[-1] if cochain else c[0]) for c in cs]
        )
        for n, cs in chains.items()
    }


def _place(data: List[List[int]], r0: int, c0: int, block: IntMatrix, sign: int) -> None:
    for i, row in enumerate(block.data):
        for j, v in enumerate(row):
            if v:
                data[r0 + i][c0 + j] += sign * v


def bar_complex(f: Sheaf, within: Optional[Iterable[Element]] = None) -> BarComplex:
    """The bar complex of F restricted to the chains inside `within`."""
    p = f.base
    s = frozenset(p.elements if within is None else within)
    chains = p.all_chains(s)
    offsets = _layout(f, chains, cochain=False)
    groups = _groups(f, chains, cochain=False)
    boundaries = {}
    for n in chains:
        if n == 0:
            continue
        rows, cols = groups[n - 1].ngens, groups[n].ngens
        data = [[0] * cols for _ in range(rows)]
        for chain in chains[n]:
            c0 = offsets[n][chain]
            for i in range(n + 1):
                face = chain[:i] + chain[i + 1 :]
                sign = -1 if i % 2 else 1
                if i == 0:
                    block = f.restriction(chain[0], chain[1]).matrix
                else:
                    block = IntMatrix.identity(f.stalk(chain[0]).ngens)
                _place(data, offsets[n - 1][face], c0, block, sign)
        boundaries[n] = IntMatrix.from_rows(data, cols)
    logger.debug(
        "bar complex: %s generators by degree",
        {n: g.ngens for n, g in groups.items()},
    )
    return BarComplex(f, chains, offsets, ChainComplex(groups, boundaries))


def cobar_complex(f: Sheaf, within: Optional[Iterable[Element]] = None) -> BarComplex:
    p = f.base
    s = frozenset(p.elements if within is None else within)
    chains = p.all_chains(s)
    offsets = _layout(f, chains, cochain=True)
    groups = _groups(f, chains, cochain=True)
    boundaries = {}
    for n in chains:
        if n + 1 not in chains:
            continue
        rows, cols = groups[-n - 1].ngens, groups[-n].ngens
        data = [[0] * cols for _ in range(rows)]
        for chain in chains[n + 1]:
            r0 = offsets[n + 1][chain]
            for i in range(n + 2):
                face = chain[:i] + chain[i + 1 :]
                sign = -1 if i % 2 else 1
                if i == n + 1:
                    block = f.restriction(chain[n], chain[n + 1]).matrix
                else:
                    block = IntMatrix.identity(f.stalk(chain[-1]).ngens)
                _place(data, r0, offsets[n][face], block, sign)
        boundaries[-n] = IntMatrix.from_rows(data, cols)
    return BarComplex(f, chains, offsets, ChainComplex(groups, boundaries), cochain=True)


def bar_inclusion(small: BarComplex, big: BarComplex) -> ChainMap:
    """Chains of `small` are chains of `big` over the same stalks."""
    return ChainMap(small.complex, big.complex, _chain_matrices(small, big, lambda c: c))


def _chain_matrices(source: BarComplex, target: BarComplex, image) -> Dict[int, IntMatrix]:
    matrices = {}
    for n, cs in source.chains.items():
        degree = -n if source.cochain else n
        rows = target.complex.group(degree).ngens
        cols = source.complex.group(degree).ngens
        data = [[0] * cols for _ in range(rows)]
        for c in cs:
            d = image(c)
            if d is None or d not in target.offsets.get(n, {}):
                continue
            size = source.block_size(c)
            r0, c0 = target.offsets[n][d], source.offsets[n][c]
            for i in range(size):
                data[r0 + i][c0 + i] = 1
        matrices[degree] = IntMatrix.from_rows(data, cols)
    return matrices


def bar_pushforward(fmap: MonotoneMap, f: Sheaf) -> ChainMap:
    """Bar(X, f⁻¹F) → Bar(Y, F) on chains σ ↦ f(σ), zero on degenerate images."""
    source = bar_complex(inverse_image(fmap, f))
    target = bar_complex(f)

    def image(chain: Chain) -> Optional[Chain]:
        out = tuple(fmap(x) for x in chain)
        return out if len(set(out)) == len(out) else None

    return ChainMap(source.complex, target.complex, _chain_matrices(source, target, image))


def cobar_pullback(fmap: MonotoneMap, f: Sheaf) -> ChainMap:
    """Cobar(Y, F) → Cobar(X, f⁻¹F), (f^*φ)(τ) = φ(f(τ)) or 0 when f(τ) degenerates."""
    source = cobar_complex(f)
    target = cobar_complex(inverse_image(fmap, f))
    matrices = {}
    for n, cs in target.chains.items():
        rows = target.complex.group(-n).ngens
        cols = source.complex.group(-n).ngens
        data = [[0] * cols for _ in range(rows)]
        for tau in cs:
            image = tuple(fmap(x) for x in tau)
            if len(set(image)) != len(image):
                continue
            r0, c0 = target.offsets[n][tau], source.offsets[n][image]
            for i in range(target.block_size(tau)):
                data[r0 + i][c0 + i] = 1
        matrices[-n] = IntMatrix.from_rows(data, cols)
    return ChainMap(source.complex, target.complex, matrices)


def _morphism_map(
    phi: SheafMorphism, source: BarComplex, target: BarComplex
) -> ChainMap:
    matrices = {}
    for n, cs in source.chains.items():
        degree = -n if source.cochain else n
        rows = target.complex.group(degree).ngens
        cols = source.complex.group(degree).ngens
        data = [[0] * cols for _ in range(rows)]
        for c in cs:
            x = c[-1] if source.cochain else c[0]
            _place(data, target.offsets[n][c], source.offsets[n][c], phi.component(x).matrix, 1)
        matrices[degree] = IntMatrix.from_rows(data, cols)
    return ChainMap(source.complex, target.complex, matrices)


def bar_map(
    phi: SheafMorphism,
    source: Optional[BarComplex] = None,
    target: Optional[BarComplex] = None,
) -> ChainMap:
    """The chain map Bar(F) → Bar(G) of a sheaf morphism."""
    return _morphism_map(
        phi, source or bar_complex(phi.source), target or bar_complex(phi.target)
    )


def cobar_map(
    phi: SheafMorphism,
    source: Optional[BarComplex] = None,
    target: Optional[BarComplex] = None,
) -> ChainMap:
    return _morphism_map(
        phi, source or cobar_complex(phi.source), target or cobar_complex(phi.target)
    )


def bar_total(k: SheafComplex) -> ChainComplex:
    """Total complex of Bar(K^p), in total degree n − p."""
    bars = {p: bar_complex(term) for p, term in k.terms.items()}
    horizontal = {
        p: bar_map(d, bars[p], bars[p + 1]) for p, d in k.differentials.items()
    }
    total, _ = total_complex({p: b.complex for p, b in bars.items()}, horizontal)
    return total


def cobar_total(k: SheafComplex) -> ChainComplex:
    """Total complex of Cobar(K^p); H^m is its homology in degree −m."""
    cobars = {p: cobar_complex(term) for p, term in k.terms.items()}
    horizontal = {
        p: cobar_map(d, cobars[p], cobars[p + 1]) for p, d in k.differentials.items()
    }
    total, _ = total_complex({p: b.complex for p, b in cobars.items()}, horizontal)
    return total


def cofaces(p: FinitePoset, chain: Chain, within: frozenset) -> List[tuple]:
    """Chains one longer than `chain` inside `within`, with the sign (−1)^i of
    the position i of the inserted element."""
    out = []
    for z in p.sort(within):
        if z in chain:
            continue
        i = 0
        while i < len(chain) and p.lt(chain[i], z):
            i += 1
        if i < len(chain) and not p.lt(z, chain[i]):
            continue
        out.append((chain[:i] + (z,) + chain[i:], -1 if i % 2 else 1))
    return out
