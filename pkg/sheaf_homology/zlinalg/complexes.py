#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: complexes.py
# @Created:   2026-09-06 10:14:25
# @Modified:  2026-10-16 08:51:19

"""Bounded chain complexes of presented groups.

Degrees are homological: ∂_n goes from C_n to C_{n−1}. A cochain complex is
stored with its degree negated, so H^n is `homology(-n)`.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import ComplexError, ShapeError
from ..log import child_logger
from .groups import FgAbGroup, GroupMap, tensor_presentation
from .matrix import IntMatrix, Vector

logger = child_logger(__name__)


@dataclass(frozen=True)
class HomologyData:
    """H_n as a group whose generators are the columns of `cycles`."""

    degree: int
    group: FgAbGroup
    cycles: IntMatrix
    # inclusion of the cycle group into C_n, used to classify cycles
    inclusion: GroupMap

    def classify(self, cycle: Sequence[int]) -> Vector:
        """Coordinates of the class of `cycle` on the generators of `group`."""
        coords = self.inclusion.lift_element(cycle)
        if coords is None:
            raise ComplexError(f"vector is not a cycle in degree {self.degree}")
        return coords


@dataclass(frozen=True, eq=False)
class ChainComplex:
    groups: Mapping[int, FgAbGroup] = field(default_factory=dict)
    # n -> matrix of ∂_n : C_n -> C_{n-1}
    boundaries: Mapping[int, IntMatrix] = field(default_factory=dict)
    _homology: Dict[int, HomologyData] = field(
        default_factory=dict, init=False, repr=False
    )

    def __post_init__(self) -> None:
        for n, m in self.boundaries.items():
            if (m.rows, m.cols) != (self.group(n - 1).ngens, self.group(n).ngens):
                raise ShapeError(
                    f"∂_{n} is {m.rows}x{m.cols}, expected "
                    f"{self.group(n - 1).ngens}x{self.group(n).ngens}"
                )

    @property
    def degrees(self) -> List[int]:
        return sorted(n for n, g in self.groups.items() if g.ngens)

    def group(self, n: int) -> FgAbGroup:
        return self.groups.get(n, FgAbGroup.zero())

    def boundary(self, n: int) -> GroupMap:
        src, dst = self.group(n), self.group(n - 1)
        m = self.boundaries.get(n)
        if m is None:
            m = IntMatrix.zeros(dst.ngens, src.ngens)
        return GroupMap(src, dst, m)

    def validate(self) -> None:
        for n in self.degrees:
            d = self.boundary(n)
            if not d.is_well_defined():
                raise ComplexError(f"∂_{n} does not respect relations")
            if not (self.boundary(n - 1) @ d).is_zero():
                raise ComplexError(f"∂_{n - 1} ∘ ∂_{n} is not zero")

    def homology_data(self, n: int) -> HomologyData:
        data = self._homology.get(n)
        if data is None:
            data = self._homology[n] = _homology_data(self, n)
        return data

    def homology(self, n: int) -> FgAbGroup:
        return self.homology_data(n).group

    def cohomology(self, n: int) -> FgAbGroup:
        return self.homology(-n)

    def shift(self, k: int) -> "ChainComplex":
        """C[k]_n = C_{n−k}, with the boundary sign (−1)^k."""
        sign = -1 if k % 2 else 1
        return ChainComplex(
            {n + k: g for n, g in self.groups.items()},
            {n + k: m.scale(sign) for n, m in self.boundaries.items()},
        )

    def direct_sum(self, other: "ChainComplex") -> "ChainComplex":
        degrees = set(self.groups) | set(other.groups)
        groups = {n: FgAbGroup.direct_sum([self.group(n), other.group(n)]) for n in degrees}
        boundaries = {
            n: IntMatrix.block_diagonal(
                [self.boundary(n).matrix, other.boundary(n).matrix]
            )
            for n in degrees
            if n - 1 in degrees
        }
        return ChainComplex(groups, boundaries)

    def tensor(self, other: "ChainComplex") -> "ChainComplex":
        """(C ⊗ D)_n = ⊕_{p+q=n} C_p ⊗ D_q, ∂(c⊗d) = ∂c⊗d + (−1)^p c⊗∂d.

        Only the derived tensor product when the terms are free.
        """
        pairs: Dict[int, List[Tuple[int, int]]] = {}
        for p in sorted(self.groups):
            for q in sorted(other.groups):
                pairs.setdefault(p + q, []).append((p, q))
        groups = {}
        offsets: Dict[Tuple[int, int], int] = {}
        for n, ps in pairs.items():
            blocks, k = [], 0
            for p, q in ps:
                offsets[(p, q)] = k
                g = tensor_presentation(self.group(p), other.group(q))
                blocks.append(g)
                k += g.ngens
            groups[n] = FgAbGroup.direct_sum(blocks)
        boundaries = {}
        for n, ps in pairs.items():
            if n - 1 not in groups:
                continue
            rows, cols = groups[n - 1].ngens, groups[n].ngens
            data = [[0] * cols for _ in range(rows)]
            for p, q in ps:
                c0 = offsets[(p, q)]
                sign = -1 if p % 2 else 1
                pieces = []
                if (p - 1, q) in offsets:
                    pieces.append(
                        (offsets[(p - 1, q)],
                         self.boundary(p).matrix.kron(IntMatrix.identity(other.group(q).ngens)))
                    )
                if (p, q - 1) in offsets:
                    pieces.append(
                        (offsets[(p, q - 1)],
                         IntMatrix.identity(self.group(p).ngens)
                         .kron(other.boundary(q).matrix)
                         .scale(sign))
                    )
                for r0, block in pieces:
                    for i, row in enumerate(block.data):
                        for j, v in enumerate(row):
                            if v:
                                data[r0 + i][c0 + j] += v
            boundaries[n] = IntMatrix.from_rows(data, cols)
        return ChainComplex(groups, boundaries)


def _homology_data(c: ChainComplex, n: int) -> HomologyData:
    d_n = c.boundary(n)
    d_next = c.boundary(n + 1)
    logger.debug(
        "homology in degree %d: C_%d has %d generators", n, n, c.group(n).ngens
    )
    cycles = d_n.kernel()
    into_cycles = cycles.lift(d_next)
    if into_cycles is None:
        raise ComplexError(f"∂_{n} ∘ ∂_{n + 1} is not zero")
    group = into_cycles.cokernel().target
    return HomologyData(n, group, cycles.matrix, cycles)


def complex_homology(c: ChainComplex, n: int) -> FgAbGroup:
    return c.homology(n)


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    # n -> matrix C_n -> D_n
    matrices: Mapping[int, IntMatrix] = field(default_factory=dict)

    def component(self, n: int) -> GroupMap:
        src, dst = self.source.group(n), self.target.group(n)
        m = self.matrices.get(n)
        if m is None:
            m = IntMatrix.zeros(dst.ngens, src.ngens)
        return GroupMap(src, dst, m)

    def validate(self) -> None:
        for n in set(self.source.degrees) | set(self.target.degrees):
            f = self.component(n)
            if not f.is_well_defined():
                raise ComplexError(f"chain map component {n} does not respect relations")
            lhs = self.target.boundary(n) @ f
            rhs = self.component(n - 1) @ self.source.boundary(n)
            if not lhs.equals(rhs):
                raise ComplexError(f"chain map does not commute with ∂_{n}")

    def on_homology(
        self,
        n: int,
        source_data: Optional[HomologyData] = None,
        target_data: Optional[HomologyData] = None,
    ) -> GroupMap:
        hs = source_data or self.source.homology_data(n)
        ht = target_data or self.target.homology_data(n)
        columns = [ht.classify(self.component(n)(z)) for z in hs.cycles.columns()]
        return GroupMap(hs.group, ht.group, IntMatrix.from_columns(columns, ht.group.ngens))

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self ∘ other"""
        degrees = set(other.source.groups) | set(self.target.groups)
        return ChainMap(
            other.source,
            self.target,
            {n: (self.component(n) @ other.component(n)).matrix for n in degrees},
        )

    def scale(self, k: int) -> "ChainMap":
        return ChainMap(
            self.source, self.target, {n: m.scale(k) for n, m in self.matrices.items()}
        )


def stack_maps(maps: Sequence[ChainMap], source: ChainComplex, target: ChainComplex,
               vertical: bool) -> ChainMap:
    """Combine maps into or out of a direct sum complex.

    vertical: A → ⊕B_k (maps stacked in rows); otherwise ⊕A_k → B.
    """
    degrees = set(source.groups) | set(target.groups)
    out = {}
    for n in degrees:
        blocks = [m.component(n).matrix for m in maps]
        if vertical:
            out[n] = IntMatrix.vstack(blocks, cols=source.group(n).ngens)
        else:
            out[n] = IntMatrix.hstack(blocks, rows=target.group(n).ngens)
    return ChainMap(source, target, out)


def total_complex(
    columns: Mapping[int, ChainComplex], horizontal: Mapping[int, ChainMap]
) -> Tuple[ChainComplex, Dict[Tuple[int, int], int]]:
    """Total complex of a double complex with commuting squares.

    `columns[p]` is a chain complex in degrees n; `horizontal[p]` maps
    column p to column p+1 (a cohomological direction). The total degree of
    (p, n) is n − p and the differential is ∂ + (−1)^n·h.

    Returns the complex and the offset of every (p, n) block in its total
    degree.
    """
    blocks: Dict[int, List[Tuple[int, int]]] = {}
    for p in sorted(columns):
        for n in sorted(columns[p].groups):
            blocks.setdefault(n - p, []).append((p, n))
    groups = {}
    offsets: Dict[Tuple[int, int], int] = {}
    for m, entries in blocks.items():
        k = 0
        parts = []
        for p, n in entries:
            offsets[(p, n)] = k
            g = columns[p].group(n)
            parts.append(g)
            k += g.ngens
        groups[m] = FgAbGroup.direct_sum(parts)
    boundaries = {}
    for m, entries in blocks.items():
        if m - 1 not in groups:
            continue
        rows, cols = groups[m - 1].ngens, groups[m].ngens
        data = [[0] * cols for _ in range(rows)]
        for p, n in entries:
            c0 = offsets[(p, n)]
            pieces = []
            if (p, n - 1) in offsets:
                pieces.append((offsets[(p, n - 1)], columns[p].boundary(n).matrix))
            if p in horizontal and (p + 1, n) in offsets:
                h = horizontal[p].component(n).matrix
                pieces.append((offsets[(p + 1, n)], h.scale(-1 if n % 2 else 1)))
            for r0, block in pieces:
                for i, row in enumerate(block.data):
                    for j, v in enumerate(row):
                        if v:
                            data[r0 + i][c0 + j] += v
        boundaries[m] = IntMatrix.from_rows(data, cols)
    return ChainComplex(groups, boundaries), offsets


def connecting_map(f: ChainMap, g: ChainMap, n: int) -> GroupMap:
    """δ: H_n(C) → H_{n−1}(A) for a degreewise short exact 0 → A → B → C → 0."""
    a, b, c = f.source, f.target, g.target
    hc = c.homology_data(n)
    ha = a.homology_data(n - 1)
    columns = []
    for z in hc.cycles.columns():
        lifted = g.component(n).lift_element(z)
        if lifted is None:
            raise ComplexError(f"g is not surjective in degree {n}")
        boundary = b.boundary(n)(lifted)
        pre = f.component(n - 1).lift_element(boundary)
        if pre is None:
            raise ComplexError(f"sequence is not exact in degree {n - 1}")
        columns.append(ha.classify(pre))
    return GroupMap(hc.group, ha.group, IntMatrix.from_columns(columns, ha.group.ngens))
