#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: diagrams.py
# @Created:   2026-09-05 14:20:33
# @Modified:  2026-10-09 10:02:47

from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Mapping, Tuple

from ..errors import ShapeError, SheafHomologyError
from .groups import FgAbGroup, GroupMap
from .matrix import IntMatrix


@dataclass
class Diagram:
    """A finite diagram of groups: objects in insertion order plus arrows."""

    objects: Dict[Hashable, FgAbGroup] = field(default_factory=dict)
    arrows: List[Tuple[Hashable, Hashable, GroupMap]] = field(default_factory=list)

    def add_object(self, key: Hashable, group: FgAbGroup) -> None:
        self.objects[key] = group

    def add_arrow(self, src: Hashable, dst: Hashable, m: GroupMap) -> None:
        if m.source.ngens != self.objects[src].ngens or m.target.ngens != self.objects[dst].ngens:
            raise ShapeError(f"arrow {src!r} -> {dst!r} does not fit its objects")
        self.arrows.append((src, dst, m))

    def offsets(self) -> Dict[Hashable, int]:
        out, k = {}, 0
        for key, g in self.objects.items():
            out[key] = k
            k += g.ngens
        return out

    @property
    def total_gens(self) -> int:
        return sum(g.ngens for g in self.objects.values())


@dataclass(frozen=True)
class Cocone:
    group: FgAbGroup
    legs: Mapping[Hashable, GroupMap]

    def factor(self, legs: Mapping[Hashable, GroupMap], target: FgAbGroup) -> GroupMap:
        """The map out of the colimit induced by a compatible cocone `legs`."""
        blocks = [legs[key].matrix for key in self.legs]
        return GroupMap(self.group, target, IntMatrix.hstack(blocks, rows=target.ngens))


@dataclass(frozen=True)
class Cone:
    group: FgAbGroup
    legs: Mapping[Hashable, GroupMap]
    # limit → product of objects
    inclusion: GroupMap

    def factor(self, legs: Mapping[Hashable, GroupMap], source: FgAbGroup) -> GroupMap:
        """The map into the limit induced by a compatible cone `legs`."""
        into_product = GroupMap(
            source,
            self.inclusion.target,
            IntMatrix.vstack([legs[key].matrix for key in self.legs], cols=source.ngens),
        )
        lifted = self.inclusion.lift(into_product)
        if lifted is None:
            raise SheafHomologyError("legs do not form a cone over the diagram")
        return lifted


def colimit(d: Diagram) -> Cocone:
    """Coequalizer presentation: ⊕ objects modulo ι_src(a) − ι_dst(m·a)."""
    offsets = d.offsets()
    n = d.total_gens
    columns = []
    for key, g in d.objects.items():
        for rel in g.relations.columns():
            col = [0] * n
            col[offsets[key] : offsets[key] + g.ngens] = rel
            columns.append(col)
    for src, dst, m in d.arrows:
        for j in range(m.source.ngens):
            col = [0] * n
            col[offsets[src] + j] += 1
            for i, v in enumerate(m.matrix.column(j)):
                col[offsets[dst] + i] -= v
            columns.append(col)
    group = FgAbGroup(IntMatrix.from_columns(columns, n))
    legs = {}
    for key, g in d.objects.items():
        rows = [[1 if i == offsets[key] + j else 0 for j in range(g.ngens)] for i in range(n)]
        legs[key] = GroupMap(g, group, IntMatrix.from_rows(rows, g.ngens))
    return Cocone(group, legs)


def limit(d: Diagram) -> Cone:
    """Kernel of ∏ objects → ∏_arrows dst, a ↦ m(a_src) − a_dst."""
    offsets = d.offsets()
    n = d.total_gens
    product = FgAbGroup.direct_sum(list(d.objects.values()))
    targets = [d.objects[dst] for _, dst, _ in d.arrows]
    arrow_product = FgAbGroup.direct_sum(targets)
    rows = []
    for src, dst, m in d.arrows:
        for i in range(m.target.ngens):
            row = [0] * n
            for j, v in enumerate(m.matrix.row(i)):
                row[offsets[src] + j] += v
            row[offsets[dst] + i] -= 1
            rows.append(row)
    difference = GroupMap(product, arrow_product, IntMatrix.from_rows(rows, n))
    inclusion = difference.kernel()
    group = inclusion.source
    legs = {}
    for key, g in d.objects.items():
        block = inclusion.matrix.submatrix(
            range(offsets[key], offsets[key] + g.ngens), range(group.ngens)
        )
        legs[key] = GroupMap(group, g, block)
    return Cone(group, legs, inclusion)
