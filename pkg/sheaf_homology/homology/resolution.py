#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: resolution.py
# @Created:   2026-09-13 16:22:08
# @Modified:  2026-10-16 09:45:51

"""Resolutions by sums of constant sheaves on minimal opens.

Term P_k is ⊕_j ℤ_{U_{a_j}} for a list of anchors a_j. A map P_k → P_{k−1} is
determined by one local section of P_{k−1} per anchor of P_k, so every
differential is also recorded as the integer matrix of the induced map
L(X, P_k) = ℤ^{#anchors} → L(X, P_{k−1}); these matrices form L(X, P_•).
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..errors import SheafError
from ..log import child_logger
from ..poset import Element, ValidationReport
from ..sheaf import Sheaf, SheafMorphism, free_sheaf, sections_morphism
from ..zlinalg import ChainComplex, FgAbGroup, IntMatrix, is_exact

logger = child_logger(__name__)

Section = Tuple[Element, Tuple[int, ...]]


@dataclass(eq=False)
class Resolution:
    sheaf: Sheaf
    length: int
    anchors: Dict[int, List[Element]] = field(default_factory=dict)
    terms: Dict[int, Sheaf] = field(default_factory=dict)
    # P_0 → F
    augmentation: SheafMorphism = None  # type: ignore[assignment]
    # k -> P_k → P_{k−1}, k ≥ 1
    differentials: Dict[int, SheafMorphism] = field(default_factory=dict)
    # k -> matrix of L(X, P_k) → L(X, P_{k−1})
    matrices: Dict[int, IntMatrix] = field(default_factory=dict)

    def term(self, k: int) -> Sheaf:
        t = self.terms.get(k)
        if t is None:
            return free_sheaf(self.sheaf.base, [])
        return t

    def cosections_complex(self) -> ChainComplex:
        """L(X, P_•): each L(X, ℤ_{U_x}) is ℤ since minimal opens are connected."""
        groups = {k: FgAbGroup.free(len(a)) for k, a in self.anchors.items()}
        return ChainComplex(groups, dict(self.matrices))

    def validate(self) -> ValidationReport:
        """Composites vanish and the augmented complex is exact at every stalk
        below the top term."""
        report = ValidationReport()
        p = self.sheaf.base
        top = max(self.terms, default=-1)
        for x in p.elements:
            eps = self.augmentation.component(x)
            if not eps.is_surjective():
                report.violations.append(f"augmentation is not onto the stalk at {x}")
            if 1 in self.differentials:
                d1 = self.differentials[1].component(x)
                if not (eps @ d1).is_zero():
                    report.violations.append(f"ε ∘ d_1 is not zero at {x}")
                if not is_exact(d1, eps):
                    report.violations.append(f"not exact at P_0, stalk {x}")
            elif not eps.is_injective():
                report.violations.append(f"not exact at P_0, stalk {x}")
            for k in range(1, top):
                d_k = self.differentials[k].component(x)
                nxt = self.differentials.get(k + 1)
                if nxt is None:
                    if not d_k.is_injective():
                        report.violations.append(f"not exact at P_{k}, stalk {x}")
                    continue
                d_next = nxt.component(x)
                if not (d_k @ d_next).is_zero():
                    report.violations.append(f"d_{k} ∘ d_{k + 1} is not zero at {x}")
                elif not is_exact(d_next, d_k):
                    report.violations.append(f"not exact at P_{k}, stalk {x}")
            if 0 < top < self.length and not self.differentials[top].component(x).is_injective():
                report.violations.append(f"not exact at P_{top}, stalk {x}")
        return report


def _new_generators(
    stalk: FgAbGroup, images: List[Tuple[int, ...]], minimal: bool
) -> List[Tuple[int, ...]]:
    if not minimal:
        return [tuple(v) for v in stalk.generator_vectors()]
    quotient = FgAbGroup(
        IntMatrix.hstack(
            [stalk.relations, IntMatrix.from_columns(images, stalk.ngens)],
            rows=stalk.ngens,
        )
    )
    return [tuple(v) for v in quotient.generator_vectors()]


def _generating_sections(k: Sheaf, minimal: bool) -> List[Section]:
    """Local sections of k generating every stalk, chosen along a linear
    extension; with `minimal` only what smaller anchors do not already reach."""
    p = k.base
    sections: List[Section] = []
    for y in p.linear_extension:
        stalk = k.stalk(y)
        if stalk.is_zero():
            continue
        images = [k.restriction(a, y)(s) for a, s in sections if p.lt(a, y)]
        sections.extend((y, v) for v in _new_generators(stalk, images, minimal))
    return sections


def _global_matrix(
    sections: List[Section], previous: List[Element], incl: SheafMorphism
) -> IntMatrix:
    """Column j: the coordinates of section j in L(X, P_{k−1}) = ℤ^{#previous}."""
    p = incl.base
    columns = []
    for x, s in sections:
        local = incl.component(x)(s)
        # stalk of P_{k−1} at x has one coordinate per anchor below x, in order
        below = [i for i, a in enumerate(previous) if p.le(a, x)]
        col = [0] * len(previous)
        for i, v in zip(below, local):
            col[i] = v
        columns.append(col)
    return IntMatrix.from_columns(columns, len(previous))


def standard_resolution(f: Sheaf, length: int, minimal: bool = True) -> Resolution:
    """P_length → … → P_0 → F, each P_k a sum of ℤ_{U_x}.

    P_0 carries one copy of ℤ_{U_y} per chosen generator of F_y; later terms
    resolve the kernel sheaves the same way.
    """
    if length < 0:
        raise SheafError("resolution length must be non-negative")
    p = f.base
    res = Resolution(f, length)

    sections = _generating_sections(f, minimal)
    eps = sections_morphism(f, sections)
    res.anchors[0] = [x for x, _ in sections]
    res.terms[0] = eps.source
    res.augmentation = eps
    previous = eps

    for k in range(1, length + 1):
        kernel, incl = previous.kernel()
        if kernel.is_zero():
            break
        sections = _generating_sections(kernel, minimal)
        onto_kernel = sections_morphism(kernel, sections)
        d = incl.compose(onto_kernel)
        res.anchors[k] = [x for x, _ in sections]
        res.terms[k] = d.source
        res.differentials[k] = d
        res.matrices[k] = _global_matrix(
            [(x, tuple(s)) for x, s in sections], res.anchors[k - 1], incl
        )
        previous = d
        logger.debug("resolution term P_%d has %d summands", k, len(sections))

    logger.debug(
        "standard resolution of length %d over %d elements: %s",
        length,
        len(p),
        {k: len(a) for k, a in res.anchors.items()},
    )
    return res
