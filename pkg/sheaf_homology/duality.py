#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: duality.py
# @Created:   2026-09-24 10:11:36
# @Modified:  2026-10-16 21:03:58

"""Dualizing complexes of finite spaces.

The stalk of D_X at x is ℝHom(ℝΓ(X, ℤ_{U_x}), ℤ). ℝΓ(X, ℤ_{U_x}) is the cobar
complex of ℤ_{U_x}, whose n-th group is free on the n-chains ending in U_x, so
D_X^{−n}(x) is free on the same chains with the transposed coboundary. For
x ≤ y the inclusion ℤ_{U_y} ⊆ ℤ_{U_x} makes the structure map D(x) → D(y) the
projection onto the chains ending in U_y.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, NamedTuple, Optional

from .concurrency import parallel_map
from .constants import EXIT_CHECK_FAILED, EXIT_OK
from .errors import InputError
from .homology import BarComplex, bar_homology, cobar_complex, cobar_total
from .log import child_logger
from .poset import Chain, Element, FinitePoset
from .report import Report
from .sheaf import Sheaf, SheafComplex, SheafMorphism, constant_sheaf
from .zlinalg import FgAbGroup, IntMatrix

logger = child_logger(__name__)

Z = FgAbGroup.free(1)


@dataclass
class DualizingComplex:
    base: FinitePoset
    complex: SheafComplex
    # n -> x -> chains of length n ending in U_x, the basis of D^{−n}(x)
    chains: Dict[int, Dict[Element, List[Chain]]]

    @property
    def depth(self) -> int:
        return max(self.chains, default=0)

    def stalk_cohomology(self, x: Element) -> List[FgAbGroup]:
        """[H^0, H^{−1}, …] of the stalk complex at x."""
        c = self.complex.stalk_complex(x)
        return [c.homology(n) for n in range(self.depth + 1)]

    def global_cohomology(self) -> List[FgAbGroup]:
        """[H^0, H^{−1}, …] of ℝΓ(X, D_X)."""
        total = cobar_total(self.complex)
        return [total.homology(n) for n in range(self.depth + 1)]


class _Stalk(NamedTuple):
    # n -> positions of the n-chains ending in U_x among all n-chains
    keep: Dict[int, List[int]]
    # n -> D^{−n}(x) → D^{−n+1}(x)
    diffs: Dict[int, IntMatrix]


def _stalk(p: FinitePoset, cobar: BarComplex, top: int, x: Element) -> _Stalk:
    ux = p.minimal_open(x)
    keep = {
        n: [i for i, c in enumerate(cobar.chains.get(n, [])) if c[-1] in ux]
        for n in range(top + 1)
    }
    diffs = {}
    for n in range(1, top + 1):
        delta = cobar.complex.boundary(-(n - 1)).matrix
        diffs[n] = delta.submatrix(keep[n], keep[n - 1]).T
    return _Stalk(keep, diffs)


def dualizing_complex(
    p: FinitePoset, max_deg: Optional[int] = None, workers: Optional[int] = 1
) -> DualizingComplex:
    """D_X in cohomological degrees −depth..0.

    The depth is the height of X, or max_deg + 1 when that is smaller; stalk
    cohomology is exact in degrees −max_deg..0 either way.
    """
    cobar = cobar_complex(constant_sheaf(p, Z))
    top = max(p.height, 0)
    if max_deg is not None:
        top = min(top, max_deg + 1)
    found = parallel_map(lambda x: _stalk(p, cobar, top, x), p.elements, workers)
    stalks = dict(zip(p.elements, found))
    chains = {
        n: {x: [cobar.chains[n][i] for i in stalks[x].keep[n]] for x in p.elements}
        for n in range(top + 1)
        if n in cobar.chains
    }

    terms = {}
    for n in chains:
        maps = {}
        for x, y in p.covers:
            pos = {c: i for i, c in enumerate(chains[n][x])}
            rows = [[0] * len(chains[n][x]) for _ in chains[n][y]]
            for i, c in enumerate(chains[n][y]):
                rows[i][pos[c]] = 1
            maps[(x, y)] = IntMatrix.from_rows(rows, len(chains[n][x]))
        terms[-n] = Sheaf(
            p, {x: FgAbGroup.free(len(chains[n][x])) for x in p.elements}, maps
        )
    diffs = {
        -n: SheafMorphism(
            terms[-n], terms[-n + 1], {x: stalks[x].diffs[n] for x in p.elements}
        )
        for n in chains
        if n >= 1
    }
    logger.debug(
        "dualizing complex: ranks %s",
        {-n: terms[-n].total_gens() for n in sorted(chains)},
    )
    return DualizingComplex(p, SheafComplex(p, terms, diffs), chains)


def _expected_local(p: FinitePoset, x: Element, max_deg: int) -> List[FgAbGroup]:
    ux = p.minimal_open(x)
    return bar_homology(constant_sheaf(p.subposet(ux), Z), max_deg)


def pv_check(
    p: FinitePoset,
    max_deg: int,
    workers: Optional[int] = 1,
    d: Optional[DualizingComplex] = None,
) -> Report:
    """H^{−i}(ℝΓ(X, ℤ_{U_x} ⊗ D_X)) against H_i(U_x, ℤ) on the basis of minimal opens."""
    d = d or dualizing_complex(p, max_deg, workers)

    def local(x: Element):
        total = cobar_total(d.complex.extension_by_zero(p.minimal_open(x)))
        return [total.homology(i) for i in range(max_deg + 1)]

    found = parallel_map(local, p.elements, workers)
    report = Report("poincare-verdier")
    for x, groups in zip(p.elements, found):
        expected = _expected_local(p, x, max_deg)
        report.add_column(f"U_{x}", groups)
        for i in range(max_deg + 1):
            if not expected[i].is_isomorphic(groups[i]):
                report.fail(f"basis open U_{x} fails", i, expected[i], groups[i])
    if report.passed:
        report.note("PV-space")
    else:
        report.note("not a PV-space")
    return report


def global_pv_consequence(
    p: FinitePoset, max_deg: int, d: Optional[DualizingComplex] = None
) -> Report:
    """H^{−i}(ℝΓ(X, D_X)) against H_i(X, ℤ)."""
    d = d or dualizing_complex(p, max_deg)
    total = cobar_total(d.complex)
    dual = [total.homology(i) for i in range(max_deg + 1)]
    expected = bar_homology(constant_sheaf(p, Z), max_deg)
    report = Report("global duality")
    report.add_column("H^-i(X, D)", dual)
    report.add_column("H_i(X, Z)", expected)
    for i in range(max_deg + 1):
        report.expect_isomorphic(i, expected[i], dual[i], "invariant factors")
    return report


# homological manifolds


@dataclass
class ManifoldReport:
    verdict: bool
    dimension: Optional[int] = None
    orientable: Optional[bool] = None
    orientation: Optional[Sheaf] = None
    witnesses: List[str] = field(default_factory=list)
    # x -> rendered [H^0, H^{−1}, …] of the stalk of D_X
    stalks: Dict[Element, List[str]] = field(default_factory=dict)

    @property
    def return_code(self) -> int:
        return EXIT_OK if self.verdict else EXIT_CHECK_FAILED

    def __str__(self) -> str:
        lines = [
            f"  D({x}): " + ", ".join(f"{-n}: {g}" for n, g in enumerate(groups))
            for x, groups in self.stalks.items()
        ]
        if self.verdict:
            kind = "orientable" if self.orientable else "non-orientable"
            lines.append(f"homological {self.dimension}-manifold, {kind}")
        else:
            lines.extend(f"  witness: {w}" for w in self.witnesses)
            lines.append(f"not a homological manifold ({self.witnesses[0]})")
        return "\n".join(lines)

    def to_json(self) -> Dict[str, Any]:
        orientation = None
        if self.orientation is not None:
            orientation = {
                f"{x}->{y}": self.orientation.cover_matrix(x, y)[0, 0]
                for x, y in self.orientation.base.sorted_covers
            }
        return {
            "manifold": self.verdict,
            "dimension": self.dimension,
            "orientable": self.orientable,
            "orientation": orientation,
            "stalks": self.stalks,
            "witnesses": self.witnesses,
        }


def _concentration(groups: List[FgAbGroup]) -> List[int]:
    return [n for n, g in enumerate(groups) if not g.is_zero()]


def _orientation(p: FinitePoset, signs: Dict[tuple, int]) -> Optional[Dict[Element, int]]:
    """A ±1 labelling s with s(y) = s(x)·sign(x, y) on every cover, if one exists."""
    neighbours: Dict[Element, List[tuple]] = {x: [] for x in p.elements}
    for (x, y), e in signs.items():
        neighbours[x].append((y, e))
        neighbours[y].append((x, e))
    label: Dict[Element, int] = {}
    for start in p.elements:
        if start in label:
            continue
        label[start] = 1
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, e in neighbours[x]:
                want = label[x] * e
                if y not in label:
                    label[y] = want
                    queue.append(y)
                elif label[y] != want:
                    return None
    return label


def homological_manifold_check(
    p: FinitePoset,
    max_deg: Optional[int] = None,
    workers: Optional[int] = 1,
    d: Optional[DualizingComplex] = None,
) -> ManifoldReport:
    """Whether D_X is a rank-one locally constant sheaf placed in one degree −n.

    Reads D_X in every degree down to −height, so `max_deg` (None for no
    bound) must reach the height of X and `d` must not be truncated.
    """
    height = max(p.height, 0)
    if max_deg is not None and max_deg < height:
        raise InputError(
            f"max-deg {max_deg} is below the height {height} the manifold check reads"
        )
    d = d or dualizing_complex(p, max_deg, workers)
    if d.depth < height:
        raise InputError(
            f"dualizing complex stops at depth {d.depth}, below height {height}"
        )
    cohomology = dict(zip(p.elements, parallel_map(d.stalk_cohomology, p.elements, workers)))
    report = ManifoldReport(False)
    report.stalks = {x: [str(g) for g in gs] for x, gs in cohomology.items()}

    dimension = None
    for x in p.elements:
        degrees = _concentration(cohomology[x])
        if not degrees:
            report.witnesses.append(f"stalk at {x} vanishes")
        elif len(degrees) > 1:
            where = ", ".join(str(-n) for n in degrees)
            report.witnesses.append(f"stalk at {x} has cohomology in degrees {where}")
        elif not cohomology[x][degrees[0]].is_isomorphic(Z):
            report.witnesses.append(
                f"stalk at {x} is {cohomology[x][degrees[0]]} in degree {-degrees[0]}"
            )
        elif dimension is None:
            dimension = degrees[0]
        elif dimension != degrees[0]:
            report.witnesses.append(
                f"stalk at {x} sits in degree {-degrees[0]}, not {-dimension}"
            )
    if report.witnesses:
        return report

    signs = {}
    for x, y in p.sorted_covers:
        edge = d.complex.stalk_map(x, y).on_homology(dimension)
        m = edge.normal_matrix()
        if not edge.is_isomorphism() or (m.rows, m.cols) != (1, 1):
            report.witnesses.append(f"restriction {x}->{y} is not an isomorphism")
            continue
        signs[(x, y)] = m[0, 0]
    if report.witnesses:
        return report

    report.verdict = True
    report.dimension = dimension
    report.orientation = Sheaf(
        p, {x: Z for x in p.elements}, {c: IntMatrix.from_rows([[e]], 1) for c, e in signs.items()}
    )
    report.orientable = _orientation(p, signs) is not None
    logger.info(
        "homological %d-manifold (%s)",
        dimension,
        "orientable" if report.orientable else "non-orientable",
    )
    return report


def restriction_comparison(
    p: FinitePoset, u: Iterable[Element], max_deg: Optional[int] = None
) -> Report:
    """Stalk cohomology of (D_X)|_U next to that of D_U, per element of U."""
    u = p.check_open(u)
    restricted = dualizing_complex(p, max_deg).complex.restrict(u)
    intrinsic = dualizing_complex(p.subposet(u), max_deg)
    report = Report("dualizing complex on an open")
    for x in p.sort(u):
        c = restricted.stalk_complex(x)
        here = [c.homology(n) for n in range(intrinsic.depth + 1)]
        there = intrinsic.stalk_cohomology(x)
        report.add_column(f"D_X|U ({x})", here)
        report.add_column(f"D_U ({x})", there)
        same = all(a.is_isomorphic(b) for a, b in zip(here, there))
        report.note(f"{x}: {'agree' if same else 'differ'}")
    return report
