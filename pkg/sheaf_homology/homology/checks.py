#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: checks.py
# @Created:   2026-09-16 11:48:30
# @Modified:  2026-10-16 17:05:13

"""Checks of the structural theorems on concrete inputs.

Every check returns a `Report`. Exact sequences are checked on homology
classes through the bar complexes, where inclusions and restrictions are
honest chain maps.
"""

from typing import Iterable, List, Optional, Sequence

from ..concurrency import parallel_map
from ..errors import InputError, PosetError, SheafError
from ..log import child_logger
from ..poset import Element, FinitePoset, MonotoneMap, product, projections
from ..report import Report
from ..sheaf import (
    Sheaf,
    SheafMorphism,
    closed_restriction,
    closed_restriction_map,
    constant_sheaf,
    direct_sum,
    extension_by_zero,
    extension_by_zero_inclusion,
    inverse_image,
    restriction_to_closed,
    tensor,
)
from ..zlinalg import (
    ChainMap,
    FgAbGroup,
    GroupMap,
    IntMatrix,
    connecting_map,
    ext1,
    hom,
    is_exact,
    stack_maps,
    tensor as group_tensor,
    tor1,
)
from .bar import bar_complex, bar_inclusion, bar_map, bar_total
from .derived import (
    bar_homology,
    cohomology,
    derived_dual,
    homology,
    homology_with_coefficients,
    pulled_back_tensor_complex,
    pushforward,
    resolution_margin,
)
from .resolution import standard_resolution

logger = child_logger(__name__)

Z = FgAbGroup.free(1)


def _sum(groups: Sequence[FgAbGroup]) -> FgAbGroup:
    return FgAbGroup.direct_sum(list(groups))


# Mayer-Vietoris


def _mv_report(
    report: Report, alpha: ChainMap, beta: ChainMap, max_deg: int, labels: Sequence[str]
) -> Report:
    """A → B → C on homology: composite zero, exact at B, coker β_i ≅ ker α_{i−1}."""
    a_maps = [alpha.on_homology(i) for i in range(max_deg + 1)]
    b_maps = [beta.on_homology(i) for i in range(max_deg + 1)]
    report.add_column(labels[0], [m.source for m in a_maps])
    report.add_column(labels[1], [m.target for m in a_maps])
    report.add_column(labels[2], [m.target for m in b_maps])
    for i in range(max_deg + 1):
        a_i, b_i = a_maps[i], b_maps[i]
        if not (b_i @ a_i).is_zero():
            report.fail("composite is not zero", i)
            continue
        if not is_exact(a_i, b_i):
            report.fail("not exact at the middle column", i)
        coker = b_i.cokernel().target
        ker = a_maps[i - 1].kernel().source if i > 0 else FgAbGroup.zero()
        if not coker.is_isomorphic(ker):
            report.fail("cokernel and next kernel differ", i, ker, coker)
    return report


def _mv_subsets(
    f: Sheaf, first: frozenset, second: frozenset, max_deg: int, name: str, labels
) -> Report:
    whole = bar_complex(f)
    b1, b2 = bar_complex(f, first), bar_complex(f, second)
    meet = bar_complex(f, first & second)
    pair = b1.complex.direct_sum(b2.complex)
    alpha = stack_maps(
        [bar_inclusion(meet, b1), bar_inclusion(meet, b2).scale(-1)],
        meet.complex,
        pair,
        vertical=True,
    )
    beta = stack_maps(
        [bar_inclusion(b1, whole), bar_inclusion(b2, whole)],
        pair,
        whole.complex,
        vertical=False,
    )
    return _mv_report(Report(name), alpha, beta, max_deg, labels)


def mv_open_check(
    p: FinitePoset, u: Iterable[Element], v: Iterable[Element], f: Sheaf, max_deg: int
) -> Report:
    """H(U∩V) → H(U) ⊕ H(V) → H(X) for an open cover X = U ∪ V."""
    u, v = p.check_open(u), p.check_open(v)
    if u | v != frozenset(p.elements):
        raise PosetError("U and V do not cover the space")
    return _mv_subsets(
        f, u, v, max_deg, "mayer-vietoris (open)", ("H(U∩V)", "H(U)+H(V)", "H(X)")
    )


def mv_closed_check(
    p: FinitePoset, y: Iterable[Element], z: Iterable[Element], f: Sheaf, max_deg: int
) -> Report:
    """The same sequence for a closed cover X = Y ∪ Z, over the subposets."""
    y, z = p.check_closed(y), p.check_closed(z)
    if y | z != frozenset(p.elements):
        raise PosetError("Y and Z do not cover the space")
    return _mv_subsets(
        f, y, z, max_deg, "mayer-vietoris (closed)", ("H(Y∩Z)", "H(Y)+H(Z)", "H(X)")
    )


# long exact sequences


def _les_report(
    report: Report, f: ChainMap, g: ChainMap, max_deg: int, labels: Sequence[str]
) -> Report:
    """Exactness of … → H_i(A) → H_i(B) → H_i(C) → H_{i−1}(A) → … with the
    connecting maps, at every position up to max_deg."""
    f_maps = [f.on_homology(i) for i in range(max_deg + 1)]
    g_maps = [g.on_homology(i) for i in range(max_deg + 1)]
    deltas = {i: connecting_map(f, g, i) for i in range(1, max_deg + 2)}
    report.add_column(labels[0], [m.source for m in f_maps])
    report.add_column(labels[1], [m.target for m in f_maps])
    report.add_column(labels[2], [m.target for m in g_maps])
    for i in range(max_deg + 1):
        if not is_exact(f_maps[i], g_maps[i]):
            report.fail(f"not exact at {labels[1]}", i)
        if i == 0:
            if not g_maps[0].is_surjective():
                report.fail(f"not exact at {labels[2]}", 0)
        elif not is_exact(g_maps[i], deltas[i]):
            report.fail(f"not exact at {labels[2]}", i)
        if not is_exact(deltas[i + 1], f_maps[i]):
            report.fail(f"not exact at {labels[0]}", i)
    return report


def _check_short_exact(phi: SheafMorphism, psi: SheafMorphism) -> Optional[str]:
    for x in phi.base.elements:
        a, b = phi.component(x), psi.component(x)
        if not a.is_injective():
            return f"first map is not injective at {x}"
        if not b.is_surjective():
            return f"second map is not surjective at {x}"
        if not is_exact(a, b):
            return f"sequence is not exact at {x}"
    return None


def long_exact_sequence_check(
    phi: SheafMorphism,
    psi: SheafMorphism,
    max_deg: int,
    labels: Sequence[str] = ("H(A)", "H(B)", "H(C)"),
    name: str = "long exact sequence",
) -> Report:
    """The homology sequence of a short exact sequence 0 → A → B → C → 0."""
    report = Report(name)
    problem = _check_short_exact(phi, psi)
    if problem:
        report.fail(problem)
        return report
    a, b, c = bar_complex(phi.source), bar_complex(phi.target), bar_complex(psi.target)
    return _les_report(report, bar_map(phi, a, b), bar_map(psi, b, c), max_deg, labels)


def local_homology_sequence_check(
    p: FinitePoset, y: Iterable[Element], f: Sheaf, max_deg: int
) -> Report:
    """H_i(X, F_{X−Y}) → H_i(X, F) → H_i^Y(X, F) → H_{i−1}(X, F_{X−Y})."""
    y = p.check_closed(y)
    u = p.complement(y)
    return long_exact_sequence_check(
        extension_by_zero_inclusion(p, u, f),
        restriction_to_closed(p, y, f),
        max_deg,
        ("H(X, F_{X-Y})", "H(X, F)", "H^Y(X, F)"),
        "local homology sequence",
    )


def _stack_morphisms(
    source: Sheaf, target: Sheaf, parts: Sequence[SheafMorphism], vertical: bool
) -> SheafMorphism:
    components = {}
    for x in source.elements:
        blocks = [m.component(x).matrix for m in parts]
        if vertical:
            components[x] = IntMatrix.vstack(blocks, cols=source.stalk(x).ngens)
        else:
            components[x] = IntMatrix.hstack(blocks, rows=target.stalk(x).ngens)
    return SheafMorphism(source, target, components)


def local_mv_check(
    p: FinitePoset, y: Iterable[Element], z: Iterable[Element], f: Sheaf, max_deg: int
) -> Report:
    """H^{Y∪Z} → H^Y ⊕ H^Z → H^{Y∩Z} from 0 → F_{Y∪Z} → F_Y ⊕ F_Z → F_{Y∩Z} → 0."""
    y, z = p.check_closed(y), p.check_closed(z)
    union, meet = y | z, y & z
    to_y = closed_restriction_map(p, union, y, f)
    to_z = closed_restriction_map(p, union, z, f)
    y_meet = closed_restriction_map(p, y, meet, f)
    z_meet = closed_restriction_map(p, z, meet, f)
    pair = direct_sum(to_y.target, to_z.target)
    alpha = _stack_morphisms(to_y.source, pair, [to_y, to_z], vertical=True)
    negated = SheafMorphism(
        z_meet.source,
        z_meet.target,
        {x: z_meet.component(x).matrix.scale(-1) for x in p.elements},
    )
    beta = _stack_morphisms(pair, y_meet.target, [y_meet, negated], vertical=False)
    return long_exact_sequence_check(
        alpha,
        beta,
        max_deg,
        ("H^{Y∪Z}", "H^Y+H^Z", "H^{Y∩Z}"),
        "local mayer-vietoris",
    )


# excision


def excision_check(
    p: FinitePoset, u: Iterable[Element], y: Iterable[Element], f: Sheaf, max_deg: int
) -> Report:
    """H_i^Y(U, F|_U) → H_i^Y(X, F) is an isomorphism for closed Y ⊆ open U."""
    u, y = p.check_open(u), p.check_closed(y)
    if not y <= u:
        raise PosetError("the closed set is not contained in the open set")
    fu = f.restrict(u)
    small = bar_complex(closed_restriction(fu.base, y, fu))
    big = bar_complex(closed_restriction(p, y, f))
    chain_map = bar_inclusion(small, big)
    report = Report("excision")
    maps = [chain_map.on_homology(i) for i in range(max_deg + 1)]
    report.add_column("H^Y(U)", [m.source for m in maps])
    report.add_column("H^Y(X)", [m.target for m in maps])
    for i, m in enumerate(maps):
        if not m.is_isomorphism():
            report.fail("excision map is not an isomorphism", i, m.target, m.source)
    return report


# coefficients and products


def universal_coefficients(f: Sheaf, g: FgAbGroup, max_deg: int) -> Report:
    """H_i(X, F ⊗^L G) against H_i ⊗ G ⊕ Tor_1(H_{i−1}, G)."""
    h = homology(f, max_deg)
    derived = homology_with_coefficients(f, g, max_deg)
    expected = []
    for i in range(max_deg + 1):
        parts = [group_tensor(h[i], g)]
        if i > 0:
            parts.append(tor1(h[i - 1], g))
        expected.append(_sum(parts))
    report = Report("universal coefficients")
    report.add_column("H(X, F)", h)
    report.add_column(f"H(X, F (x)L {g})", derived)
    report.add_column("H (x) G + Tor(H, G)", expected)
    for i in range(max_deg + 1):
        report.expect_isomorphic(i, expected[i], derived[i], "invariant factors")
    return report


def kunneth_route(f1: Sheaf, f2: Sheaf) -> str:
    """Stalkwise when a factor has free stalks, resolved otherwise."""
    return "stalkwise" if f1.has_free_stalks() or f2.has_free_stalks() else "resolved"


def kunneth_homology(
    p1: FinitePoset,
    f1: Sheaf,
    p2: FinitePoset,
    f2: Sheaf,
    max_deg: int,
    route: Optional[str] = None,
) -> List[FgAbGroup]:
    """H_n(X1 × X2, F1 ⊠ F2).

    When one factor has free stalks the stalkwise product is already derived;
    otherwise the first factor is replaced by its standard resolution. `route`
    forces one of the two.
    """
    route = route or kunneth_route(f1, f2)
    if route not in ("stalkwise", "resolved"):
        raise InputError(f"unknown Künneth route {route!r}")
    pi1, pi2 = projections(p1, p2)
    if route == "stalkwise":
        boxed = tensor(inverse_image(pi1, f1), inverse_image(pi2, f2))
        return homology(boxed, max_deg)
    res = standard_resolution(f1, resolution_margin(max_deg))
    total = bar_total(pulled_back_tensor_complex(pi1, res, pi2, f2))
    return [total.homology(i) for i in range(max_deg + 1)]


def kunneth(
    p1: FinitePoset, f1: Sheaf, p2: FinitePoset, f2: Sheaf, max_deg: int
) -> Report:
    h1, h2 = homology(f1, max_deg), homology(f2, max_deg)
    lhs = kunneth_homology(p1, f1, p2, f2, max_deg)
    expected = []
    for n in range(max_deg + 1):
        parts = [group_tensor(h1[i], h2[n - i]) for i in range(n + 1)]
        parts += [tor1(h1[i], h2[n - 1 - i]) for i in range(n)]
        expected.append(_sum(parts))
    report = Report("kunneth")
    report.add_column("H(X1)", h1)
    report.add_column("H(X2)", h2)
    report.add_column("H(X1 x X2)", lhs)
    report.add_column("formula", expected)
    report.note(
        f"product has {len(product(p1, p2))} elements, "
        f"{kunneth_route(f1, f2)} tensor product"
    )
    for n in range(max_deg + 1):
        report.expect_isomorphic(n, expected[n], lhs[n], "invariant factors")
    return report


# duality between homology and cohomology


def duality_sequence_check(f: Sheaf, max_deg: int) -> Report:
    """H^i(X, F^∨) against Hom(H_i, ℤ) ⊕ Ext¹(H_{i−1}, ℤ)."""
    h = homology(f, max_deg)
    dual = cohomology(derived_dual(f, max_deg), max_deg)
    expected = []
    for i in range(max_deg + 1):
        parts = [hom(h[i], Z)]
        if i > 0:
            parts.append(ext1(h[i - 1], Z))
        expected.append(_sum(parts))
    report = Report("duality sequence")
    report.add_column("H(X, F)", h)
    report.add_column("H^(X, F^v)", dual)
    report.add_column("Hom(H, Z) + Ext(H, Z)", expected)
    for i in range(max_deg + 1):
        report.expect_isomorphic(i, expected[i], dual[i], "invariant factors")
    return report


# homotopy


def homotopy_check(
    fmap: MonotoneMap, gmap: MonotoneMap, g: FgAbGroup, max_deg: int
) -> Report:
    """f ≤ g pointwise induce the same maps H_i(X, G) → H_i(Y, G)."""
    if not fmap.is_below(gmap):
        raise PosetError("the first map is not below the second one")
    const = constant_sheaf(fmap.target, g)
    f_star = pushforward(fmap, const, max_deg)
    g_star = pushforward(gmap, const, max_deg)
    report = Report("homotopy")
    report.add_column("H(X, G)", [m.source for m in f_star])
    report.add_column("H(Y, G)", [m.target for m in f_star])
    for i, (a, b) in enumerate(zip(f_star, g_star)):
        if not a.equals(GroupMap(a.source, a.target, b.matrix)):
            report.fail("induced maps differ", i, a.matrix, b.matrix)
    return report


# acyclicity


DEFAULT_TEST_GROUPS = (
    FgAbGroup.free(1),
    FgAbGroup.cyclic(2),
    FgAbGroup.cyclic(3),
    FgAbGroup.cyclic(4),
)


def is_cohomologically_trivial(
    p: FinitePoset,
    groups: Sequence[FgAbGroup] = DEFAULT_TEST_GROUPS,
    max_deg: Optional[int] = None,
) -> bool:
    """H^0(X, G) = G and H^i(X, G) = 0 for i > 0, for every test group G."""
    top = p.height if max_deg is None else max_deg
    for g in groups:
        h = cohomology(constant_sheaf(p, g), max(top, 0))
        if not h[0].is_isomorphic(g) or any(not x.is_zero() for x in h[1:]):
            return False
    return True


def is_l_acyclic(p: FinitePoset, u: Iterable[Element], max_deg: Optional[int] = None) -> bool:
    """Whether ℤ_U has no homology above degree 0."""
    u = p.check_open(u)
    top = p.height if max_deg is None else max_deg
    zu = extension_by_zero(p, u, constant_sheaf(p, Z))
    return all(g.is_zero() for g in homology(zu, max(top, 0))[1:])


# the verify suite


def oracle_check(f: Sheaf, max_deg: int) -> Report:
    """Standard-resolution homology (both generator choices) against the bar complex."""
    report = Report("oracle")
    bar = bar_homology(f, max_deg)
    minimal = homology(f, max_deg, minimal=True)
    full = homology(f, max_deg, minimal=False)
    report.add_column("resolution", minimal)
    report.add_column("bar", bar)
    for i in range(max_deg + 1):
        report.expect_isomorphic(i, bar[i], minimal[i], "minimal resolution and bar")
        report.expect_isomorphic(i, bar[i], full[i], "full resolution and bar")
    return report


def resolution_check(f: Sheaf, max_deg: int) -> Report:
    report = Report("resolution")
    for minimal in (True, False):
        res = standard_resolution(f, resolution_margin(max_deg), minimal=minimal)
        for violation in res.validate().violations:
            report.fail(f"{'minimal' if minimal else 'full'}: {violation}")
    return report


def verify(p: FinitePoset, f: Sheaf, max_deg: int, workers: int = 1) -> List[Report]:
    """The cross-check suite on one input."""
    if f.base != p:
        raise SheafError("sheaf does not live on the given space")
    tasks = [
        lambda: oracle_check(f, max_deg),
        lambda: resolution_check(f, max_deg),
        lambda: universal_coefficients(f, FgAbGroup.cyclic(2), max_deg),
        lambda: duality_sequence_check(f, max_deg),
    ]
    for x in p.elements:
        closure = p.closure(x)
        tasks.append(
            lambda closure=closure: local_homology_sequence_check(p, closure, f, max_deg)
        )
    return parallel_map(lambda task: task(), tasks, workers)
