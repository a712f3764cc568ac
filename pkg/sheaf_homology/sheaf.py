#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: sheaf.py
# @Created:   2026-09-09 13:05:44
# @Modified:  2026-10-16 11:27:58

"""Sheaves and cosheaves on a finite poset, stored as functor data.

A sheaf gives a group F_x = F(U_x) per element and a restriction
ρ_{x→y}: F_x → F_y per cover x ⋖ y (U_y ⊆ U_x). A cosheaf gives Q_x = Q(U_x)
and a corestriction e_{y→x}: Q_y → Q_x per cover, the opposite direction.
Only cover maps are stored; maps along longer relations are composites and
are checked to be path independent when the object is built.
"""

from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from .constants import SHF_WARN_ELEMENTS
from .errors import PosetError, ShapeError, SheafError
from .log import child_logger
from .poset import Element, FinitePoset, MonotoneMap, Subset
from .zlinalg import (
    ChainComplex,
    ChainMap,
    Cocone,
    Cone,
    Diagram,
    FgAbGroup,
    GroupMap,
    IntMatrix,
    colimit,
    column_span_basis,
    limit,
    tensor_presentation,
)

logger = child_logger(__name__)

Cover = Tuple[Element, Element]


def cover_name(x: Element, y: Element) -> str:
    return f"{x}->{y}"


def describe_relation(column: Sequence[int]) -> str:
    terms = []
    for i, v in enumerate(column):
        if v == 1:
            terms.append(f"g{i + 1}")
        elif v:
            terms.append(f"{v}·g{i + 1}")
    return " + ".join(terms) if terms else "0"


class _FunctorData:
    """Groups on elements plus cover maps, with composites along the order.

    `arrow(x, y)` for x ≤ y is the composite map attached to the pair: from
    the group at x to the group at y for sheaves, and back for cosheaves.
    """

    covariant = True
    kind = "sheaf"

    def __init__(
        self,
        base: FinitePoset,
        groups: Mapping[Element, FgAbGroup],
        maps: Mapping[Cover, IntMatrix],
    ) -> None:
        self.base = base
        self._groups: Dict[Element, FgAbGroup] = dict(groups)
        self._maps: Dict[Cover, IntMatrix] = dict(maps)
        self._arrows: Dict[Cover, GroupMap] = {}
        self._check()
        for x, y in base.sorted_covers:
            if (x, y) not in self._maps:
                src, dst = self._ends(x, y)
                self._maps[(x, y)] = IntMatrix.zeros(dst.ngens, src.ngens)
        self._compose()

    def _ends(self, x: Element, y: Element) -> Tuple[FgAbGroup, FgAbGroup]:
        if self.covariant:
            return self._groups[x], self._groups[y]
        return self._groups[y], self._groups[x]

    def _check(self) -> None:
        base = self.base
        for x in base.elements:
            if x not in self._groups:
                raise SheafError(f"no {self._group_word} for element {x}")
        for x in self._groups:
            if x not in base:
                raise SheafError(f"{self._group_word} given for unknown element {x}")
        for key in self._maps:
            if key not in base.covers:
                raise SheafError(f"maps[{cover_name(*key)}] is not a cover relation")

        for x, y in base.sorted_covers:
            src, dst = self._ends(x, y)
            m = self._maps.get((x, y))
            if m is None:
                if src.ngens and dst.ngens:
                    raise SheafError(f"maps[{cover_name(x, y)}] is missing")
                continue
            if (m.rows, m.cols) != (dst.ngens, src.ngens):
                raise SheafError(
                    f"maps[{cover_name(x, y)}] has shape {m.rows}x{m.cols}, "
                    f"expected {dst.ngens}x{src.ngens}"
                )
            g = GroupMap(src, dst, m)
            bad = g.bad_relation()
            if bad is not None:
                rel = describe_relation(src.relations.column(bad))
                raise SheafError(
                    f"maps[{cover_name(x, y)}] does not respect relation {rel} = 0"
                )

    def _compose(self) -> None:
        """Composites along every x ≤ y; two paths must give the same map."""
        base = self.base
        for x in base.linear_extension:
            self._arrows[(x, x)] = GroupMap.identity(self._groups[x])
        for y in base.linear_extension:
            for z in base.lower_covers(y):
                cover = GroupMap(*self._ends(z, y), self._maps[(z, y)])
                for x in base.down_set(z):
                    inner = self._arrows[(x, z)]
                    composite = cover @ inner if self.covariant else inner @ cover
                    known = self._arrows.get((x, y))
                    if known is None:
                        self._arrows[(x, y)] = composite
                    elif not known.equals(composite):
                        raise SheafError(
                            f"functoriality fails from {x} to {y}: two paths disagree"
                        )

    @property
    def _group_word(self) -> str:
        return "stalk" if self.covariant else "value"

    def group(self, x: Element) -> FgAbGroup:
        return self._groups[x]

    def cover_matrix(self, x: Element, y: Element) -> IntMatrix:
        return self._maps[(x, y)]

    def arrow(self, x: Element, y: Element) -> GroupMap:
        try:
            return self._arrows[(x, y)]
        except KeyError:
            raise PosetError(f"{x} is not below {y}") from None

    @property
    def elements(self) -> Tuple[Element, ...]:
        return self.base.elements

    def is_zero(self) -> bool:
        return all(self._groups[x].is_zero() for x in self.elements)

    def is_locally_constant(self) -> bool:
        """Every cover map is an isomorphism."""
        return all(
            GroupMap(*self._ends(x, y), m).is_isomorphism() for (x, y), m in self._maps.items()
        )

    def total_gens(self) -> int:
        return sum(g.ngens for g in self._groups.values())

    def has_free_stalks(self) -> bool:
        return all(g.is_free() for g in self._groups.values())

    def __repr__(self) -> str:
        inner = ", ".join(f"{x}: {self._groups[x]}" for x in self.elements)
        return f"{type(self).__name__}({inner})"


class Sheaf(_FunctorData):
    covariant = True
    kind = "sheaf"

    def stalk(self, x: Element) -> FgAbGroup:
        return self.group(x)

    @property
    def stalks(self) -> Dict[Element, FgAbGroup]:
        return dict(self._groups)

    def restriction(self, x: Element, y: Element) -> GroupMap:
        """ρ_{x→y}: F_x → F_y for x ≤ y."""
        return self.arrow(x, y)

    def restrict(self, s: Iterable[Element]) -> "Sheaf":
        """F|_S on the induced subposet."""
        sub = self.base.subposet(s)
        return Sheaf(
            sub,
            {x: self._groups[x] for x in sub.elements},
            {(x, y): self.restriction(x, y).matrix for x, y in sub.covers},
        )


class Cosheaf(_FunctorData):
    covariant = False
    kind = "cosheaf"

    def value(self, x: Element) -> FgAbGroup:
        return self.group(x)

    @property
    def values(self) -> Dict[Element, FgAbGroup]:
        return dict(self._groups)

    def corestriction(self, x: Element, y: Element) -> GroupMap:
        """e_{y→x}: Q_y → Q_x for x ≤ y."""
        return self.arrow(x, y)

    def restrict(self, s: Iterable[Element]) -> "Cosheaf":
        sub = self.base.subposet(s)
        return Cosheaf(
            sub,
            {x: self._groups[x] for x in sub.elements},
            {(x, y): self.corestriction(x, y).matrix for x, y in sub.covers},
        )


# constructors


def constant_sheaf(p: FinitePoset, g: FgAbGroup) -> Sheaf:
    ident = IntMatrix.identity(g.ngens)
    return Sheaf(p, {x: g for x in p.elements}, {c: ident for c in p.covers})


def zero_sheaf(p: FinitePoset) -> Sheaf:
    return constant_sheaf(p, FgAbGroup.zero())


def _zero_outside(
    p: FinitePoset, inside: Subset, stalk: Mapping[Element, FgAbGroup], arrow
) -> Tuple[Dict[Element, FgAbGroup], Dict[Cover, IntMatrix]]:
    zero = FgAbGroup.zero()
    groups = {x: stalk[x] if x in inside else zero for x in p.elements}
    maps = {}
    for x, y in p.covers:
        if x in inside and y in inside:
            maps[(x, y)] = arrow(x, y)
        else:
            maps[(x, y)] = IntMatrix.zeros(groups[y].ngens, groups[x].ngens)
    return groups, maps


def extension_by_zero(p: FinitePoset, u: Iterable[Element], f: Sheaf) -> Sheaf:
    """j_!F for the open u; F may live on u itself or on all of p."""
    u = p.check_open(u)
    for x in u:
        if x not in f.base:
            raise SheafError(f"sheaf has no stalk at {x}")
    return Sheaf(p, *_zero_outside(p, u, f.stalks, lambda x, y: f.restriction(x, y).matrix))


def skyscraper(p: FinitePoset, x: Element, g: FgAbGroup) -> Sheaf:
    """i_{x*}G: stalk G on the closure of x, identity maps inside it."""
    closure = p.closure(x)
    ident = IntMatrix.identity(g.ngens)
    return Sheaf(p, *_zero_outside(p, closure, {y: g for y in closure}, lambda a, b: ident))


def _stalk_limit(f: Sheaf, s: Iterable[Element]) -> Cone:
    """Limit of the stalks of f over the subset s, along its induced order."""
    sub = f.base.subposet(s)
    d = Diagram()
    for x in sub.elements:
        d.add_object(x, f.stalk(x))
    for x, y in sub.sorted_covers:
        d.add_arrow(x, y, f.restriction(x, y))
    return limit(d)


def sections(f: Sheaf, u: Iterable[Element]) -> FgAbGroup:
    """Γ(U, F) for an open U."""
    u = f.base.check_open(u)
    return _stalk_limit(f, u).group


def closed_restriction(p: FinitePoset, y: Iterable[Element], f: Sheaf) -> Sheaf:
    """F_Y = i_* i^{-1} F for the closed Y; (F_Y)_x = Γ(U_x ∩ Y, F|_Y)."""
    y = p.check_closed(y)
    cones = {x: _stalk_limit(f, p.minimal_open(x) & y) for x in p.elements}
    maps = {}
    for x, x2 in p.covers:
        legs = {z: cones[x].legs[z] for z in cones[x2].legs}
        maps[(x, x2)] = cones[x2].factor(legs, cones[x].group).matrix
    return Sheaf(p, {x: cones[x].group for x in p.elements}, maps)


def restriction_to_closed(p: FinitePoset, y: Iterable[Element], f: Sheaf) -> "SheafMorphism":
    """The unit F → F_Y, stalkwise the cone of restrictions into U_x ∩ Y."""
    y = p.check_closed(y)
    fy = closed_restriction(p, y, f)
    components = {}
    for x in p.elements:
        cone = _stalk_limit(f, p.minimal_open(x) & y)
        legs = {z: f.restriction(x, z) for z in cone.legs}
        components[x] = cone.factor(legs, f.stalk(x)).matrix
    return SheafMorphism(f, fy, components)


def extension_by_zero_inclusion(
    p: FinitePoset, u: Iterable[Element], f: Sheaf
) -> "SheafMorphism":
    """F_U → F for the open U; identity on U."""
    u = p.check_open(u)
    fu = extension_by_zero(p, u, f)
    components = {
        x: IntMatrix.identity(f.stalk(x).ngens)
        if x in u
        else IntMatrix.zeros(f.stalk(x).ngens, 0)
        for x in p.elements
    }
    return SheafMorphism(fu, f, components)


def closed_restriction_map(
    p: FinitePoset, big: Iterable[Element], small: Iterable[Element], f: Sheaf
) -> "SheafMorphism":
    """F_Y → F_Z for closed Z ⊆ Y."""
    big, small = p.check_closed(big), p.check_closed(small)
    if not small <= big:
        raise PosetError("the smaller closed set is not contained in the larger one")
    components = {}
    for x in p.elements:
        outer = _stalk_limit(f, p.minimal_open(x) & big)
        inner = _stalk_limit(f, p.minimal_open(x) & small)
        legs = {z: outer.legs[z] for z in inner.legs}
        components[x] = inner.factor(legs, outer.group).matrix
    return SheafMorphism(
        closed_restriction(p, big, f), closed_restriction(p, small, f), components
    )


def inverse_image(fmap: MonotoneMap, f: Sheaf) -> Sheaf:
    p = fmap.source
    return Sheaf(
        p,
        {x: f.stalk(fmap(x)) for x in p.elements},
        {(x, y): f.restriction(fmap(x), fmap(y)).matrix for x, y in p.covers},
    )


def _check_same_base(f: _FunctorData, g: _FunctorData) -> None:
    if f.base != g.base:
        raise SheafError(f"{f.kind}s live on different posets")


def tensor(f: Sheaf, g: Sheaf) -> Sheaf:
    """Stalkwise tensor product on generator pairs (i of F, j of G) ↦ i·|G| + j."""
    _check_same_base(f, g)
    return Sheaf(
        f.base,
        {x: tensor_presentation(f.stalk(x), g.stalk(x)) for x in f.elements},
        {
            (x, y): f.cover_matrix(x, y).kron(g.cover_matrix(x, y))
            for x, y in f.base.covers
        },
    )


def direct_sum(f: Sheaf, g: Sheaf) -> Sheaf:
    _check_same_base(f, g)
    return Sheaf(
        f.base,
        {x: FgAbGroup.direct_sum([f.stalk(x), g.stalk(x)]) for x in f.elements},
        {
            (x, y): IntMatrix.block_diagonal([f.cover_matrix(x, y), g.cover_matrix(x, y)])
            for x, y in f.base.covers
        },
    )


def free_sheaf(p: FinitePoset, anchors: Sequence[Element]) -> Sheaf:
    """⊕_j ℤ_{U_{anchors[j]}}; the stalk at y has one generator per anchor ≤ y."""
    index = {y: [j for j, a in enumerate(anchors) if p.le(a, y)] for y in p.elements}
    maps = {}
    for x, y in p.covers:
        pos = {j: i for i, j in enumerate(index[y])}
        rows = [[0] * len(index[x]) for _ in index[y]]
        for k, j in enumerate(index[x]):
            rows[pos[j]][k] = 1
        maps[(x, y)] = IntMatrix.from_rows(rows, len(index[x]))
    return Sheaf(p, {y: FgAbGroup.free(len(index[y])) for y in p.elements}, maps)


# morphisms


class SheafMorphism:
    """Per-element maps φ_x: F_x → G_x commuting with the cover maps."""

    def __init__(
        self, source: Sheaf, target: Sheaf, components: Mapping[Element, IntMatrix]
    ) -> None:
        _check_same_base(source, target)
        self.source = source
        self.target = target
        self._components: Dict[Element, GroupMap] = {}
        for x in source.elements:
            m = components.get(x)
            if m is None:
                m = IntMatrix.zeros(target.stalk(x).ngens, source.stalk(x).ngens)
            try:
                g = GroupMap(source.stalk(x), target.stalk(x), m)
            except ShapeError as e:
                raise SheafError(f"component at {x}: {e}") from e
            if not g.is_well_defined():
                raise SheafError(f"component at {x} does not respect relations")
            self._components[x] = g
        for x, y in source.base.sorted_covers:
            lhs = target.restriction(x, y) @ self._components[x]
            rhs = self._components[y] @ source.restriction(x, y)
            if not lhs.equals(rhs):
                raise SheafError(f"naturality fails on {cover_name(x, y)}")

    @property
    def base(self) -> FinitePoset:
        return self.source.base

    def component(self, x: Element) -> GroupMap:
        return self._components[x]

    def compose(self, other: "SheafMorphism") -> "SheafMorphism":
        """self ∘ other"""
        return SheafMorphism(
            other.source,
            self.target,
            {x: (self.component(x) @ other.component(x)).matrix for x in self.base.elements},
        )

    def is_zero(self) -> bool:
        return all(self.component(x).is_zero() for x in self.base.elements)

    def is_isomorphism(self) -> bool:
        return all(self.component(x).is_isomorphism() for x in self.base.elements)

    def kernel(self) -> Tuple[Sheaf, "SheafMorphism"]:
        incl = {x: self.component(x).kernel() for x in self.base.elements}
        return self._subsheaf(incl, self.source)

    def image(self) -> Tuple[Sheaf, "SheafMorphism"]:
        incl = {x: self.component(x).image() for x in self.base.elements}
        return self._subsheaf(incl, self.target)

    def _subsheaf(
        self, incl: Mapping[Element, GroupMap], ambient: Sheaf
    ) -> Tuple[Sheaf, "SheafMorphism"]:
        maps = {}
        for x, y in self.base.covers:
            lifted = incl[y].lift(ambient.restriction(x, y) @ incl[x])
            if lifted is None:
                raise SheafError(f"subgroups are not compatible along {cover_name(x, y)}")
            maps[(x, y)] = lifted.matrix
        sub = Sheaf(self.base, {x: incl[x].source for x in self.base.elements}, maps)
        return sub, SheafMorphism(sub, ambient, {x: incl[x].matrix for x in self.base.elements})

    def cokernel(self) -> Tuple[Sheaf, "SheafMorphism"]:
        proj = {x: self.component(x).cokernel() for x in self.base.elements}
        quotient = Sheaf(
            self.base,
            {x: proj[x].target for x in self.base.elements},
            {c: self.target.cover_matrix(*c) for c in self.base.covers},
        )
        return quotient, SheafMorphism(
            self.target, quotient, {x: proj[x].matrix for x in self.base.elements}
        )


def identity_morphism(f: Sheaf) -> SheafMorphism:
    return SheafMorphism(f, f, {x: IntMatrix.identity(f.stalk(x).ngens) for x in f.elements})


def tensor_morphism(
    phi: SheafMorphism,
    psi: SheafMorphism,
    source: Optional[Sheaf] = None,
    target: Optional[Sheaf] = None,
) -> SheafMorphism:
    """φ ⊗ ψ, stalkwise Kronecker products."""
    return SheafMorphism(
        source or tensor(phi.source, psi.source),
        target or tensor(phi.target, psi.target),
        {
            x: phi.component(x).matrix.kron(psi.component(x).matrix)
            for x in phi.base.elements
        },
    )


def inverse_image_morphism(fmap: MonotoneMap, phi: SheafMorphism) -> SheafMorphism:
    return SheafMorphism(
        inverse_image(fmap, phi.source),
        inverse_image(fmap, phi.target),
        {x: phi.component(fmap(x)).matrix for x in fmap.source.elements},
    )


def sections_morphism(
    f: Sheaf, sections: Sequence[Tuple[Element, Sequence[int]]]
) -> SheafMorphism:
    """⊕_j ℤ_{U_{x_j}} → F sending the j-th generator to the local section s_j ∈ F_{x_j}."""
    p = f.base
    anchors = [x for x, _ in sections]
    free = free_sheaf(p, anchors)
    components = {}
    for y in p.elements:
        cols = [
            f.restriction(x, y)(s) for x, s in sections if p.le(x, y)
        ]
        components[y] = IntMatrix.from_columns(cols, f.stalk(y).ngens)
    return SheafMorphism(free, f, components)


def generated_subsheaf(
    f: Sheaf, sections: Sequence[Tuple[Element, Sequence[int]]]
) -> Tuple[Sheaf, SheafMorphism]:
    """The smallest sub-sheaf containing the given local sections."""
    return sections_morphism(f, sections).image()


class CosheafMorphism:
    """Per-element maps ψ_x: Q_x → Q'_x commuting with the corestrictions."""

    def __init__(
        self, source: Cosheaf, target: Cosheaf, components: Mapping[Element, IntMatrix]
    ) -> None:
        _check_same_base(source, target)
        self.source = source
        self.target = target
        self._components: Dict[Element, GroupMap] = {}
        for x in source.elements:
            src, dst = source.value(x), target.value(x)
            m = components.get(x)
            if m is None:
                if src.ngens and dst.ngens:
                    raise SheafError(f"component at {x} is missing")
                m = IntMatrix.zeros(dst.ngens, src.ngens)
            try:
                g = GroupMap(src, dst, m)
            except ShapeError as e:
                raise SheafError(f"component at {x}: {e}") from e
            if not g.is_well_defined():
                raise SheafError(f"component at {x} does not respect relations")
            self._components[x] = g
        for x, y in source.base.sorted_covers:
            lhs = self._components[x] @ source.corestriction(x, y)
            rhs = target.corestriction(x, y) @ self._components[y]
            if not lhs.equals(rhs):
                raise SheafError(f"naturality fails on {cover_name(y, x)}")

    def component(self, x: Element) -> GroupMap:
        return self._components[x]


# cosheaves


def constant_cosheaf(p: FinitePoset, g: FgAbGroup) -> Cosheaf:
    """G^cos: value G on every minimal open, identity corestrictions."""
    ident = IntMatrix.identity(g.ngens)
    return Cosheaf(p, {x: g for x in p.elements}, {c: ident for c in p.covers})


def cosheaf_cocone(q: Cosheaf, u: Iterable[Element]) -> Cocone:
    """Q(U) as the colimit of Q_x over x ∈ U along the corestrictions."""
    u = q.base.check_open(u)
    d = Diagram()
    for x in q.base.sort(u):
        d.add_object(x, q.value(x))
    for x, y in q.base.sorted_covers:
        if x in u and y in u:
            d.add_arrow(y, x, q.corestriction(x, y))
    return colimit(d)


def cosheaf_value(q: Cosheaf, u: Iterable[Element]) -> FgAbGroup:
    return cosheaf_cocone(q, u).group


def cosheaf_map(q: Cosheaf, v: Subset, w: Subset) -> GroupMap:
    """Q(V) → Q(W) for opens V ⊆ W."""
    cv, cw = cosheaf_cocone(q, v), cosheaf_cocone(q, w)
    return cv.factor({x: cw.legs[x] for x in cv.legs}, cw.group)


def cosheaf_extension_by_zero(p: FinitePoset, u: Iterable[Element], q: Cosheaf) -> Cosheaf:
    """j_!Q for the open u and a cosheaf on u: V ↦ Q(V ∩ U)."""
    u = p.check_open(u)
    cocones = {x: cosheaf_cocone(q, p.minimal_open(x) & u) for x in p.elements}
    maps = {}
    for x, y in p.covers:
        cy, cx = cocones[y], cocones[x]
        maps[(x, y)] = cy.factor({z: cx.legs[z] for z in cy.legs}, cx.group).matrix
    return Cosheaf(p, {x: cocones[x].group for x in p.elements}, maps)


def cosheaf_direct_sum(q: Cosheaf, r: Cosheaf) -> Cosheaf:
    _check_same_base(q, r)
    return Cosheaf(
        q.base,
        {x: FgAbGroup.direct_sum([q.value(x), r.value(x)]) for x in q.elements},
        {
            (x, y): IntMatrix.block_diagonal([q.cover_matrix(x, y), r.cover_matrix(x, y)])
            for x, y in q.base.covers
        },
    )


def cosections_cocone(f: Sheaf, u: Subset) -> Cocone:
    d = Diagram()
    for x in f.base.sort(u):
        d.add_object(x, f.stalk(x))
    for x, y in f.base.sorted_covers:
        if x in u and y in u:
            d.add_arrow(x, y, f.restriction(x, y))
    return colimit(d)


def cos(f: Sheaf) -> Cosheaf:
    """The cosheaf of cosections: U ↦ L(U, F|_U); its value at x is the
    colimit of F over U_x."""
    p = f.base
    cocones = {x: cosections_cocone(f, p.minimal_open(x)) for x in p.elements}
    maps = {}
    for x, y in p.covers:
        cy, cx = cocones[y], cocones[x]
        maps[(x, y)] = cy.factor({z: cx.legs[z] for z in cy.legs}, cx.group).matrix
    return Cosheaf(p, {x: cocones[x].group for x in p.elements}, maps)


def _connected_opens_cone(q: Cosheaf, x: Element) -> Cone:
    p = q.base
    opens = p.connected_opens(p.minimal_open(x))
    d = Diagram()
    for v in opens:
        d.add_object(v, cosheaf_value(q, v))
    for v in opens:
        for w in opens:
            if v < w:
                d.add_arrow(v, w, cosheaf_map(q, v, w))
    return limit(d)


def shf(q: Cosheaf) -> Sheaf:
    """The sheaf with stalk at x the limit of Q(V) over all connected opens
    V ⊆ U_x, ordered by inclusion."""
    p = q.base
    if len(p) > SHF_WARN_ELEMENTS:
        logger.warning(
            "shf enumerates every connected open of each U_x; %d elements may be slow",
            len(p),
        )
    cones = {x: _connected_opens_cone(q, x) for x in p.elements}
    maps = {}
    for x, y in p.covers:
        cx, cy = cones[x], cones[y]
        maps[(x, y)] = cy.factor({v: cx.legs[v] for v in cy.legs}, cx.group).matrix
    logger.debug("shf built stalks over %d elements", len(p))
    return Sheaf(p, {x: cones[x].group for x in p.elements}, maps)


# morphism groups


def _natural_transformations(
    elements: Sequence[Element],
    source: Mapping[Element, FgAbGroup],
    target: Mapping[Element, FgAbGroup],
    arrows: Sequence[Tuple[Element, Element, IntMatrix, IntMatrix]],
) -> FgAbGroup:
    """Families Φ_u ∈ Hom(S_u, T_u) with T(a)·Φ_u = Φ_v·S(a) for arrows a: u → v.

    Φ_u is stored column-major inside T_u^{ngens(S_u)}, matching `hom`.
    """
    offsets, k = {}, 0
    for u in elements:
        offsets[u] = k
        k += source[u].ngens * target[u].ngens
    ambient = FgAbGroup.direct_sum(
        [FgAbGroup.direct_sum([target[u]] * source[u].ngens) for u in elements]
    )
    rows: List[List[int]] = []
    out_groups: List[FgAbGroup] = []
    for u in elements:
        reduced = column_span_basis(source[u].relations)
        block = reduced.T.kron(IntMatrix.identity(target[u].ngens))
        for r in block.data:
            row = [0] * k
            row[offsets[u] : offsets[u] + len(r)] = r
            rows.append(row)
        out_groups.extend([target[u]] * reduced.cols)
    for u, v, s_map, t_map in arrows:
        a_u = source[u].ngens
        nb_v = target[v].ngens
        post = IntMatrix.identity(a_u).kron(t_map)
        pre = s_map.T.kron(IntMatrix.identity(nb_v))
        for i in range(a_u * nb_v):
            row = [0] * k
            for j, val in enumerate(post.row(i)):
                row[offsets[u] + j] += val
            for j, val in enumerate(pre.row(i)):
                row[offsets[v] + j] -= val
            rows.append(row)
        out_groups.extend([target[v]] * a_u)
    constraint = GroupMap(
        ambient, FgAbGroup.direct_sum(out_groups), IntMatrix.from_rows(rows, k)
    )
    return constraint.kernel().source


def morphism_group(f: Sheaf, g: Sheaf) -> FgAbGroup:
    """Hom_Shv(F, G) as a group."""
    _check_same_base(f, g)
    arrows = [
        (x, y, f.cover_matrix(x, y), g.cover_matrix(x, y)) for x, y in f.base.sorted_covers
    ]
    return _natural_transformations(f.elements, f.stalks, g.stalks, arrows)


def cosheaf_morphism_group(q: Cosheaf, r: Cosheaf) -> FgAbGroup:
    """Hom_Coshv(Q, R) as a group; naturality on minimal opens suffices."""
    _check_same_base(q, r)
    arrows = [
        (y, x, q.cover_matrix(x, y), r.cover_matrix(x, y)) for x, y in q.base.sorted_covers
    ]
    return _natural_transformations(q.elements, q.values, r.values, arrows)


# complexes


def _same_shape(f: Sheaf, g: Optional[Sheaf]) -> bool:
    return g is not None and all(
        f.stalk(x).ngens == g.stalk(x).ngens for x in f.elements
    )


class SheafComplex:
    """A bounded complex of sheaves in cohomological degrees, d^p: K^p → K^{p+1}.

    `global_sections`, when given, is the cochain complex Γ(X, K^•) (chain
    degree −p) of a complex whose terms have no higher cohomology; the
    cohomology of such a complex is read off it directly.
    """

    def __init__(
        self,
        base: FinitePoset,
        terms: Mapping[int, Sheaf],
        differentials: Mapping[int, SheafMorphism],
        global_sections: Optional[ChainComplex] = None,
    ) -> None:
        self.base = base
        self.terms = dict(sorted(terms.items()))
        self.differentials = dict(differentials)
        self.global_sections = global_sections
        for p, d in self.differentials.items():
            if not (_same_shape(d.source, self.terms.get(p))
                    and _same_shape(d.target, self.terms.get(p + 1))):
                raise SheafError(f"differential in degree {p} does not connect the terms")
        for p in self.differentials:
            if p + 1 in self.differentials:
                composite = self.differentials[p + 1].compose(self.differentials[p])
                if not composite.is_zero():
                    raise SheafError(f"d^{p + 1} ∘ d^{p} is not zero")

    @property
    def degrees(self) -> List[int]:
        return list(self.terms)

    def term(self, p: int) -> Sheaf:
        return self.terms.get(p) or zero_sheaf(self.base)

    def stalk_complex(self, x: Element) -> ChainComplex:
        """The complex of stalks at x, in chain degrees −p."""
        groups = {-p: k.stalk(x) for p, k in self.terms.items()}
        boundaries = {
            -p: d.component(x).matrix for p, d in self.differentials.items()
        }
        return ChainComplex(groups, boundaries)

    def stalk_map(self, x: Element, y: Element):
        """The chain map of stalk complexes x → y given by the restrictions."""
        return ChainMap(
            self.stalk_complex(x),
            self.stalk_complex(y),
            {-p: k.restriction(x, y).matrix for p, k in self.terms.items()},
        )

    def extension_by_zero(self, u: Iterable[Element]) -> "SheafComplex":
        """ℤ_U ⊗ K, degreewise."""
        u = self.base.check_open(u)
        terms = {
            p: extension_by_zero(self.base, u, k) for p, k in self.terms.items()
        }
        diffs = {
            p: SheafMorphism(
                terms[p],
                terms[p + 1],
                {
                    x: d.component(x).matrix if x in u else IntMatrix.zeros(
                        terms[p + 1].stalk(x).ngens, terms[p].stalk(x).ngens
                    )
                    for x in self.base.elements
                },
            )
            for p, d in self.differentials.items()
        }
        return SheafComplex(self.base, terms, diffs)

    def restrict(self, s: Iterable[Element]) -> "SheafComplex":
        sub = self.base.subposet(s)
        terms = {p: k.restrict(sub.elements) for p, k in self.terms.items()}
        diffs = {
            p: SheafMorphism(
                terms[p], terms[p + 1], {x: d.component(x).matrix for x in terms[p].elements}
            )
            for p, d in self.differentials.items()
        }
        return SheafComplex(sub, terms, diffs)
