#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: poset.py
# @Created:   2026-09-07 09:30:12
# @Modified:  2026-10-15 17:44:03

"""Finite T0 spaces as posets.

Opens are UP-sets: the smallest open containing x is U_x = {y : y ≥ x}, so
maximal elements are open points and minimal elements are closed points.
Closed sets are down-sets. The input order of the elements fixes every
matrix row and column ordering downstream.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Tuple,
)

import networkx as nx

from .errors import PosetError
from .log import child_logger

logger = child_logger(__name__)

Element = str
Chain = Tuple[Element, ...]
Subset = FrozenSet[Element]


@dataclass
class ValidationReport:
    """Violations found by `FinitePoset.validate`; empty means valid."""

    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ok" if self.ok else "; ".join(self.violations)


@dataclass(frozen=True)
class FinitePoset:
    elements: Tuple[Element, ...]
    covers: FrozenSet[Tuple[Element, Element]]

    @classmethod
    def build(
        cls, elements: Iterable[Element], covers: Iterable[Tuple[Element, Element]]
    ) -> "FinitePoset":
        """Construct and validate; raises PosetError naming every violation."""
        p = cls(tuple(elements), frozenset((x, y) for x, y in covers))
        report = p.validate()
        if not report:
            raise PosetError(str(report))
        return p

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        seen = set()
        for x in self.elements:
            if x in seen:
                report.violations.append(f"duplicate element {x!r}")
            seen.add(x)
        for x, y in sorted(self.covers):
            for z in (x, y):
                if z not in seen:
                    report.violations.append(f"unknown element {z!r} in cover ({x}, {y})")
            if x == y:
                report.violations.append(f"cycle: self-cover ({x}, {y})")
        if not report.ok:
            return report

        g = self.hasse
        if not nx.is_directed_acyclic_graph(g):
            cycle = nx.find_cycle(g)
            path = " -> ".join([u for u, _ in cycle] + [cycle[0][0]])
            report.violations.append(f"cycle: {path}")
            return report

        reduced = nx.transitive_reduction(g)
        for x, y in sorted(self.covers, key=self._edge_key):
            if not reduced.has_edge(x, y):
                report.violations.append(f"non-Hasse edge ({x}, {y})")
        return report

    @cached_property
    def index(self) -> Dict[Element, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def _edge_key(self, edge: Tuple[Element, Element]) -> Tuple[int, int]:
        return self.index[edge[0]], self.index[edge[1]]

    @cached_property
    def hasse(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(sorted(self.covers, key=self._edge_key))
        return g

    @cached_property
    def order(self) -> nx.DiGraph:
        """Strict order as a DAG: an edge x → y for every x < y."""
        return nx.transitive_closure_dag(self.hasse)

    @cached_property
    def sorted_covers(self) -> List[Tuple[Element, Element]]:
        return sorted(self.covers, key=self._edge_key)

    @cached_property
    def linear_extension(self) -> List[Element]:
        """Topological order, ties broken by input order."""
        return list(nx.lexicographical_topological_sort(self.hasse, key=self.index.get))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def check_element(self, x: Element) -> None:
        if x not in self.index:
            raise PosetError(f"unknown element {x!r}")

    def sort(self, s: Iterable[Element]) -> List[Element]:
        """Elements of `s` in input order."""
        return sorted(s, key=self.index.__getitem__)

    def le(self, x: Element, y: Element) -> bool:
        return x == y or self.order.has_edge(x, y)

    def lt(self, x: Element, y: Element) -> bool:
        return self.order.has_edge(x, y)

    def up_set(self, x: Element) -> Subset:
        self.check_element(x)
        return frozenset(self.order.successors(x)) | {x}

    def down_set(self, x: Element) -> Subset:
        self.check_element(x)
        return frozenset(self.order.predecessors(x)) | {x}

    def minimal_open(self, x: Element) -> Subset:
        """U_x, the smallest open containing x."""
        return self.up_set(x)

    def closure(self, x: Element) -> Subset:
        """The smallest closed set containing x."""
        return self.down_set(x)

    def lower_covers(self, x: Element) -> List[Element]:
        return self.sort(self.hasse.predecessors(x))

    def _check_subset(self, s: Iterable[Element]) -> Subset:
        s = frozenset(s)
        for x in s:
            self.check_element(x)
        return s

    def is_open(self, s: Iterable[Element]) -> bool:
        s = self._check_subset(s)
        return all(self.up_set(x) <= s for x in s)

    def is_closed(self, s: Iterable[Element]) -> bool:
        s = self._check_subset(s)
        return all(self.down_set(x) <= s for x in s)

    def check_open(self, s: Iterable[Element]) -> Subset:
        s = self._check_subset(s)
        if not self.is_open(s):
            raise PosetError(f"{{{', '.join(self.sort(s))}}} is not open")
        return s

    def check_closed(self, s: Iterable[Element]) -> Subset:
        s = self._check_subset(s)
        if not self.is_closed(s):
            raise PosetError(f"{{{', '.join(self.sort(s))}}} is not closed")
        return s

    def complement(self, s: Iterable[Element]) -> Subset:
        return frozenset(self.elements) - frozenset(s)

    def connected_components(self, s: Iterable[Element]) -> List[Subset]:
        """Components of the comparability graph restricted to `s`, ordered by
        their first element."""
        s = self._check_subset(s)
        sub = self.order.subgraph(s).to_undirected()
        comps = [frozenset(c) for c in nx.connected_components(sub)]
        return sorted(comps, key=lambda c: min(self.index[x] for x in c))

    def is_connected(self, s: Iterable[Element]) -> bool:
        return len(self.connected_components(s)) == 1

    def strict_chains(self, s: Iterable[Element], n: int) -> List[Chain]:
        """All chains x_0 < ... < x_n inside `s`.

        Ordered lexicographically by the input positions of their elements.
        """
        if n < 0:
            return []
        members = self.sort(self._check_subset(s))
        out: List[Chain] = []

        def extend(chain: List[Element]) -> None:
            if len(chain) == n + 1:
                out.append(tuple(chain))
                return
            last = chain[-1]
            for y in members:
                if self.lt(last, y):
                    chain.append(y)
                    extend(chain)
                    chain.pop()

        for x in members:
            extend([x])
        return out

    def all_chains(self, s: Iterable[Element]) -> Dict[int, List[Chain]]:
        s = self._check_subset(s)
        out = {}
        n = 0
        while True:
            chains = self.strict_chains(s, n)
            if not chains:
                return out
            out[n] = chains
            n += 1

    @cached_property
    def height(self) -> int:
        """Length of the longest chain (number of covers along it)."""
        if not self.elements:
            return -1
        return nx.dag_longest_path_length(self.hasse)

    def subposet(self, s: Iterable[Element]) -> "FinitePoset":
        """The induced order on `s`, with its own Hasse diagram."""
        s = self._check_subset(s)
        members = tuple(self.sort(s))
        reduced = nx.transitive_reduction(self.order.subgraph(members))
        return FinitePoset(members, frozenset(reduced.edges()))

    def open_sets(self) -> Iterator[Subset]:
        """Every open subset, the empty set included, in a fixed order."""
        for antichain in nx.antichains(self.order):
            yield frozenset().union(*(self.up_set(x) for x in antichain))

    def connected_opens(self, within: Iterable[Element]) -> List[Subset]:
        """Connected non-empty opens contained in the open `within`.

        Every open is the union of the minimal opens of its minimal elements,
        so these are enumerated through the antichains of `within`.
        """
        within = self.check_open(within)
        sub = self.order.subgraph(within)
        found = []
        seen = set()
        for antichain in nx.antichains(sub):
            if not antichain:
                continue
            u = frozenset().union(*(self.up_set(x) for x in antichain))
            if u in seen:
                continue
            seen.add(u)
            if self.is_connected(u):
                found.append(u)
        return sorted(found, key=lambda u: (len(u), sorted(self.index[x] for x in u)))

    def is_isomorphic(self, other: "FinitePoset") -> bool:
        return nx.is_isomorphic(self.hasse, other.hasse)


def pair_name(x: Element, y: Element) -> Element:
    return f"({x},{y})"


def product(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    """Componentwise order on p × q.

    Covers of a product are a cover in one factor paired with an element of
    the other, so the result is already in Hasse form.
    """
    elements = tuple(pair_name(x, y) for x in p.elements for y in q.elements)
    if len(set(elements)) != len(elements):
        seen: Dict[Element, Tuple[Element, Element]] = {}
        for x in p.elements:
            for y in q.elements:
                name = pair_name(x, y)
                if name in seen:
                    raise PosetError(
                        f"product names {seen[name]!r} and {(x, y)!r} both {name!r}"
                    )
                seen[name] = (x, y)
    covers = set()
    for x, x2 in p.covers:
        for y in q.elements:
            covers.add((pair_name(x, y), pair_name(x2, y)))
    for y, y2 in q.covers:
        for x in p.elements:
            covers.add((pair_name(x, y), pair_name(x, y2)))
    return FinitePoset(elements, frozenset(covers))


def suspension(p: FinitePoset, poles: Tuple[Element, Element] = ("+", "-")) -> FinitePoset:
    """Two new points above every point of p; the suspension of S^n is S^(n+1)."""
    for pole in poles:
        if pole in p:
            raise PosetError(f"pole {pole!r} is already an element")
    tops = [x for x in p.elements if not p.hasse.out_degree(x)]
    covers = set(p.covers) | {(x, pole) for x in tops for pole in poles}
    return FinitePoset.build((*p.elements, *poles), covers)


@dataclass(frozen=True)
class MonotoneMap:
    source: FinitePoset
    target: FinitePoset
    table: Mapping[Element, Element]

    def __call__(self, x: Element) -> Element:
        return self.table[x]

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted(self.table.items()))))

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        for x in self.source.elements:
            if x not in self.table:
                report.violations.append(f"no image for {x!r}")
            elif self.table[x] not in self.target:
                report.violations.append(f"image of {x!r} is not in the target")
        if not report.ok:
            return report
        for x, y in self.source.sorted_covers:
            if not self.target.le(self(x), self(y)):
                report.violations.append(
                    f"not monotone: {x} < {y} but {self(x)} is not below {self(y)}"
                )
        return report

    @classmethod
    def build(
        cls, source: FinitePoset, target: FinitePoset, table: Mapping[Element, Element]
    ) -> "MonotoneMap":
        f = cls(source, target, dict(table))
        report = f.validate()
        if not report:
            raise PosetError(str(report))
        return f

    @classmethod
    def identity(cls, p: FinitePoset) -> "MonotoneMap":
        return cls(p, p, {x: x for x in p.elements})

    @classmethod
    def constant(cls, source: FinitePoset, target: FinitePoset, y: Element) -> "MonotoneMap":
        target.check_element(y)
        return cls(source, target, {x: y for x in source.elements})

    @classmethod
    def inclusion(cls, p: FinitePoset, s: Iterable[Element]) -> "MonotoneMap":
        sub = p.subposet(s)
        return cls(sub, p, {x: x for x in sub.elements})

    def compose(self, other: "MonotoneMap") -> "MonotoneMap":
        """self ∘ other"""
        mapping = {x: self(other(x)) for x in other.source.elements}
        return MonotoneMap(other.source, self.target, mapping)

    def preimage(self, s: Iterable[Element]) -> Subset:
        s = frozenset(s)
        return frozenset(x for x in self.source.elements if self(x) in s)

    def is_below(self, other: "MonotoneMap") -> bool:
        """f ≤ g pointwise."""
        return all(self.target.le(self(x), other(x)) for x in self.source.elements)


def projections(p: FinitePoset, q: FinitePoset) -> Tuple[MonotoneMap, MonotoneMap]:
    pq = product(p, q)
    first = {pair_name(x, y): x for x in p.elements for y in q.elements}
    second = {pair_name(x, y): y for x in p.elements for y in q.elements}
    return MonotoneMap(pq, p, first), MonotoneMap(pq, q, second)


def point(name: Element = "*") -> FinitePoset:
    return FinitePoset((name,), frozenset())


def parse_subset(p: FinitePoset, text: str) -> Subset:
    """`a,b,c` → {a, b, c}; an empty string is the empty set."""
    names = [t.strip() for t in text.split(",") if t.strip()]
    return p._check_subset(names)
