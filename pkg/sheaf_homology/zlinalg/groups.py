#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: groups.py
# @Created:   2026-09-04 09:02:51
# @Modified:  2026-10-15 23:40:09

"""Finitely generated abelian groups given by presentations, and their maps.

A group with g generators and relation matrix R (g rows) is ℤ^g / colspan(R).
A map A → B is an integer matrix with B.ngens rows and A.ngens columns acting
on generator coordinates.
"""

import itertools

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from ..errors import ShapeError, SheafHomologyError
from .matrix import (
    IntMatrix,
    SmithDecomposition,
    Vector,
    column_span_basis,
    kernel_basis,
    smith_decomposition,
    solve_integer,
    solve_matrix,
)


class Invariants(NamedTuple):
    rank: int
    torsion: Tuple[int, ...]


def render_invariants(rank: int, torsion: Sequence[int]) -> str:
    parts = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append(f"Z^{rank}")
    parts.extend(f"Z/{d}" for d in sorted(torsion))
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class FgAbGroup:
    relations: IntMatrix

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(IntMatrix.zeros(rank, 0))

    @classmethod
    def zero(cls) -> "FgAbGroup":
        return cls.free(0)

    @classmethod
    def cyclic(cls, order: int) -> "FgAbGroup":
        """ℤ/order; order 0 gives ℤ."""
        if order == 0:
            return cls.free(1)
        return cls(IntMatrix.from_rows([[order]]))

    @classmethod
    def from_invariants(cls, rank: int, torsion: Sequence[int] = ()) -> "FgAbGroup":
        """Free generators first, then one generator per torsion coefficient."""
        torsion = [int(d) for d in torsion]
        for d in torsion:
            if d < 1:
                raise SheafHomologyError(f"torsion coefficient {d} must be positive")
        n = rank + len(torsion)
        cols = []
        for k, d in enumerate(torsion):
            col = [0] * n
            col[rank + k] = d
            cols.append(col)
        return cls(IntMatrix.from_columns(cols, n))

    @staticmethod
    def direct_sum(groups: Sequence["FgAbGroup"]) -> "FgAbGroup":
        return FgAbGroup(IntMatrix.block_diagonal([g.relations for g in groups]))

    @property
    def ngens(self) -> int:
        return self.relations.rows

    @cached_property
    def smith(self) -> SmithDecomposition:
        return smith_decomposition(self.relations)

    @cached_property
    def _moduli(self) -> Tuple[int, ...]:
        """Per normal-form coordinate: 1 (trivial), d ≥ 2 (torsion) or 0 (free)."""
        diag = self.smith.diagonal
        return tuple(diag[i] if i < self.smith.rank else 0 for i in range(self.ngens))

    @cached_property
    def invariants(self) -> Invariants:
        rank = sum(1 for d in self._moduli if d == 0)
        torsion = tuple(d for d in self._moduli if d > 1)
        return Invariants(rank, torsion)

    @property
    def rank(self) -> int:
        return self.invariants.rank

    @property
    def torsion(self) -> Tuple[int, ...]:
        return self.invariants.torsion

    def is_zero(self) -> bool:
        return self.invariants == (0, ())

    def is_free(self) -> bool:
        return not self.torsion

    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> Optional[int]:
        """Number of elements, None for infinite groups."""
        if not self.is_finite():
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def is_isomorphic(self, other: "FgAbGroup") -> bool:
        return self.invariants == other.invariants

    def canonical(self, vector: Sequence[int]) -> Vector:
        """Normal-form coordinates of an element: torsion parts reduced, then free.

        Two vectors describe the same element exactly when their canonical
        coordinates agree.
        """
        if len(vector) != self.ngens:
            raise ShapeError(
                f"element of length {len(vector)} in a group on {self.ngens} generators"
            )
        c = self.smith.u.apply(vector)
        out = []
        for ci, d in zip(c, self._moduli):
            if d == 1:
                continue
            out.append(ci % d if d else ci)
        return tuple(out)

    def is_zero_element(self, vector: Sequence[int]) -> bool:
        return not any(self.canonical(vector))

    def equal_elements(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.is_zero_element([x - y for x, y in zip(a, b)])

    def generator_vectors(self) -> List[Vector]:
        """Representatives of the normal-form generators, in `canonical` order."""
        u_inv = self.smith.u_inv
        return [u_inv.column(i) for i, d in enumerate(self._moduli) if d != 1]

    def element_from_canonical(self, coords: Sequence[int]) -> Vector:
        gens = self.generator_vectors()
        if len(coords) != len(gens):
            raise ShapeError("wrong number of normal-form coordinates")
        out = [0] * self.ngens
        for k, g in zip(coords, gens):
            if k:
                for i, v in enumerate(g):
                    out[i] += k * v
        return tuple(out)

    def elements(self) -> Iterator[Vector]:
        """Every element of a finite group, once, as generator vectors."""
        if not self.is_finite():
            raise SheafHomologyError(f"cannot enumerate the infinite group {self}")
        ranges = [range(d) for d in self._moduli if d != 1]
        for coords in itertools.product(*ranges):
            yield self.element_from_canonical(coords)

    def __str__(self) -> str:
        return render_invariants(self.rank, self.torsion)


def normalize(relations: IntMatrix) -> FgAbGroup:
    """The group presented by `relations`, with its invariant factors computed."""
    group = FgAbGroup(relations)
    group.invariants
    return group


def subquotient(span: IntMatrix, quotient: IntMatrix) -> Tuple[FgAbGroup, IntMatrix]:
    """colspan(span) / colspan(quotient) for quotient ⊆ span, inside ℤ^n.

    Returns the group together with the basis of colspan(span) its generators
    stand for.
    """
    basis = column_span_basis(span)
    if quotient.cols == 0:
        rel = IntMatrix.zeros(basis.cols, 0)
    else:
        solved = solve_matrix(basis, quotient)
        if solved is None:
            raise SheafHomologyError("quotient is not contained in the span")
        rel = solved
    return FgAbGroup(rel), basis


@dataclass(frozen=True)
class GroupMap:
    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self) -> None:
        if (self.matrix.rows, self.matrix.cols) != (self.target.ngens, self.source.ngens):
            raise ShapeError(
                f"map matrix is {self.matrix.rows}x{self.matrix.cols}, "
                f"expected {self.target.ngens}x{self.source.ngens}"
            )

    @classmethod
    def identity(cls, group: FgAbGroup) -> "GroupMap":
        return cls(group, group, IntMatrix.identity(group.ngens))

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> "GroupMap":
        return cls(source, target, IntMatrix.zeros(target.ngens, source.ngens))

    def bad_relation(self) -> Optional[int]:
        """Index of a source relation not sent into the target relations."""
        images = self.matrix @ self.source.relations
        for j, col in enumerate(images.columns()):
            if not self.target.is_zero_element(col):
                return j
        return None

    def is_well_defined(self) -> bool:
        return self.bad_relation() is None

    def __call__(self, vector: Sequence[int]) -> Vector:
        return self.matrix.apply(vector)

    def compose(self, other: "GroupMap") -> "GroupMap":
        """self ∘ other"""
        if other.target.ngens != self.source.ngens:
            raise ShapeError("maps are not composable")
        return GroupMap(other.source, self.target, self.matrix @ other.matrix)

    def __matmul__(self, other: "GroupMap") -> "GroupMap":
        return self.compose(other)

    def __add__(self, other: "GroupMap") -> "GroupMap":
        return GroupMap(self.source, self.target, self.matrix + other.matrix)

    def __neg__(self) -> "GroupMap":
        return GroupMap(self.source, self.target, -self.matrix)

    def __sub__(self, other: "GroupMap") -> "GroupMap":
        return self + (-other)

    def is_zero(self) -> bool:
        return all(self.target.is_zero_element(c) for c in self.matrix.columns())

    def equals(self, other: "GroupMap") -> bool:
        return (self - other).is_zero()

    def kernel(self) -> "GroupMap":
        """The inclusion of ker(self) into the source."""
        a, b = self.source, self.target
        combined = IntMatrix.hstack([self.matrix, b.relations], rows=b.ngens)
        k = kernel_basis(combined)
        preimage = k.submatrix(range(a.ngens), range(k.cols))
        group, basis = subquotient(
            IntMatrix.hstack([preimage, a.relations], rows=a.ngens), a.relations
        )
        return GroupMap(group, a, basis)

    def cokernel(self) -> "GroupMap":
        """The projection of the target onto coker(self)."""
        b = self.target
        group = FgAbGroup(IntMatrix.hstack([b.relations, self.matrix], rows=b.ngens))
        return GroupMap(b, group, IntMatrix.identity(b.ngens))

    def image(self) -> "GroupMap":
        """The inclusion of im(self) into the target."""
        b = self.target
        group, basis = subquotient(
            IntMatrix.hstack([self.matrix, b.relations], rows=b.ngens), b.relations
        )
        return GroupMap(group, b, basis)

    def lift(self, other: "GroupMap") -> Optional["GroupMap"]:
        """The map x with self ∘ x = other, for injective self; None if other
        does not factor through the image of self."""
        if other.target.ngens != self.target.ngens:
            raise ShapeError("maps do not share a target")
        b = self.target
        combined = IntMatrix.hstack([self.matrix, b.relations], rows=b.ngens)
        solved = solve_matrix(combined, other.matrix)
        if solved is None:
            return None
        x = solved.submatrix(range(self.source.ngens), range(other.source.ngens))
        return GroupMap(other.source, self.source, x)

    def lift_element(self, vector: Sequence[int]) -> Optional[Vector]:
        """Some a in the source with self(a) equal to `vector` in the target."""
        b = self.target
        combined = IntMatrix.hstack([self.matrix, b.relations], rows=b.ngens)
        x = solve_integer(combined, vector)
        if x is None:
            return None
        return x[: self.source.ngens]

    def is_injective(self) -> bool:
        return self.kernel().source.is_zero()

    def is_surjective(self) -> bool:
        return self.cokernel().target.is_zero()

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def normal_matrix(self) -> IntMatrix:
        """The map in normal-form coordinates of source and target."""
        columns = [self.target.canonical(self(g)) for g in self.source.generator_vectors()]
        rows = len(self.target.generator_vectors())
        return IntMatrix.from_columns(columns, rows)

    @staticmethod
    def direct_sum(maps: Sequence["GroupMap"]) -> "GroupMap":
        return GroupMap(
            FgAbGroup.direct_sum([m.source for m in maps]),
            FgAbGroup.direct_sum([m.target for m in maps]),
            IntMatrix.block_diagonal([m.matrix for m in maps]),
        )


def is_exact(f: GroupMap, g: GroupMap) -> bool:
    """Whether A --f--> B --g--> C is exact at B."""
    if not (g @ f).is_zero():
        return False
    b = f.target
    span = IntMatrix.hstack([f.matrix, b.relations], rows=b.ngens)
    for col in g.kernel().matrix.columns():
        if solve_integer(span, col) is None:
            return False
    return True


def _reduced_relations(a: FgAbGroup) -> IntMatrix:
    return column_span_basis(a.relations)


def _power_map(a: FgAbGroup, b: FgAbGroup) -> GroupMap:
    """B^a → B^{k'}, Φ ↦ Φ·R' where R' presents A with independent columns."""
    r = _reduced_relations(a)
    ka = r.cols
    source = FgAbGroup.direct_sum([b] * a.ngens)
    target = FgAbGroup.direct_sum([b] * ka)
    return GroupMap(source, target, r.T.kron(IntMatrix.identity(b.ngens)))


def _copower_map(a: FgAbGroup, b: FgAbGroup) -> GroupMap:
    """ℤ^{k'} ⊗ B → ℤ^a ⊗ B induced by the relations of A."""
    r = _reduced_relations(a)
    ka = r.cols
    source = FgAbGroup.direct_sum([b] * ka)
    target = FgAbGroup.direct_sum([b] * a.ngens)
    return GroupMap(source, target, r.kron(IntMatrix.identity(b.ngens)))


def hom(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """Hom(A, B); an element is a vectorized matrix Φ (column j = image of gen j)."""
    return _power_map(a, b).kernel().source


def hom_inclusion(a: FgAbGroup, b: FgAbGroup) -> GroupMap:
    """Hom(A, B) inside B^{ngens(A)}."""
    return _power_map(a, b).kernel()


def ext1(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    return _power_map(a, b).cokernel().target


def tor1(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    return _copower_map(a, b).kernel().source


def tensor(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """A ⊗ B on generators e_i ⊗ f_j, indexed i * ngens(B) + j."""
    return _copower_map(a, b).cokernel().target


def tensor_presentation(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """A ⊗ B presented on the generator pairs, relations R_A ⊗ 1 and 1 ⊗ R_B."""
    return FgAbGroup(
        IntMatrix.hstack(
            [
                a.relations.kron(IntMatrix.identity(b.ngens)),
                IntMatrix.identity(a.ngens).kron(b.relations),
            ],
            rows=a.ngens * b.ngens,
        )
    )


def tensor_maps(f: GroupMap, g: GroupMap) -> GroupMap:
    return GroupMap(
        tensor_presentation(f.source, g.source),
        tensor_presentation(f.target, g.target),
        f.matrix.kron(g.matrix),
    )
