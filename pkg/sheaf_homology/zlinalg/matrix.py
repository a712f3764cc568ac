#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: matrix.py
# @Created:   2026-09-03 11:40:02
# @Modified:  2026-10-14 22:17:36

"""Exact integer matrices and the Smith normal form.

Entries are Python ints, so every intermediate value is exact and no
overflow can occur. Vectors are plain tuples of ints; a matrix acts on column
vectors from the left.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ..errors import ShapeError
from ..log import child_logger

logger = child_logger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative shape {self.rows}x{self.cols}")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ShapeError(f"data does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None
    ) -> "IntMatrix":
        data = tuple(tuple(int(v) for v in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        for c in columns:
            if len(c) != rows:
                raise ShapeError(f"column of length {len(c)}, expected {rows}")
        data = tuple(tuple(int(c[i]) for c in columns) for i in range(rows))
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.diagonal([1] * n, n, n)

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int, cols: int) -> "IntMatrix":
        data = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(entries):
            data[i][i] = int(v)
        return cls.from_rows(data, cols)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> List[List[int]]:
        return [list(r) for r in self.data]

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.data, self.cols) if self.rows else (
            IntMatrix.zeros(self.cols, 0)
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def apply(self, vector: Sequence[int]) -> Vector:
        if len(vector) != self.cols:
            raise ShapeError(f"vector of length {len(vector)} for {self.cols} columns")
        nz = [(j, v) for j, v in enumerate(vector) if v]
        return tuple(sum(r[j] * v for j, v in nz) for r in self.data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_cols = other.columns()
        data = []
        for r in self.data:
            nz = [(k, v) for k, v in enumerate(r) if v]
            data.append(tuple(sum(v * c[k] for k, v in nz) for c in other_cols))
        return IntMatrix(self.rows, other.cols, tuple(data))

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(
                f"shape {self.rows}x{self.cols} does not match {other.rows}x{other.cols}"
            )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)
            ),
        )

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(
            self.rows, self.cols, tuple(tuple(k * v for v in r) for r in self.data)
        )

    def submatrix(self, row_index: Sequence[int], col_index: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            len(row_index),
            len(col_index),
            tuple(tuple(self.data[i][j] for j in col_index) for i in row_index),
        )

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        """Kronecker product; block (i, j) is self[i, j] * other."""
        data = []
        for r in self.data:
            for s in other.data:
                data.append(tuple(a * b for a in r for b in s))
        return IntMatrix(self.rows * other.rows, self.cols * other.cols, tuple(data))

    @staticmethod
    def hstack(blocks: Sequence["IntMatrix"], rows: Optional[int] = None) -> "IntMatrix":
        if not blocks:
            return IntMatrix.zeros(rows or 0, 0)
        n = blocks[0].rows
        for b in blocks:
            if b.rows != n:
                raise ShapeError(f"hstack of {b.rows} rows onto {n}")
        data = tuple(
            tuple(v for b in blocks for v in b.data[i]) for i in range(n)
        )
        return IntMatrix(n, sum(b.cols for b in blocks), data)

    @staticmethod
    def vstack(blocks: Sequence["IntMatrix"], cols: Optional[int] = None) -> "IntMatrix":
        if not blocks:
            return IntMatrix.zeros(0, cols or 0)
        n = blocks[0].cols
        for b in blocks:
            if b.cols != n:
                raise ShapeError(f"vstack of {b.cols} columns onto {n}")
        data = tuple(r for b in blocks for r in b.data)
        return IntMatrix(len(data), n, data)

    @staticmethod
    def block_diagonal(blocks: Sequence["IntMatrix"]) -> "IntMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.data):
                data[r0 + i][c0 : c0 + b.cols] = row
            r0 += b.rows
            c0 += b.cols
        return IntMatrix.from_rows(data, cols)

    def __str__(self) -> str:
        return "[" + ", ".join(str(list(r)) for r in self.data) + "]"


@dataclass(frozen=True)
class SmithDecomposition:
    """`u @ m @ v == d` with `u`, `v` unimodular and `d` in Smith form."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix
    rank: int

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.d[i, i] for i in range(min(self.d.rows, self.d.cols)))

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.diagonal[: self.rank]


def _identity_lists(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class _Reducer:
    """Row and column operations on `a`, mirrored on U, V and their inverses."""

    def __init__(self, m: IntMatrix) -> None:
        self.a = m.to_lists()
        self.m = m.rows
        self.n = m.cols
        self.u = _identity_lists(self.m)
        self.u_inv = _identity_lists(self.m)
        self.v = _identity_lists(self.n)
        self.v_inv = _identity_lists(self.n)

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.a, self.u):
            mat[i], mat[j] = mat[j], mat[i]
        for row in self.u_inv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.a, self.v):
            for row in mat:
                row[i], row[j] = row[j], row[i]
        self.v_inv[i], self.v_inv[j] = self.v_inv[j], self.v_inv[i]

    def add_row(self, src: int, dst: int, q: int) -> None:
        """row[dst] += q * row[src]"""
        if not q:
            return
        for mat in (self.a, self.u):
            s, d = mat[src], mat[dst]
            for k, v in enumerate(s):
                if v:
                    d[k] += q * v
        for row in self.u_inv:
            if row[dst]:
                row[src] -= q * row[dst]

    def add_col(self, src: int, dst: int, q: int) -> None:
        """col[dst] += q * col[src]"""
        if not q:
            return
        for mat in (self.a, self.v):
            for row in mat:
                if row[src]:
                    row[dst] += q * row[src]
        s, d = self.v_inv[src], self.v_inv[dst]
        for k, v in enumerate(d):
            if v:
                s[k] -= q * v

    def negate_row(self, i: int) -> None:
        for mat in (self.a, self.u):
            mat[i] = [-v for v in mat[i]]
        for row in self.u_inv:
            row[i] = -row[i]

    def smallest_entry(self, t: int) -> Optional[Tuple[int, int]]:
        best = None
        best_abs = 0
        for i in range(t, self.m):
            row = self.a[i]
            for j in range(t, self.n):
                v = row[j]
                if v and (best is None or abs(v) < best_abs):
                    best, best_abs = (i, j), abs(v)
                    if best_abs == 1:
                        return best
        return best

    def clear_cross(self, t: int) -> None:
        """Zero row t and column t outside the pivot a[t][t]."""
        a = self.a
        while True:
            done = True
            for i in range(t + 1, self.m):
                if a[i][t]:
                    self.add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, self.n):
                if a[t][j]:
                    self.add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if done:
                return
            # move a smaller remainder into the pivot position and repeat
            best = None
            for i in range(t + 1, self.m):
                if a[i][t] and (best is None or abs(a[i][t]) < abs(best[2])):
                    best = (i, None, a[i][t])
            for j in range(t + 1, self.n):
                if a[t][j] and (best is None or abs(a[t][j]) < abs(best[2])):
                    best = (None, j, a[t][j])
            assert best is not None
            if best[0] is not None:
                self.swap_rows(t, best[0])
            else:
                self.swap_cols(t, best[1])

    def first_non_multiple(self, t: int) -> Optional[int]:
        p = self.a[t][t]
        for i in range(t + 1, self.m):
            row = self.a[i]
            for j in range(t + 1, self.n):
                if row[j] % p:
                    return i
        return None

    def run(self) -> int:
        t = 0
        while t < min(self.m, self.n):
            pos = self.smallest_entry(t)
            if pos is None:
                break
            self.swap_rows(t, pos[0])
            self.swap_cols(t, pos[1])
            while True:
                self.clear_cross(t)
                i = self.first_non_multiple(t)
                if i is None:
                    break
                self.add_row(i, t, 1)
            if self.a[t][t] < 0:
                self.negate_row(t)
            t += 1
        return t


@lru_cache(maxsize=1024)
def smith_decomposition(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with the transformation matrices and their inverses.

    Pivots are chosen with the smallest magnitude in the remaining block,
    which keeps intermediate entries small on the sparse 0/±1 matrices that
    chain complexes produce.
    """
    logger.debug("smith normal form of a %dx%d matrix", m.rows, m.cols)
    r = _Reducer(m)
    rank = r.run()
    return SmithDecomposition(
        u=IntMatrix.from_rows(r.u, m.rows),
        d=IntMatrix.from_rows(r.a, m.cols),
        v=IntMatrix.from_rows(r.v, m.cols),
        u_inv=IntMatrix.from_rows(r.u_inv, m.rows),
        v_inv=IntMatrix.from_rows(r.v_inv, m.cols),
        rank=rank,
    )


def smith_normal_form(m: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U·M·V = D diagonal, d_1 | d_2 | ... and d_i ≥ 0."""
    s = smith_decomposition(m)
    return s.u, s.d, s.v


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """A basis of {x : m·x = 0} as the columns of a matrix."""
    s = smith_decomposition(m)
    return s.v.submatrix(range(m.cols), range(s.rank, m.cols))


def _solve_with(s: SmithDecomposition, a: IntMatrix, b: Sequence[int]) -> Optional[Vector]:
    c = s.u.apply(b)
    y = [0] * a.cols
    diag = s.diagonal
    for i, ci in enumerate(c):
        if i < s.rank:
            q, rem = divmod(ci, diag[i])
            if rem:
                return None
            y[i] = q
        elif ci:
            return None
    return s.v.apply(y)


def solve_integer(a: IntMatrix, b: Sequence[int]) -> Optional[Vector]:
    """Some x with a·x = b over the integers, or None when there is none."""
    if len(b) != a.rows:
        raise ShapeError(f"right-hand side of length {len(b)} for {a.rows} rows")
    return _solve_with(smith_decomposition(a), a, b)


def solve_matrix(a: IntMatrix, b: IntMatrix) -> Optional[IntMatrix]:
    """Some X with a·X = b, column by column, or None."""
    if b.rows != a.rows:
        raise ShapeError(f"right-hand side with {b.rows} rows for {a.rows} rows")
    s = smith_decomposition(a)
    columns = []
    for col in b.columns():
        x = _solve_with(s, a, col)
        if x is None:
            return None
        columns.append(x)
    return IntMatrix.from_columns(columns, a.cols)


def column_span_basis(m: IntMatrix) -> IntMatrix:
    """A basis of the ℤ-span of the columns of `m`, in column echelon form."""
    work = [list(c) for c in m.columns() if any(c)]
    basis: List[List[int]] = []
    for r in range(m.rows):
        active = [c for c in work if c[r]]
        if not active:
            continue
        while len(active) > 1:
            active.sort(key=lambda c: abs(c[r]))
            pivot = active[0]
            rest = []
            for c in active[1:]:
                q = c[r] // pivot[r]
                for i in range(m.rows):
                    if pivot[i]:
                        c[i] -= q * pivot[i]
                if c[r]:
                    rest.append(c)
            active = [pivot] + rest
        pivot = active[0]
        basis.append(pivot)
        work = [c for c in work if c is not pivot and any(c)]
        if not work:
            break
    return IntMatrix.from_columns(basis, m.rows)

