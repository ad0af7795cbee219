"""Exact linear algebra over the rationals.

Matrices are tuples of row tuples holding ``int`` / ``Fraction``
entries; every routine here is exact Gaussian elimination, no floating
point.  Subspaces are canonicalized through reduced row echelon form so
that equality of subspaces is equality of their stored bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "Matrix",
    "exact_scalar",
    "to_matrix",
    "identity_matrix",
    "zero_matrix",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_pow",
    "mat_inv",
    "mat_vec",
    "is_zero_matrix",
    "rref",
    "rank",
    "nullspace",
    "det",
    "Subspace",
    "SpanBuilder",
]

Matrix = tuple  # tuple of row tuples


def exact_scalar(value):
    """Coerce to an exact rational; integral values stay plain ints.

    Python ints and Fractions mix exactly in arithmetic, and equal
    numbers compare and hash equal, so int-preserving matrices are
    interchangeable with all-Fraction ones while being much faster.
    """
    if isinstance(value, int):
        return value
    frac = Fraction(value)
    return int(frac) if frac.denominator == 1 else frac


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(exact_scalar(v) for v in row) for row in rows)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError("negative matrix power is not supported here")
    acc = identity_matrix(len(a))
    base = a
    while k:
        if k & 1:
            acc = mat_mul(acc, base)
        base = mat_mul(base, base)
        k >>= 1
    return acc


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    mat = [[Fraction(v) for v in row] for row in rows]
    if not mat:
        return [], []
    n_cols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = Fraction(1, 1) / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [v - factor * p for v, p in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r] + [row for row in mat[r:] if any(v != 0 for v in row)], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Iterable[Sequence], n_cols: Optional[int] = None) -> list[tuple]:
    """Canonical basis of the right kernel {v : M v = 0}.

    ``n_cols`` is required when ``rows`` is empty (kernel of the empty
    constraint set is the full space).
    """
    rows = [list(row) for row in rows]
    if rows:
        n_cols = len(rows[0])
    if n_cols is None:
        raise ValueError("n_cols is required for an empty constraint matrix")
    if not rows:
        reduced, pivots = [], []
    else:
        reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for row, pivot_col in zip(reduced, pivots):
            vec[pivot_col] = -row[free]
        basis.append(tuple(vec))
    return basis


def mat_inv(a: Matrix) -> Matrix:
    """Inverse by Gauss-Jordan elimination; raises ValueError if singular."""
    n = len(a)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return to_matrix(row[n:] for row in reduced[:n])


def det(a: Matrix) -> Fraction:
    """Determinant by fraction-based elimination."""
    n = len(a)
    mat = [[Fraction(v) for v in row] for row in a]
    result = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if mat[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            mat[c], mat[pivot_row] = mat[pivot_row], mat[c]
            result = -result
        result *= mat[c][c]
        inv = Fraction(1, 1) / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                factor = mat[i][c] * inv
                mat[i] = [v - factor * p for v, p in zip(mat[i], mat[c])]
    return result


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^dim with a canonical (RREF) basis.

    ``basis`` holds the spanning vectors as rows of a reduced row
    echelon matrix, so two Subspaces are equal iff their fields are.
    """

    dim: int
    basis: tuple

    @staticmethod
    def from_vectors(dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [list(v) for v in vectors]
        for row in rows:
            if len(row) != dim:
                raise ValueError(f"vector length {len(row)} does not match dim {dim}")
        reduced, _ = rref(rows) if rows else ([], [])
        return Subspace(dim, tuple(tuple(row) for row in reduced))

    @staticmethod
    def kernel_of(constraints: Iterable[Sequence], dim: int) -> "Subspace":
        """Common kernel of the stacked constraint rows."""
        return Subspace.from_vectors(dim, nullspace(list(constraints), n_cols=dim))

    @staticmethod
    def full(dim: int) -> "Subspace":
        return Subspace.from_vectors(dim, identity_matrix(dim))

    @staticmethod
    def zero(dim: int) -> "Subspace":
        return Subspace(dim, ())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        return self.dimension == self.dim

    def is_zero(self) -> bool:
        return self.dimension == 0

    def contains_vector(self, v: Sequence) -> bool:
        vec = [Fraction(x) for x in v]
        for row in self.basis:
            lead = next((c for c, x in enumerate(row) if x != 0), None)
            if lead is not None and vec[lead] != 0:
                factor = vec[lead] / row[lead]
                vec = [x - factor * y for x, y in zip(vec, row)]
        return all(x == 0 for x in vec)

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(v) for v in other.basis)

    def to_lists(self) -> list[list[str]]:
        from .functions import format_scalar

        return [[format_scalar(v) for v in row] for row in self.basis]


class SpanBuilder:
    """Incrementally reduced span of vectors (rows kept in RREF)."""

    def __init__(self, length: int):
        self.length = length
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        for row, pivot in zip(self.rows, self.pivots):
            if vec[pivot] != 0:
                factor = vec[pivot]
                vec = [x - factor * y for x, y in zip(vec, row)]
        return vec

    def add(self, vector: Sequence) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        vec = self._reduce([Fraction(v) for v in vector])
        lead = next((c for c, x in enumerate(vec) if x != 0), None)
        if lead is None:
            return False
        inv = Fraction(1, 1) / vec[lead]
        vec = [x * inv for x in vec]
        # Keep existing rows reduced against the new one.
        for i, row in enumerate(self.rows):
            if row[lead] != 0:
                factor = row[lead]
                self.rows[i] = [x - factor * y for x, y in zip(row, vec)]
        position = next((i for i, p in enumerate(self.pivots) if p > lead), len(self.pivots))
        self.rows.insert(position, vec)
        self.pivots.insert(position, lead)
        return True

    def contains(self, vector: Sequence) -> bool:
        return all(x == 0 for x in self._reduce([Fraction(v) for v in vector]))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def vectors(self) -> list[tuple]:
        return [tuple(row) for row in self.rows]
