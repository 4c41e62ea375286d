"""Exact rational linear algebra.

Everything here works over ``fractions.Fraction``; nothing is ever rounded.
Vectors are plain tuples of Fractions, matrices are :class:`Matrix`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]


def as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match rows x cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        entries = tuple(as_vector(r) for r in rows)
        if cols is None:
            if not entries:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            if rows is None:
                raise ValueError("cannot infer row count of an empty matrix")
            return cls(rows, 0, tuple(() for _ in range(rows)))
        return cls.from_rows(list(zip(*columns)), cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries)


def _integer_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = lcm(1, *(x.denominator for x in fr))
        out.append([int(x * den) for x in fr])
    return out


def _bareiss_rank(a: list[list[int]], ncols: int) -> int:
    """Fraction-free elimination on an integer matrix (modified in place)."""
    nrows = len(a)
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            m = ai[c]
            ar = a[r]
            for j in range(c + 1, ncols):
                ai[j] = (p * ai[j] - m * ar[j]) // prev
            ai[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rank_of_rows(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return _bareiss_rank(_integer_rows(rows), ncols)


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return _bareiss_rank(_integer_rows(m.entries), m.cols)


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    a = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def _primitive(v: Sequence[Fraction]) -> Vector:
    # scale to coprime integers with a positive leading entry, for stable output
    den = lcm(1, *(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints) or 1
    lead = next((x for x in ints if x != 0), 1)
    if lead < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of {x : m x = 0}, one vector per free column, entries integral."""
    if m.cols == 0:
        return []
    reduced, pivots = rref(m.entries, m.cols) if m.rows else ([], [])
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[fc]
        basis.append(_primitive(v))
    return basis


def _check_dims(vectors: Sequence[Sequence], dim: int | None = None) -> int | None:
    for v in vectors:
        if dim is None:
            dim = len(v)
        elif len(v) != dim:
            raise ValueError(f"dimension mismatch: expected {dim}, got {len(v)}")
    return dim


def span_basis(vectors: Sequence[Sequence]) -> list[Vector]:
    """Echelon basis of the span of ``vectors``."""
    dim = _check_dims(vectors)
    if dim is None:
        return []
    reduced, _ = rref(vectors, dim)
    return [_primitive(r) for r in reduced]


def in_span(v: Sequence, vectors: Sequence[Sequence]) -> bool:
    if not vectors:
        return all(x == 0 for x in v)
    return rank_of_rows(list(vectors) + [v]) == rank_of_rows(vectors)


def intersect_subspaces(basis_a: Sequence[Sequence], basis_b: Sequence[Sequence]) -> list[Vector]:
    """Basis of span(A) ∩ span(B).

    Solves sum x_i a_i = sum y_j b_j; each kernel vector of [A | -B] gives
    an element sum x_i a_i of the intersection.
    """
    dim = _check_dims(list(basis_a) + list(basis_b))
    if dim is None or not basis_a or not basis_b:
        return []
    a = span_basis(basis_a)
    b = span_basis(basis_b)
    if not a or not b:
        return []
    cols = list(a) + [tuple(-x for x in v) for v in b]
    sol = kernel_basis(Matrix.from_columns(cols, rows=dim))
    vecs = []
    for x in sol:
        w = [Fraction(0)] * dim
        for coef, av in zip(x[: len(a)], a):
            if coef:
                for k in range(dim):
                    w[k] += coef * av[k]
        vecs.append(w)
    return span_basis(vecs)
