"""Exact linear algebra over the rationals.

Ranks are computed by fraction-free elimination on sparse integer vectors:
every stored row is primitive (content divided out), and reducing by a
pivot row uses only integer cross-multiplication.  Dense helpers for the
small constant matrices (group elements, representation matrices) work on
lists of lists of ``int``/``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

from .qpoly import as_coeff

Matrix = list[list]


# -- sparse echelon ------------------------------------------------------------


def _primitive(vec: dict[int, int]) -> dict[int, int]:
    g = reduce(gcd, vec.values(), 0)
    lead = vec[min(vec)]
    if lead < 0:
        g = -g
    if g != 1:
        vec = {k: v // g for k, v in vec.items()}
    return vec


def _integral(vec: Mapping) -> dict:
    den = reduce(lcm, (Fraction(v).denominator for v in vec.values()), 1)
    out = {}
    for k, v in vec.items():
        v = as_coeff(v) * den
        v = int(v)
        if v:
            out[k] = v
    return out


class EchelonBasis:
    """Incrementally maintained row-echelon basis of a span of sparse vectors.

    Vector coordinates may be any hashable keys; they are interned to
    integers in first-seen order, and that order is the elimination order.
    """

    def __init__(self):
        self._index: dict[Hashable, int] = {}
        self._pivots: dict[int, dict[int, int]] = {}

    def _encode(self, vec: Mapping) -> dict[int, int]:
        out = {}
        for k, v in _integral(vec).items():
            i = self._index.get(k)
            if i is None:
                i = self._index[k] = len(self._index)
            out[i] = v
        return out

    def _reduce(self, vec: dict[int, int]) -> dict[int, int]:
        pivots = self._pivots
        while vec:
            lead = min(vec)
            row = pivots.get(lead)
            if row is None:
                return vec
            a, b = row[lead], vec[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in vec.items()}
            for k, v in row.items():
                s = new.get(k, 0) - b * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            vec = _primitive(new) if new else new
        return vec

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True iff it was independent of the basis."""
        reduced = self._reduce(self._encode(vec))
        if not reduced:
            return False
        reduced = _primitive(reduced)
        self._pivots[min(reduced)] = reduced
        return True

    def extend(self, vecs: Iterable[Mapping]) -> int:
        return sum(self.add(v) for v in vecs)

    def contains(self, vec: Mapping) -> bool:
        enc = {}
        for k, v in _integral(vec).items():
            if k not in self._index:
                return False
            enc[self._index[k]] = v
        return not self._reduce(enc)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def copy(self) -> "EchelonBasis":
        other = EchelonBasis()
        other._index = dict(self._index)
        other._pivots = dict(self._pivots)
        return other


def rank(vectors: Iterable[Mapping]) -> int:
    """Exact rank of a family of sparse rational vectors."""
    basis = EchelonBasis()
    basis.extend(vectors)
    return basis.rank


def independent_subset(vectors: Sequence[Mapping]) -> list[int]:
    """Indices of a greedy maximal independent subfamily."""
    basis = EchelonBasis()
    return [i for i, v in enumerate(vectors) if basis.add(v)]


# -- dense helpers ---------------------------------------------------------------


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(r: int, c: int | None = None) -> Matrix:
    return [[0] * (r if c is None else c) for _ in range(r)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    cols = list(zip(*B))
    return [[as_coeff(sum(a * b for a, b in zip(row, col))) for col in cols] for row in A]


def matadd(A: Matrix, B: Matrix, beta=1) -> Matrix:
    return [[as_coeff(a + beta * b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matscale(A: Matrix, c) -> Matrix:
    return [[as_coeff(c * a) for a in row] for row in A]


def commutator(A: Matrix, B: Matrix) -> Matrix:
    return matadd(matmul(A, B), matmul(B, A), -1)


def trace(A: Matrix):
    return as_coeff(sum(A[i][i] for i in range(len(A))))


def matpow(A: Matrix, k: int) -> Matrix:
    out = identity(len(A))
    for _ in range(k):
        out = matmul(out, A)
    return out


def inverse(A: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the rationals; raises on singular input."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [[as_coeff(x) for x in row[n:]] for row in M]


def det(A: Matrix):
    """Bareiss fraction-free determinant (exact for integer or rational input)."""
    n = len(A)
    if n == 0:
        return 1
    den = reduce(lcm, (Fraction(x).denominator for row in A for x in row), 1)
    M = [[int(as_coeff(x) * den) for x in row] for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return as_coeff(Fraction(sign * M[n - 1][n - 1], den**n))


def flatten(A: Matrix) -> dict[tuple[int, int], object]:
    return {(i, j): v for i, row in enumerate(A) for j, v in enumerate(row) if v}


def matrix_rank(A: Matrix) -> int:
    return rank({j: v for j, v in enumerate(row) if v} for row in A)
