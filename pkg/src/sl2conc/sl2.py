"""Irreducible representations of sl2 / SL2 and matrix-valued concomitants.

Conventions
-----------
* ``sl2`` elements are written ``X = (b, -a; c, -b)`` and carry slot
  coordinates ``(a, b, c)``; hence ``X = b h - a e + c f``.
* ``C^d`` is identified with binary forms of degree ``d - 1`` in the basis
  ``x^{d-1}, x^{d-2} y, ..., y^{d-1}``; ``g`` acts by
  ``p(x, y) -> p(g11 x + g21 y, g12 x + g22 y)``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from . import linalg
from .linalg import Matrix, matmul
from .qpoly import SLOT_KINDS, ContextError, Polynomial, Var, as_coeff, format_rational, slot_coordinate_action, slot_var

H_COORDS = (0, 1, 0)
E_COORDS = (-1, 0, 0)
F_COORDS = (0, 0, 1)


def chevalley(d: int) -> tuple[Matrix, Matrix, Matrix]:
    """Integer matrices ``(E, F, H)`` of ``rho^(d)(e), rho^(d)(f), rho^(d)(h)``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    E = linalg.zeros(d)
    F = linalg.zeros(d)
    H = linalg.zeros(d)
    for i in range(1, d):
        E[i - 1][i] = i
        F[i][i - 1] = d - i
    for i in range(1, d + 1):
        H[i - 1][i - 1] = d + 1 - 2 * i
    return E, F, H


def sl2_matrix(coords: Sequence) -> Matrix:
    a, b, c = (as_coeff(t) for t in coords)
    return [[b, -a], [c, -b]]


def sl2_coords(X: Matrix) -> tuple:
    if as_coeff(X[0][0] + X[1][1]) != 0:
        raise ValueError("matrix is not traceless")
    return (as_coeff(-X[0][1]), as_coeff(X[0][0]), as_coeff(X[1][0]))


def rho(d: int, coords: Sequence) -> Matrix:
    """``rho^(d)(X)`` for a numeric sl2 element given by its coordinates."""
    a, b, c = (as_coeff(t) for t in coords)
    E, F, H = chevalley(d)
    return [[as_coeff(b * H[i][j] - a * E[i][j] + c * F[i][j]) for j in range(d)] for i in range(d)]


# -- group elements --------------------------------------------------------------


def as_sl2(g) -> Matrix:
    """Validate and normalize a rational 2x2 matrix of determinant one."""
    if len(g) != 2 or any(len(r) != 2 for r in g):
        raise ValueError("SL2 point must be 2x2")
    g = [[as_coeff(x) for x in row] for row in g]
    if as_coeff(g[0][0] * g[1][1] - g[0][1] * g[1][0]) != 1:
        raise ValueError("SL2 point must have determinant 1")
    return g


def upper(r) -> Matrix:
    return [[1, as_coeff(r)], [0, 1]]


def lower(r) -> Matrix:
    return [[1, 0], [as_coeff(r), 1]]


def torus(z) -> Matrix:
    z = as_coeff(z)
    return [[z, 0], [0, as_coeff(Fraction(1) / z)]]


PANEL: tuple[Matrix, ...] = tuple(
    [upper(r) for r in (1, 2, Fraction(1, 2))]
    + [lower(r) for r in (1, 2, Fraction(1, 2))]
    + [torus(2)]
)


def psi_group(d: int, g) -> Matrix:
    """Matrix of ``Psi^(d)(g)`` on binary forms of degree ``d - 1``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    (g11, g12), (g21, g22) = as_sl2(g)
    n = d - 1
    # column j: (g11 x + g21 y)^(n-j) (g12 x + g22 y)^j, coefficients by power of y
    M = linalg.zeros(d)
    for j in range(d):
        left = [comb(n - j, k) * g11 ** (n - j - k) * g21**k for k in range(n - j + 1)]
        right = [comb(j, k) * g12 ** (j - k) * g22**k for k in range(j + 1)]
        for k1, c1 in enumerate(left):
            for k2, c2 in enumerate(right):
                M[k1 + k2][j] += c1 * c2
    return [[as_coeff(x) for x in row] for row in M]


def ad_coords(g) -> Matrix:
    """3x3 matrix sending coordinates of ``X`` to those of ``g X g^-1``."""
    g = as_sl2(g)
    ginv = linalg.inverse(g)
    cols = []
    for unit in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        cols.append(sl2_coords(matmul(matmul(g, sl2_matrix(unit)), ginv)))
    return [[cols[c][r] for c in range(3)] for r in range(3)]


def ad_substitution(g, m: int) -> dict[Var, Polynomial]:
    """Assignment turning ``p(X)`` into ``p(Ad(g) X)`` slotwise."""
    return slot_coordinate_action(ad_coords(g), m)


# -- matrix concomitants -------------------------------------------------------------


class MatrixConcomitant:
    """A ``d x d`` matrix of polynomials in the slot variables of context ``m``."""

    __slots__ = ("m", "d", "rows")

    def __init__(self, rows: Sequence[Sequence[Polynomial]], m: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise ValueError("entries must form a nonempty square matrix")
        if m is None:
            m = rows[0][0].m
        for r in rows:
            for p in r:
                if p.m != m:
                    raise ContextError("entries from different contexts")
        self.m = m
        self.d = d
        self.rows = rows

    @classmethod
    def zero(cls, m: int, d: int) -> "MatrixConcomitant":
        z = Polynomial.zero(m)
        return cls([[z] * d for _ in range(d)], m)

    @classmethod
    def scalar(cls, f, m: int, d: int) -> "MatrixConcomitant":
        if not isinstance(f, Polynomial):
            f = Polynomial.const(f, m)
        z = Polynomial.zero(m)
        return cls([[f if i == j else z for j in range(d)] for i in range(d)], m)

    @classmethod
    def constant(cls, A: Matrix, m: int) -> "MatrixConcomitant":
        return cls([[Polynomial.const(x, m) for x in row] for row in A], m)

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "MatrixConcomitant"):
        if other.m != self.m or other.d != self.d:
            raise ContextError(f"(m,d)=({self.m},{self.d}) vs ({other.m},{other.d})")

    def __add__(self, other: "MatrixConcomitant") -> "MatrixConcomitant":
        self._check(other)
        return MatrixConcomitant([[p + q for p, q in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.m)

    def __neg__(self) -> "MatrixConcomitant":
        return MatrixConcomitant([[-p for p in r] for r in self.rows], self.m)

    def __sub__(self, other: "MatrixConcomitant") -> "MatrixConcomitant":
        return self + (-other)

    def __mul__(self, other) -> "MatrixConcomitant":
        if isinstance(other, MatrixConcomitant):
            self._check(other)
            d, A, B = self.d, self.rows, other.rows
            out = []
            for i in range(d):
                row = []
                for j in range(d):
                    acc = Polynomial.zero(self.m)
                    for k in range(d):
                        if A[i][k] and B[k][j]:
                            acc = acc + A[i][k] * B[k][j]
                    row.append(acc)
                out.append(row)
            return MatrixConcomitant(out, self.m)
        if isinstance(other, Polynomial) or isinstance(other, (int, Fraction)):
            return MatrixConcomitant([[p * other for p in r] for r in self.rows], self.m)
        return NotImplemented

    def __rmul__(self, other) -> "MatrixConcomitant":
        if isinstance(other, Polynomial) or isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "MatrixConcomitant":
        out = MatrixConcomitant.scalar(1, self.m, self.d)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixConcomitant):
            return NotImplemented
        return (self.m, self.d, self.rows) == (other.m, other.d, other.rows)

    def __hash__(self) -> int:
        return hash((self.m, self.d, self.rows))

    def commutator(self, other: "MatrixConcomitant") -> "MatrixConcomitant":
        return self * other - other * self

    def trace(self) -> Polynomial:
        acc = Polynomial.zero(self.m)
        for i in range(self.d):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self.rows for p in r)

    def subs(self, mapping: Mapping, partial: bool = False) -> "MatrixConcomitant":
        return MatrixConcomitant([[p.subs(mapping, partial) for p in r] for r in self.rows], self.m)

    def conjugate(self, P: Matrix, Pinv: Matrix | None = None) -> "MatrixConcomitant":
        """``P . self . P^-1`` for a constant rational matrix ``P``."""
        if Pinv is None:
            Pinv = linalg.inverse(P)
        m, d = self.m, self.d
        return MatrixConcomitant.constant(P, m) * self * MatrixConcomitant.constant(Pinv, m)

    def evaluate(self, points: Sequence[Sequence]) -> Matrix:
        """Value at slot coordinates ``points[i] = (a_i, b_i, c_i)``."""
        if len(points) != self.m:
            raise ValueError(f"need {self.m} slot points")
        mapping = {Var(k, i + 1): pt[n] for i, pt in enumerate(points) for n, k in enumerate(SLOT_KINDS)}
        return [[p.subs(mapping, partial=True).constant_value() for p in r] for r in self.rows]

    def flatten(self) -> dict[tuple, object]:
        """Sparse coordinates keyed by ``(row, col, exponent)``."""
        out = {}
        for i, r in enumerate(self.rows):
            for j, p in enumerate(r):
                for exp, c in p._terms.items():
                    out[(i, j, exp)] = c
        return out

    def coefficient_matrices(self) -> dict[tuple[int, ...], Matrix]:
        """Constant matrix multiplying each monomial."""
        out: dict[tuple[int, ...], Matrix] = {}
        for i, r in enumerate(self.rows):
            for j, p in enumerate(r):
                for exp, c in p._terms.items():
                    out.setdefault(exp, linalg.zeros(self.d))[i][j] = c
        return out

    def to_json(self) -> list[list[str]]:
        return [[p.to_text() for p in r] for r in self.rows]

    def __repr__(self) -> str:
        return f"MatrixConcomitant(m={self.m}, d={self.d}, {self.to_json()})"


def rho_generic(d: int, i: int, m: int) -> MatrixConcomitant:
    """``rho^(d)(X_i)`` as a matrix of linear forms: ``b_i H - a_i E + c_i F``."""
    if not 1 <= i <= m:
        raise ValueError(f"slot {i} out of range 1..{m}")
    E, F, H = chevalley(d)
    a, b, c = (slot_var(k, i, m) for k in SLOT_KINDS)
    zero = Polynomial.zero(m)
    rows = []
    for r in range(d):
        row = []
        for s in range(d):
            p = zero
            if H[r][s]:
                p = p + b.scale(H[r][s])
            if E[r][s]:
                p = p - a.scale(E[r][s])
            if F[r][s]:
                p = p + c.scale(F[r][s])
            row.append(p)
        rows.append(row)
    return MatrixConcomitant(rows, m)


def matrix_to_json(A: Matrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in A]


def is_tridiagonal(F: MatrixConcomitant) -> bool:
    return all(F.rows[i][j].is_zero() for i in range(F.d) for j in range(F.d) if abs(i - j) > 1)


def slot_points(coords: Iterable[Sequence]) -> list[tuple]:
    return [tuple(as_coeff(t) for t in c) for c in coords]
