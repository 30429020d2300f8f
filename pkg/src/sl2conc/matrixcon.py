"""The matrix concomitant algebra C^(d) and its scalar invariants.

Everything here is symbolic: a concomitant is a :class:`MatrixConcomitant`
whose entries are polynomials in the slot coordinates, and an identity is
checked by expanding both sides exactly.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from . import linalg
from .classical import det_E, disc_D, evaluate_slots
from .qpoly import Polynomial, as_coeff
from .sl2 import (
    E_COORDS,
    F_COORDS,
    H_COORDS,
    PANEL,
    MatrixConcomitant,
    ad_substitution,
    psi_group,
    rho,
    rho_generic,
)


def t(i: int, d: int, m: int) -> MatrixConcomitant:
    return rho_generic(d, i, m)


def u(i: int, j: int, d: int, m: int) -> Polynomial:
    """``Tr(rho(X_i) rho(X_j))``."""
    return (t(i, d, m) * t(j, d, m)).trace()


def w(i: int, j: int, k: int, d: int, m: int) -> Polynomial:
    """``Tr(rho(X_i) rho(X_j) rho(X_k))``."""
    return (t(i, d, m) * t(j, d, m) * t(k, d, m)).trace()


def embed_scalar(f, d: int, m: int | None = None) -> MatrixConcomitant:
    if m is None:
        m = f.m
    return MatrixConcomitant.scalar(f, m, d)


def commutator_t(i: int, j: int, d: int, m: int) -> MatrixConcomitant:
    return t(i, d, m).commutator(t(j, d, m))


def check_equivariance(F: MatrixConcomitant, g) -> MatrixConcomitant:
    """``F(Ad(g) X) - Psi(g) F(X) Psi(g)^-1``."""
    P = psi_group(F.d, g)
    return F.subs(ad_substitution(g, F.m)) - F.conjugate(P)


def is_equivariant(F: MatrixConcomitant, panel: Iterable = PANEL) -> bool:
    return all(check_equivariance(F, g).is_zero() for g in panel)


def is_invariant(f: Polynomial, panel: Iterable = PANEL) -> bool:
    return all(f.subs(ad_substitution(g, f.m)) == f for g in panel)


def charpoly(F: MatrixConcomitant) -> list[Polynomial]:
    """Coefficients ``[c_0, ..., c_d]`` of ``det(lambda I - F)`` (Faddeev-LeVerrier)."""
    d, m = F.d, F.m
    coeffs: list[Polynomial] = [Polynomial.zero(m)] * (d + 1)
    coeffs[d] = Polynomial.one(m)
    M = MatrixConcomitant.zero(m, d)
    for k in range(1, d + 1):
        M = F * M + MatrixConcomitant.scalar(coeffs[d - k + 1], m, d)
        coeffs[d - k] = (F * M).trace().scale(Fraction(-1, k))
    return coeffs


def charpoly_invariance(F: MatrixConcomitant, panel: Iterable = PANEL) -> bool:
    panel = list(panel)
    return all(is_invariant(c, panel) for c in charpoly(F))


def words_span_dim(d: int, X=H_COORDS, Y=(-1, 0, 1), L: int = 1) -> int:
    """Dimension of the span of all words of length <= L in rho(X), rho(Y)."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    A, B = rho(d, X), rho(d, Y)
    ident = linalg.identity(d)
    basis_mats = [ident]
    for _ in range(L):
        ech = linalg.EchelonBasis()
        kept = []
        for M in [ident] + [linalg.matmul(G, b) for b in basis_mats for G in (A, B)]:
            if ech.add(linalg.flatten(M)):
                kept.append(M)
        if len(kept) == len(basis_mats):
            break
        basis_mats = kept
    return len(basis_mats)


def is_central(F: MatrixConcomitant, panel: Iterable = PANEL) -> Polynomial | None:
    """The scalar ``f`` if ``F = f I`` with ``f`` invariant, otherwise ``None``."""
    d = F.d
    if any(F[i, j] for i in range(d) for j in range(d) if i != j):
        return None
    f = F[0, 0]
    if any(F[i, i] != f for i in range(d)):
        return None
    return f if is_invariant(f, panel) else None


def standard_poly3(A, B, C):
    """Alternating sum of the six products of ``A, B, C``."""
    return A * B * C + B * C * A + C * A * B - B * A * C - A * C * B - C * B * A


def st3(i: int, j: int, k: int, d: int, m: int) -> MatrixConcomitant:
    return standard_poly3(t(i, d, m), t(j, d, m), t(k, d, m))


def lemma52_scalar(d: int) -> int:
    """``sum_{i=1}^{floor((d+1)/2)} (d + 1 - 2i)^2``."""
    return sum((d + 1 - 2 * i) ** 2 for i in range(1, (d + 1) // 2 + 1))


def check_lemma52(d: int, m: int = 3) -> MatrixConcomitant:
    """``(d^2 - 1) w_123 I - c_d St3(t1, t2, t3)``."""
    if d < 2:
        raise ValueError("needs d >= 2")
    if m < 3:
        raise ValueError("needs m >= 3")
    lhs = embed_scalar(w(1, 2, 3, d, m).scale(d * d - 1), d, m)
    return lhs - st3(1, 2, 3, d, m) * lemma52_scalar(d)


def proportionality(p, q) -> Fraction | None:
    """The rational ``r`` with ``p == r * q``, or ``None`` (``q`` must be nonzero).

    Works for polynomials and for anything exposing ``.poly``.
    """
    p = getattr(p, "poly", p)
    q = getattr(q, "poly", q)
    if q.is_zero():
        raise ValueError("reference is zero")
    exp, c = next(q.items())
    r = Fraction(p.coefficient(exp)) / Fraction(c)
    return as_coeff(r) if p == q.scale(r) else None


def kappa(d: int, m: int = 2) -> Fraction:
    """Scalar with ``u_ij = kappa * D_ij`` for all slot pairs; raises if none exists."""
    r = None
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            ratio = proportionality(u(i, j, d, m), disc_D(i, j, m))
            if ratio is None or (r is not None and ratio != r):
                raise ArithmeticError(f"u_{i}{j} is not a fixed multiple of D_{i}{j} at d={d}")
            r = ratio
    return r


def alternating_part_w(i: int, j: int, k: int, d: int, m: int) -> Polynomial:
    idx = (i, j, k)
    total = Polynomial.zero(m)
    for perm in permutations(range(3)):
        inversions = sum(perm[a] > perm[b] for a in range(3) for b in range(a + 1, 3))
        term = w(*(idx[p] for p in perm), d, m)
        total = total - term if inversions % 2 else total + term
    return total.scale(Fraction(1, 6))


def w_scale(d: int, m: int = 3) -> Fraction | None:
    """Scalar with ``Alt(w)_123 = r * E_123``."""
    return proportionality(alternating_part_w(1, 2, 3, d, m), det_E(1, 2, 3, m))


def evaluate(F, points: Sequence[Sequence]):
    """Evaluate a concomitant or scalar invariant at numeric slot points."""
    if isinstance(F, MatrixConcomitant):
        return F.evaluate(points)
    return evaluate_slots(F, points).constant_value()


HEF = (H_COORDS, E_COORDS, F_COORDS)
