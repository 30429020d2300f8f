"""Dimension oracle for graded pieces of the concomitant algebras.

Two independent routes:

* character calculus: the graded character of ``Sym(sl2^m)`` is expanded
  as a truncated product of geometric series in the torus variable ``z``,
  and the multiplicity of the ``(q+1)``-dimensional irreducible in a
  character ``chi`` is ``chi[q] - chi[q+2]``;
* brute force: the space of equivariant maps is the kernel of an explicit
  linear system over a monomial basis, solved by exact elimination.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping

from . import linalg
from .qpoly import Polynomial
from .sl2 import ad_substitution, lower, psi_group, upper


class LaurentPoly:
    """Finite Laurent polynomial in ``z`` with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    def __getitem__(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = defaultdict(int)
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                out[k1 + k2] += v1 * v2
        return LaurentPoly(out)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: v for e, v in self.coeffs.items()})

    def is_symmetric(self) -> bool:
        return all(self[-k] == v for k, v in self.coeffs.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return "LaurentPoly({%s})" % ", ".join(f"{k}: {v}" for k, v in sorted(self.coeffs.items(), reverse=True))


ADJOINT_WEIGHTS = (2, 0, -2)


@lru_cache(maxsize=None)
def sym_adjoint_character(m: int, P: int) -> tuple[LaurentPoly, ...]:
    """Characters of the degree ``0..P`` pieces of ``Sym(sl2^m)``."""
    if P < 0:
        raise ValueError("P must be nonnegative")
    series = [LaurentPoly({0: 1})] + [LaurentPoly() for _ in range(P)]
    for _ in range(m):
        for wt in ADJOINT_WEIGHTS:
            new = []
            for p in range(P + 1):
                acc = LaurentPoly()
                for k in range(p + 1):
                    acc = acc + series[p - k].shift(k * wt)
                new.append(acc)
            series = new
    return tuple(series)


def multiplicity(chi: LaurentPoly, q: int) -> int:
    """Multiplicity of the ``(q+1)``-dimensional irreducible in ``chi``."""
    return chi[q] - chi[q + 2]


def dim_Dqp(m: int, q: int, p: int) -> int:
    """Dimension of degree ``p`` equivariant maps from ``m`` quadratic forms to forms of order ``q``."""
    if q < 0 or p < 0:
        raise ValueError("q and p must be nonnegative")
    return multiplicity(sym_adjoint_character(m, p)[p], q)


def dim_Cd(m: int, d: int, p: int) -> int:
    """Dimension of the degree ``p`` piece of ``C^(d)``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return sum(dim_Dqp(m, 2 * s, p) for s in range(d))


def monomial_count(m: int, s: int) -> int:
    if s < 0:
        raise ValueError("s must be nonnegative")
    return comb(s + m - 1, s)


def tableau_set(m: int, s: int) -> list[tuple[int, ...]]:
    """Tuples ``(i_1, ..., i_s, j)`` with ``i_1 <= ... <= i_s`` and ``i_1 < j``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    return [
        row + (j,)
        for row in combinations_with_replacement(range(1, m + 1), s)
        for j in range(row[0] + 1, m + 1)
    ]


def tableau_count(m: int, s: int) -> int:
    return len(tableau_set(m, s))


def hook_content_count(shape: Iterable[int], m: int) -> int:
    """Semistandard tableaux of ``shape`` with entries in ``1..m`` (hook-content formula)."""
    shape = [r for r in shape if r]
    cols = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    num, den = 1, 1
    for i, r in enumerate(shape):
        for j in range(r):
            num *= m + j - i
            den *= (r - j - 1) + (cols[j] - i - 1) + 1
    return num // den


# -- brute force ----------------------------------------------------------------

BRUTE_PANEL = (upper(1), lower(1))


def _slot_monomials(m: int, p: int) -> list[tuple[int, ...]]:
    n = 3 * m
    out = []
    for combo in combinations_with_replacement(range(n), p):
        exp = [0] * (n + 2)
        for i in combo:
            exp[i] += 1
        out.append(tuple(exp))
    return out


def _weight(exp: tuple[int, ...], m: int) -> int:
    return 2 * sum(exp[3 * i] - exp[3 * i + 2] for i in range(m))


def _equivariant_kernel_dim(m: int, p: int, target_weights, target_action) -> int:
    """Kernel dimension of the equivariance system for maps ``Sym^p -> W``.

    ``target_weights[k]`` is the torus weight of the ``k``-th basis vector
    of ``W`` and ``target_action(g)`` its matrix.  Torus equivariance forces
    the coefficient of ``(monomial, k)`` to vanish unless the weights agree,
    so only matching pairs are kept as unknowns; the unipotent panel
    supplies the remaining equations.
    """
    monos = _slot_monomials(m, p)
    unknowns = [(a, k) for a in monos for k, wt in enumerate(target_weights) if _weight(a, m) == wt]
    if not unknowns:
        return 0
    basis = linalg.EchelonBasis()
    images = []
    for g in BRUTE_PANEL:
        sub = ad_substitution(g, m)
        moved = {a: Polynomial(m, {a: 1}).subs(sub) for a in monos}
        images.append((moved, target_action(g)))
    for a, k in unknowns:
        col: dict = {}
        for n, (moved, R) in enumerate(images):
            for b, c in moved[a]._terms.items():
                col[(n, b, k)] = col.get((n, b, k), 0) + c
            for l, row in enumerate(R):
                if row[k]:
                    col[(n, a, l)] = col.get((n, a, l), 0) - row[k]
        basis.add({key: v for key, v in col.items() if v})
    return len(unknowns) - basis.rank


def dim_Dqp_bruteforce(m: int, q: int, p: int) -> int:
    weights = [q - 2 * j for j in range(q + 1)]
    return _equivariant_kernel_dim(m, p, weights, lambda g: psi_group(q + 1, g))


def dim_Cd_bruteforce(m: int, d: int, p: int) -> int:
    H = [d + 1 - 2 * i for i in range(1, d + 1)]
    weights = [H[i] - H[j] for i in range(d) for j in range(d)]

    def conj(g):
        P = psi_group(d, g)
        Q = linalg.inverse(P)
        # column (i, j): P E_ij P^-1 has entry P[k][i] Q[j][l] at (k, l)
        return [[P[k][i] * Q[j][l] for i in range(d) for j in range(d)] for k in range(d) for l in range(d)]

    return _equivariant_kernel_dim(m, p, weights, conj)
