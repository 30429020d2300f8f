"""Clebsch-Gordan splitting of d x d matrices and the transfer to binary forms.

Under conjugation by ``Psi^(d)`` the matrix space splits as
``V_1 + V_3 + ... + V_{2d-1}``.  Block ``s`` is spanned by
``B_{s,k} = ad(F)^k (E^s)``, ``k = 0..2s``, where ``E^s`` is the highest
weight vector and ``ad(F) M = F M - M F`` lowers the weight by two.

``phi`` sends ``B_{s,k}`` to ``(y d/dx)^k x^{2s}``; both sides are lowering
chains from a highest weight vector, so this is an SL2 intertwiner with
the normalization ``E^s -> x^{2s}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import linalg
from .classical import BinaryFormCovariant
from .linalg import Matrix
from .matrixcon import t
from .qpoly import Polynomial, as_coeff
from .sl2 import MatrixConcomitant, chevalley


def ad_lower(F: Matrix, M: Matrix) -> Matrix:
    return linalg.commutator(F, M)


@dataclass(frozen=True)
class IsotypicBasis:
    d: int
    blocks: dict[int, list[Matrix]]
    inverse: Matrix = field(repr=False)
    labels: list[tuple[int, int]] = field(repr=False)

    def block_sizes(self) -> list[int]:
        return [len(self.blocks[s]) for s in range(self.d)]

    def matrices(self) -> list[Matrix]:
        return [self.blocks[s][k] for s, k in self.labels]

    def coordinates(self, A: Matrix) -> dict[tuple[int, int], object]:
        """Expansion coefficients of a constant matrix, keyed by ``(s, k)``."""
        d = self.d
        vec = [A[i][j] for i in range(d) for j in range(d)]
        out = {}
        for row, label in zip(self.inverse, self.labels):
            c = as_coeff(sum(r * v for r, v in zip(row, vec) if v))
            if c:
                out[label] = c
        return out


@lru_cache(maxsize=None)
def isotypic_basis(d: int) -> IsotypicBasis:
    if d < 1:
        raise ValueError("d must be at least 1")
    E, F, _ = chevalley(d)
    blocks: dict[int, list[Matrix]] = {}
    labels = []
    for s in range(d):
        chain = [linalg.matpow(E, s)]
        for _ in range(2 * s):
            chain.append(ad_lower(F, chain[-1]))
        blocks[s] = chain
        labels.extend((s, k) for k in range(2 * s + 1))
    columns = [blocks[s][k] for s, k in labels]
    change = [[columns[c][i][j] for c in range(d * d)] for i in range(d) for j in range(d)]
    return IsotypicBasis(d, blocks, linalg.inverse(change), labels)


def isotypic_coordinates(F: MatrixConcomitant) -> dict[tuple[int, int], Polynomial]:
    """Polynomial coefficients ``c_{s,k}`` with ``F = sum c_{s,k} B_{s,k}``."""
    basis = isotypic_basis(F.d)
    acc: dict[tuple[int, int], dict] = {}
    for exp, A in F.coefficient_matrices().items():
        for label, c in basis.coordinates(A).items():
            acc.setdefault(label, {})[exp] = c
    return {label: Polynomial(F.m, terms) for label, terms in sorted(acc.items())}


def _assemble(F: MatrixConcomitant, coords: dict, keep) -> MatrixConcomitant:
    basis = isotypic_basis(F.d)
    out = MatrixConcomitant.zero(F.m, F.d)
    for (s, k), c in coords.items():
        if keep(s):
            out = out + MatrixConcomitant.constant(basis.blocks[s][k], F.m) * c
    return out


def project(F: MatrixConcomitant, s: int) -> MatrixConcomitant:
    """Component of ``F`` in the ``V_{2s+1}`` block."""
    if not 0 <= s < F.d:
        raise ValueError(f"block {s} out of range 0..{F.d - 1}")
    return _assemble(F, isotypic_coordinates(F), lambda r: r == s)


def block_support(F: MatrixConcomitant) -> list[int]:
    """Blocks in which ``F`` has a nonzero component."""
    return sorted({s for (s, _), c in isotypic_coordinates(F).items() if c})


def lowering_chain(s: int, m: int) -> list[Polynomial]:
    """``(y d/dx)^k x^{2s}`` for ``k = 0..2s``."""
    x, y = Polynomial.var("x", m), Polynomial.var("y", m)
    chain = [x ** (2 * s)]
    for _ in range(2 * s):
        chain.append(y * chain[-1].diff("x"))
    return chain


def phi(Fs: MatrixConcomitant, s: int) -> BinaryFormCovariant:
    """Transfer a concomitant concentrated in block ``s`` to an order ``2s`` covariant."""
    coords = isotypic_coordinates(Fs)
    stray = sorted({r for (r, _), c in coords.items() if c and r != s})
    if stray:
        raise ValueError(f"input has components in blocks {stray}, not only in block {s}")
    chain = lowering_chain(s, Fs.m)
    total = Polynomial.zero(Fs.m)
    for (_, k), c in coords.items():
        total = total + c * chain[k]
    return BinaryFormCovariant(total, 2 * s)


def check_lemma51(m: int, d: int, s: int) -> bool:
    """``t1^s`` and ``t1^(s-1) [t1, t2]`` reach block ``s`` exactly (no higher, nonzero at ``s``)."""
    if not 1 <= s <= d - 1:
        raise ValueError(f"s must lie in 1..{d - 1}")
    if m < 2:
        raise ValueError("needs m >= 2")
    t1, t2 = t(1, d, m), t(2, d, m)
    for G in (t1**s, t1 ** (s - 1) * t1.commutator(t2)):
        support = block_support(G)
        if not support or max(support) != s:
            return False
    return True
