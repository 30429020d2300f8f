"""Joint concomitants of m binary quadratic forms.

Slot ``i`` is the form ``f_i = a_i x^2 + 2 b_i xy + c_i y^2``.  The algebra
of SL2-equivariant polynomial maps into ``C[x, y]`` is generated by
``F_i``, ``D_ij``, ``E_ijk`` and ``J_ij``; this module builds them, the two
syzygies among them, and the right ``GL_m`` action on slots.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .qpoly import ContextError, Polynomial, Var, as_coeff, slot_mixing, slot_var
from .sl2 import ad_substitution, as_sl2


@dataclass(frozen=True)
class BinaryFormCovariant:
    """Homogeneous form of order ``q`` in ``x, y`` with slot-polynomial coefficients."""

    poly: Polynomial
    order: int

    def __post_init__(self):
        if any(md.form != self.order for md in self.poly.multidegrees()):
            raise ValueError(f"not homogeneous of order {self.order} in x, y")

    @classmethod
    def of(cls, poly: Polynomial) -> "BinaryFormCovariant":
        orders = {md.form for md in poly.multidegrees()}
        if len(orders) > 1:
            raise ValueError("polynomial is not homogeneous in x, y")
        return cls(poly, orders.pop() if orders else 0)

    @property
    def m(self) -> int:
        return self.poly.m

    def degrees(self) -> set[int]:
        return {md.total for md in self.poly.multidegrees()}

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"covariant is not homogeneous in the slots: {sorted(degs)}")
        return degs.pop()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __add__(self, other: "BinaryFormCovariant") -> "BinaryFormCovariant":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if other.order != self.order:
            raise ValueError("cannot add covariants of different order")
        return BinaryFormCovariant(self.poly + other.poly, self.order)

    def __neg__(self) -> "BinaryFormCovariant":
        return BinaryFormCovariant(-self.poly, self.order)

    def __sub__(self, other: "BinaryFormCovariant") -> "BinaryFormCovariant":
        return self + (-other)

    def __mul__(self, other) -> "BinaryFormCovariant":
        if isinstance(other, BinaryFormCovariant):
            return BinaryFormCovariant(self.poly * other.poly, self.order + other.order)
        return BinaryFormCovariant(self.poly * other, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BinaryFormCovariant":
        return BinaryFormCovariant(self.poly**k, self.order * k)

    def subs(self, mapping, partial: bool = False) -> "BinaryFormCovariant":
        return BinaryFormCovariant.of(self.poly.subs(mapping, partial))

    def component(self, degree: int) -> "BinaryFormCovariant":
        return BinaryFormCovariant(self.poly.homogeneous_component(degree), self.order)

    def coefficient_of(self, xpow: int) -> Polynomial:
        """Slot-polynomial coefficient of ``x^xpow y^(order - xpow)``."""
        m = self.m
        out = {}
        for exp, c in self.poly._terms.items():
            if exp[3 * m] == xpow:
                e = list(exp)
                e[3 * m] = e[3 * m + 1] = 0
                out[tuple(e)] = c
        return Polynomial(m, out)

    def to_text(self) -> str:
        return self.poly.to_text()

    __str__ = to_text


def _check_slots(m: int, *slots: int):
    for i in slots:
        if not 1 <= i <= m:
            raise ValueError(f"slot {i} out of range 1..{m}")


def _abc(i: int, m: int):
    return tuple(slot_var(k, i, m) for k in "abc")


def form_F(i: int, m: int) -> BinaryFormCovariant:
    _check_slots(m, i)
    a, b, c = _abc(i, m)
    x, y = Polynomial.var("x", m), Polynomial.var("y", m)
    return BinaryFormCovariant(a * x * x + b * x * y * 2 + c * y * y, 2)


def disc_D(i: int, j: int, m: int) -> BinaryFormCovariant:
    """Polarized discriminant ``b_i b_j - (a_i c_j + a_j c_i) / 2``."""
    _check_slots(m, i, j)
    ai, bi, ci = _abc(i, m)
    aj, bj, cj = _abc(j, m)
    return BinaryFormCovariant(bi * bj - (ai * cj + aj * ci) * Fraction(1, 2), 0)


def det_E(i: int, j: int, k: int, m: int) -> BinaryFormCovariant:
    _check_slots(m, i, j, k)
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = _abc(i, m), _abc(j, m), _abc(k, m)
    value = a1 * (b2 * c3 - c2 * b3) - b1 * (a2 * c3 - c2 * a3) + c1 * (a2 * b3 - b2 * a3)
    return BinaryFormCovariant(value, 0)


def jac_J(i: int, j: int, m: int) -> BinaryFormCovariant:
    """A quarter of the Jacobian of ``f_i, f_j``."""
    _check_slots(m, i, j)
    a1, b1, c1 = _abc(i, m)
    a2, b2, c2 = _abc(j, m)
    x, y = Polynomial.var("x", m), Polynomial.var("y", m)
    value = (a1 * b2 - b1 * a2) * x * x + (a1 * c2 - c1 * a2) * x * y + (b1 * c2 - c1 * b2) * y * y
    return BinaryFormCovariant(value, 2)


def bidegree(F: BinaryFormCovariant) -> tuple[int, int]:
    """``(order, degree)``."""
    return F.order, F.degree


def check_syzygy_JJ(m: int = 4, perturb: bool = False, literal: bool = False) -> Polynomial:
    """``J12 J34 - (D13 F2 F4 + D24 F1 F3 - D14 F2 F3 - D23 F1 F4)``.

    With the normalizations used here (``D_ii = b_i^2 - a_i c_i`` and ``J`` a
    quarter Jacobian) this is the zero polynomial.  ``literal`` negates the
    right-hand side, i.e. evaluates the relation with the opposite overall
    sign convention; the result is then ``2 J12 J34``.  ``perturb`` flips the
    sign of the last term only.
    """
    if m < 4:
        raise ValueError("needs m >= 4")
    F = {i: form_F(i, m) for i in range(1, 5)}

    def D(i, j):
        return disc_D(i, j, m)

    lhs = jac_J(1, 2, m) * jac_J(3, 4, m)
    last = D(2, 3) * F[1] * F[4]
    rhs = D(1, 3) * F[2] * F[4] + D(2, 4) * F[1] * F[3] - D(1, 4) * F[2] * F[3]
    rhs = rhs + last if perturb else rhs - last
    if literal:
        rhs = -rhs
    return (lhs - rhs).poly


def check_syzygy_FJ(m: int = 3, order=(1, 2, 3), drop_middle: bool = False) -> Polynomial:
    """``F_i J_jk - F_j J_ik + F_k J_ij`` for ``(i, j, k) = order``."""
    if m < 3:
        raise ValueError("needs m >= 3")
    i, j, k = order
    terms = [form_F(i, m) * jac_J(j, k, m), -(form_F(j, m) * jac_J(i, k, m)), form_F(k, m) * jac_J(i, j, m)]
    if drop_middle:
        del terms[1]
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return total.poly


def glm_act(F, g):
    """Right ``GL_m`` action ``(gF)(X) = F(X.g)`` on any slot-polynomial object."""
    m = F.m
    g = [[as_coeff(x) for x in row] for row in g]
    if linalg.det(g) == 0:
        raise ValueError("GL_m element must be invertible")
    return F.subs(slot_mixing(g, m))


def form_substitution(g, m: int) -> dict[Var, Polynomial]:
    """Assignment ``x -> g11 x + g21 y``, ``y -> g12 x + g22 y`` (the action on forms)."""
    (g11, g12), (g21, g22) = as_sl2(g)
    x, y = Polynomial.var("x", m), Polynomial.var("y", m)
    return {Var("x"): x * g11 + y * g21, Var("y"): x * g12 + y * g22}


def check_covariance(F: BinaryFormCovariant, g) -> Polynomial:
    """``F(Ad(g) X) - g.F(X)``; zero exactly when ``F`` is equivariant under ``g``."""
    m = F.m
    moved = F.poly.subs(ad_substitution(g, m), partial=True)
    acted = F.poly.subs(form_substitution(g, m), partial=True)
    return moved - acted


def generator_families(m: int) -> dict[str, list[tuple[tuple[int, ...], BinaryFormCovariant]]]:
    """The generating covariants ``F_i, D_ij (i<=j), E_ijk (i<j<k), J_ij (i<j)``."""
    r = range(1, m + 1)
    return {
        "F": [((i,), form_F(i, m)) for i in r],
        "D": [((i, j), disc_D(i, j, m)) for i in r for j in r if i <= j],
        "E": [((i, j, k), det_E(i, j, k, m)) for i in r for j in r for k in r if i < j < k],
        "J": [((i, j), jac_J(i, j, m)) for i in r for j in r if i < j],
    }


def evaluate_slots(poly: Polynomial, points) -> Polynomial:
    """Substitute numeric coordinates ``points[i] = (a, b, c)`` into slot ``i + 1``."""
    mapping = {}
    for i, pt in enumerate(points):
        for n, k in enumerate("abc"):
            mapping[Var(k, i + 1)] = pt[n]
    return poly.subs(mapping, partial=True)


__all__ = [
    "BinaryFormCovariant",
    "ContextError",
    "form_F",
    "disc_D",
    "det_E",
    "jac_J",
    "check_syzygy_JJ",
    "check_syzygy_FJ",
    "glm_act",
    "check_covariance",
]
