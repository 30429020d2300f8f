from fractions import Fraction

import pytest

from sl2conc import linalg
from sl2conc.classical import disc_D
from sl2conc.sl2 import (
    PANEL,
    MatrixConcomitant,
    ad_coords,
    ad_substitution,
    as_sl2,
    chevalley,
    is_tridiagonal,
    lower,
    psi_group,
    rho_generic,
    torus,
    upper,
)
from sl2conc.suites import brackets_ok


@pytest.mark.parametrize("d", range(1, 13))
def test_bracket_relations(d):
    assert brackets_ok(d)


def test_chevalley_small_cases():
    E, F, H = chevalley(2)
    assert E == [[0, 1], [0, 0]]
    assert F == [[0, 0], [1, 0]]
    assert H == [[1, 0], [0, -1]]
    assert chevalley(3)[2] == [[2, 0, 0], [0, 0, 0], [0, 0, -2]]
    E4, F4, _ = chevalley(4)
    assert [E4[i][i + 1] for i in range(3)] == [1, 2, 3]
    assert [F4[i + 1][i] for i in range(3)] == [3, 2, 1]
    with pytest.raises(ValueError):
        chevalley(0)


def test_rho_generic_entries():
    t1 = rho_generic(2, 1, 1)
    assert [[str(t1[i, j]) for j in range(2)] for i in range(2)] == [["b1", "-a1"], ["c1", "-b1"]]
    assert str(rho_generic(3, 1, 1)[0, 1]) == "-a1"
    t4 = rho_generic(4, 1, 1)
    assert t4[0, 2] == 0 and is_tridiagonal(t4)
    with pytest.raises(ValueError):
        rho_generic(3, 3, 2)


def test_psi_group_examples():
    assert psi_group(3, linalg.identity(2)) == linalg.identity(3)
    g = torus(2)
    assert psi_group(2, g) == [[2, 0], [0, Fraction(1, 2)]]
    assert psi_group(3, g) == [[4, 0, 0], [0, 1, 0], [0, 0, Fraction(1, 4)]]


@pytest.mark.parametrize("d", [2, 3, 4])
def test_psi_group_is_multiplicative(d):
    for g in PANEL:
        for h in PANEL:
            gh = linalg.matmul(g, h)
            assert psi_group(d, gh) == linalg.matmul(psi_group(d, g), psi_group(d, h))


def test_rejects_non_unimodular():
    with pytest.raises(ValueError):
        as_sl2([[2, 0], [0, 1]])
    with pytest.raises(ValueError):
        psi_group(2, [[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        ad_coords([[3, 0], [0, 1]])


def test_ad_coords_preserves_discriminant():
    assert ad_coords(linalg.identity(2)) == linalg.identity(3)
    D = disc_D(1, 1, 1).poly
    for g in PANEL + (upper(Fraction(-3, 7)), lower(5)):
        assert D.subs(ad_substitution(g, 1)) == D


@pytest.mark.parametrize("d", [2, 3, 4])
def test_ad_matches_conjugation(d):
    t1 = rho_generic(d, 1, 1)
    for g in PANEL:
        assert t1.subs(ad_substitution(g, 1)) == t1.conjugate(psi_group(d, g))


@pytest.mark.parametrize("d", [2, 3, 5])
def test_matrix_units_are_torus_weight_vectors(d):
    P = psi_group(d, torus(2))
    Pinv = linalg.inverse(P)
    for i in range(d):
        for j in range(d):
            unit = [[int((r, c) == (i, j)) for c in range(d)] for r in range(d)]
            moved = linalg.matmul(linalg.matmul(P, unit), Pinv)
            assert moved == linalg.matscale(unit, Fraction(2) ** (2 * (j - i)))


def test_matrix_concomitant_algebra():
    t1, t2 = rho_generic(3, 1, 2), rho_generic(3, 2, 2)
    one = MatrixConcomitant.scalar(1, 2, 3)
    assert one * t1 == t1 == t1 * one
    assert t1.commutator(t2) == -(t2.commutator(t1))
    assert t1.trace() == 0
    with pytest.raises(ValueError):
        t1 + rho_generic(2, 1, 2)
