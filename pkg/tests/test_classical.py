import itertools
from fractions import Fraction

import pytest

from sl2conc.classical import (
    BinaryFormCovariant,
    bidegree,
    check_covariance,
    check_syzygy_FJ,
    check_syzygy_JJ,
    det_E,
    disc_D,
    evaluate_slots,
    form_F,
    generator_families,
    glm_act,
    jac_J,
)
from sl2conc.qpoly import Polynomial
from sl2conc.sl2 import PANEL, E_COORDS, F_COORDS, H_COORDS
from sl2conc.verify import unipotent_panel


def P(text, m):
    return Polynomial.parse(text, m)


def test_form_F():
    F1 = form_F(1, 2)
    assert F1.poly == P("a1 x^2 + 2 b1 x y + c1 y^2", 2)
    assert bidegree(F1) == (2, 1)
    assert evaluate_slots(form_F(1, 1).poly, [H_COORDS]) == P("2 x y", 1)
    with pytest.raises(ValueError):
        form_F(3, 2)


def test_disc_D():
    assert disc_D(1, 1, 2).poly == P("b1^2 - a1 c1", 2)
    assert disc_D(1, 2, 2).poly == P("b1 b2 - 1/2 a1 c2 - 1/2 a2 c1", 2)
    assert disc_D(1, 2, 2) == disc_D(2, 1, 2)
    assert bidegree(disc_D(1, 2, 2)) == (0, 2)


def test_det_E():
    assert det_E(1, 1, 2, 3).is_zero()
    E = det_E(1, 2, 3, 3)
    assert evaluate_slots(E.poly, [H_COORDS, E_COORDS, F_COORDS]) == 1
    assert E.poly == -det_E(2, 1, 3, 3).poly
    assert bidegree(E) == (0, 3)


def test_jac_J():
    J = jac_J(1, 2, 2)
    assert J.coefficient_of(2) == P("a1 b2 - b1 a2", 2)
    assert jac_J(1, 1, 2).is_zero()
    assert J.poly == -jac_J(2, 1, 2).poly
    assert bidegree(J) == (2, 2)
    shear = [[1, 1], [0, 1]]
    assert glm_act(J, shear) == J


@pytest.mark.parametrize("family", ["F", "D", "E", "J"])
def test_generators_are_covariant(family):
    for _, G in generator_families(3)[family]:
        for g in PANEL:
            assert check_covariance(G, g).is_zero()


def test_syzygy_JJ():
    assert check_syzygy_JJ().is_zero()
    forms = [(1, 0, 0), (0, 0, 1), (0, Fraction(1, 2), 0), (1, 0, 1)]
    residual = evaluate_slots(check_syzygy_JJ(), forms)
    assert residual.is_zero()
    assert not check_syzygy_JJ(perturb=True).is_zero()
    doubled = (jac_J(1, 2, 4) * jac_J(3, 4, 4)).poly * 2
    assert check_syzygy_JJ(literal=True) == doubled
    with pytest.raises(ValueError):
        check_syzygy_JJ(m=3)


def test_syzygy_FJ():
    assert check_syzygy_FJ().is_zero()
    for order in itertools.permutations((1, 2, 3)):
        assert check_syzygy_FJ(order=order).is_zero()
    assert not check_syzygy_FJ(drop_middle=True).is_zero()
    with pytest.raises(ValueError):
        check_syzygy_FJ(m=2)


def test_glm_act_examples():
    F1 = form_F(1, 2)
    assert glm_act(F1, [[1, 0], [0, 1]]) == F1
    z = [[2, 0], [0, 3]]
    for s in (1, 2, 3):
        assert glm_act(F1**s, z) == F1**s * 2**s
        G = F1 ** (s - 1) * jac_J(1, 2, 2)
        assert glm_act(G, z) == G * (2**s * 3)
    with pytest.raises(ValueError):
        glm_act(F1, [[1, 1], [1, 1]])


def test_glm_act_composition():
    G = form_F(1, 2) * jac_J(1, 2, 2) + form_F(2, 2) ** 2 * disc_D(1, 1, 2)
    g, h = [[1, 2], [0, 1]], [[0, 1], [1, 3]]
    hg = [[sum(h[i][k] * g[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert glm_act(glm_act(G, g), h) == glm_act(G, hg)


def test_unipotent_invariance():
    F1 = form_F(1, 3)
    for s in (1, 2, 3):
        for G in (F1**s, F1 ** (s - 1) * jac_J(1, 2, 3)):
            assert all(glm_act(G, g) == G for g in unipotent_panel(3))


def test_covariant_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        BinaryFormCovariant(P("x^2 + y", 1), 2)
    with pytest.raises(ValueError):
        (form_F(1, 2) + disc_D(1, 1, 2) * form_F(1, 2)).degree
    with pytest.raises(ValueError):
        form_F(1, 2) + disc_D(1, 1, 2)
