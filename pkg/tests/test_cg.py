import pytest

from sl2conc import linalg
from sl2conc.cg import (
    block_support,
    check_lemma51,
    isotypic_basis,
    isotypic_coordinates,
    lowering_chain,
    phi,
    project,
)
from sl2conc.classical import form_F, glm_act, jac_J
from sl2conc.matrixcon import commutator_t, embed_scalar, is_equivariant, proportionality, t, u
from sl2conc.sl2 import MatrixConcomitant, chevalley, psi_group, torus


@pytest.mark.parametrize("d", range(1, 9))
def test_basis_shape_and_rank(d):
    basis = isotypic_basis(d)
    assert basis.block_sizes() == [2 * s + 1 for s in range(d)]
    assert linalg.rank([linalg.flatten(M) for M in basis.matrices()]) == d * d


def test_d2_blocks():
    E, F, H = chevalley(2)
    blocks = isotypic_basis(2).blocks
    assert blocks[0] == [linalg.identity(2)]
    assert blocks[1] == [E, linalg.matscale(H, -1), linalg.matscale(F, -2)]


@pytest.mark.parametrize("d", [3, 4, 5])
def test_highest_weight_vectors(d):
    E, _, _ = chevalley(d)
    P = psi_group(d, torus(2))
    Pinv = linalg.inverse(P)
    for s, block in isotypic_basis(d).blocks.items():
        top = block[0]
        assert linalg.commutator(E, top) == linalg.zeros(d)
        moved = linalg.matmul(linalg.matmul(P, top), Pinv)
        assert moved == linalg.matscale(top, 2 ** (2 * s))


def test_project_examples():
    d, m = 4, 2
    f = u(1, 2, d, m)
    scalar = embed_scalar(f, d)
    assert project(scalar, 0) == scalar
    assert all(project(scalar, s).is_zero() for s in range(1, d))
    t1 = t(1, d, m)
    assert project(t1, 1) == t1
    assert all(project(t1, s).is_zero() for s in (0, 2, 3))
    assert project(t1 * t1, 3).is_zero()
    with pytest.raises(ValueError):
        project(t1, d)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_projection_properties(d):
    m = 2
    t1, t2 = t(1, d, m), t(2, d, m)
    for F in (t1, t1 * t1, t1 * t2, t1 * t2 * t1, embed_scalar(u(1, 1, d, m), d)):
        total = MatrixConcomitant.zero(m, d)
        for s in range(d):
            P = project(F, s)
            assert project(P, s) == P
            assert all(project(P, r).is_zero() for r in range(d) if r != s)
            total = total + P
        assert total == F


def test_blocks_are_equivariant():
    F = t(1, 3, 2) * t(2, 3, 2)
    for s in block_support(F):
        assert is_equivariant(project(F, s))


def test_lowering_chain():
    chain = lowering_chain(1, 1)
    assert [str(p) for p in chain] == ["x^2", "2 x y", "2 y^2"]


@pytest.mark.parametrize("s", [1, 2, 3])
def test_phi_highest_weight_images(s):
    d, m = 4, 2
    t1 = t(1, d, m)
    a = proportionality(phi(project(t1**s, s), s), form_F(1, m) ** s)
    G = t1 ** (s - 1) * commutator_t(1, 2, d, m)
    b = proportionality(phi(project(G, s), s), form_F(1, m) ** (s - 1) * jac_J(1, 2, m))
    assert a and b


def test_phi_of_t1_is_multiple_of_F1():
    for d in (2, 3, 5):
        assert proportionality(phi(project(t(1, d, 2), 1), 1), form_F(1, 2))


def test_phi_commutes_with_glm():
    d, m = 3, 2
    F = project(t(1, d, m) * t(2, d, m), 2)
    g = [[1, 2], [1, 3]]
    assert phi(glm_act(F, g), 2) == glm_act(phi(F, 2), g)


def test_phi_is_injective_on_samples():
    d, m = 3, 2
    t1, t2 = t(1, d, m), t(2, d, m)
    for F in (t1 * t1, t1 * t2, t1 * t2 + t2 * t1 * 3):
        P = project(F, 2)
        assert not P.is_zero() and not phi(P, 2).is_zero()


def test_phi_rejects_mixed_input():
    t1 = t(1, 3, 1)
    with pytest.raises(ValueError):
        phi(t1 * t1, 2)


def test_coordinates_of_t1():
    coords = isotypic_coordinates(t(1, 2, 1))
    assert set(coords) == {(1, 0), (1, 1), (1, 2)}


@pytest.mark.parametrize("d,s", [(3, 2), (2, 1), (4, 3), (4, 1), (4, 2)])
def test_lemma51(d, s):
    assert check_lemma51(2, d, s)


def test_lemma51_range():
    with pytest.raises(ValueError):
        check_lemma51(2, 3, 3)
    with pytest.raises(ValueError):
        check_lemma51(1, 3, 1)
