import pytest

from sl2conc.oracle import (
    LaurentPoly,
    dim_Cd,
    dim_Cd_bruteforce,
    dim_Dqp,
    dim_Dqp_bruteforce,
    hook_content_count,
    monomial_count,
    sym_adjoint_character,
    tableau_count,
    tableau_set,
)


def test_characters():
    assert sym_adjoint_character(1, 0)[0] == LaurentPoly({0: 1})
    assert sym_adjoint_character(1, 1)[1] == LaurentPoly({2: 1, 0: 1, -2: 1})
    assert sym_adjoint_character(2, 1)[1] == LaurentPoly({2: 2, 0: 2, -2: 2})
    assert all(chi.is_symmetric() for chi in sym_adjoint_character(3, 4))


def test_dim_Dqp_examples():
    assert dim_Dqp(2, 0, 2) == 3
    for m in (1, 2, 3):
        for p in range(5):
            assert dim_Dqp(m, 3, p) == 0
            assert dim_Dqp(m, 5, p) == 0
        for s in range(1, 4):
            assert all(dim_Dqp(m, 2 * s, p) == 0 for p in range(s))
    for p in range(7):
        assert dim_Dqp(1, 0, p) == (1 if p % 2 == 0 else 0)
    with pytest.raises(ValueError):
        dim_Dqp(2, -1, 0)


def test_dim_Cd_examples():
    for m in (1, 2, 3):
        assert dim_Cd(m, 3, 0) == 1
        assert dim_Cd(m, 4, 1) == m
    # t1^2 = D11 I for d = 2, so the degree 2 piece for one slot is one dimensional
    assert dim_Cd(1, 2, 2) == 1 == dim_Cd_bruteforce(1, 2, 2)


def test_nonnegative():
    for m in (1, 2, 3):
        for q in range(8):
            for p in range(6):
                assert dim_Dqp(m, q, p) >= 0


@pytest.mark.parametrize("m", [1, 2])
def test_bruteforce_agreement_Dqp(m):
    for q in range(7):
        for p in range(5):
            assert dim_Dqp(m, q, p) == dim_Dqp_bruteforce(m, q, p), (m, q, p)


@pytest.mark.parametrize("m,d", [(1, 2), (1, 3), (2, 2), (2, 3), (2, 4)])
def test_bruteforce_agreement_Cd(m, d):
    for p in range(5):
        assert dim_Cd(m, d, p) == dim_Cd_bruteforce(m, d, p), (m, d, p)


def test_monomial_count():
    assert [monomial_count(1, s) for s in range(5)] == [1] * 5
    assert monomial_count(2, 2) == 3
    for m in (1, 2, 3, 4):
        for s in range(1, 5):
            assert monomial_count(m, s) == dim_Dqp(m, 2 * s, s) == hook_content_count((s,), m)


def test_tableau_count():
    assert tableau_set(2, 1) == [(1, 2)]
    assert tableau_set(2, 2) == [(1, 1, 2), (1, 2, 2)]
    assert [tableau_count(1, s) for s in range(1, 5)] == [0] * 4
    for m in (1, 2, 3, 4):
        for s in range(1, 5):
            assert tableau_count(m, s) == dim_Dqp(m, 2 * s, s + 1) == hook_content_count((s, 1), m)
    with pytest.raises(ValueError):
        tableau_set(2, 0)
