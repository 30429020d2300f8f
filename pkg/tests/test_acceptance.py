"""Acceptance criteria, each run at its stated scale and time budget.

Every criterion prints one ``PASS``/``FAIL`` line.  Run directly with
``python tests/test_acceptance.py`` for the summary alone.
"""
from __future__ import annotations

import sys
import time

import pytest

from sl2conc.cg import isotypic_basis, phi, project
from sl2conc.classical import check_syzygy_FJ, check_syzygy_JJ, disc_D, form_F, jac_J
from sl2conc.linalg import flatten, rank
from sl2conc.matrixcon import (
    HEF,
    alternating_part_w,
    charpoly_invariance,
    check_lemma52,
    commutator_t,
    embed_scalar,
    evaluate,
    is_central,
    is_equivariant,
    kappa,
    proportionality,
    st3,
    t,
    u,
    w,
    w_scale,
    words_span_dim,
)
from sl2conc.oracle import dim_Dqp, dim_Dqp_bruteforce, monomial_count, tableau_count
from sl2conc.sl2 import H_COORDS, MatrixConcomitant
from sl2conc.suites import EF_COORDS, brackets_ok
from sl2conc.verify import verify_algebra_generation, verify_module_decomposition


def c01_brackets():
    return all(brackets_ok(d) for d in range(2, 13))


def c02_equivariance():
    for m in (2, 3):
        for d in (2, 3, 4, 5):
            gens = [t(i, d, m) for i in range(1, m + 1)]
            gens += [embed_scalar(u(i, j, d, m), d) for i in range(1, m + 1) for j in range(i, m + 1)]
            if m == 3:
                gens.append(embed_scalar(w(1, 2, 3, d, m), d))
            if not all(is_equivariant(F) for F in gens):
                return False
    return True


def c03_syzygies():
    doubled = (jac_J(1, 2, 4) * jac_J(3, 4, 4)).poly * 2
    return check_syzygy_JJ().is_zero() and check_syzygy_FJ().is_zero() and check_syzygy_JJ(literal=True) == doubled


def c04_lemma52():
    if evaluate(st3(1, 2, 3, 2, 3), HEF) != [[3, 0], [0, 3]] or evaluate(w(1, 2, 3, 2, 3), HEF) != 1:
        return False
    return all(check_lemma52(d).is_zero() for d in range(2, 7))


def c05_clebsch_gordan():
    for d in range(2, 9):
        basis = isotypic_basis(d)
        if basis.block_sizes() != [2 * s + 1 for s in range(d)]:
            return False
        if rank([flatten(M) for M in basis.matrices()]) != d * d:
            return False
    m = 2
    for d in range(2, 6):
        t1, t2 = t(1, d, m), t(2, d, m)
        for F in (t1, t1 * t1, t1 * t2, embed_scalar(u(1, 1, d, m), d)):
            total = MatrixConcomitant.zero(m, d)
            for s in range(d):
                total = total + project(F, s)
            if total != F:
                return False
    return True


def c06_oracle():
    for m in (1, 2):
        for q in range(7):
            for p in range(5):
                a = dim_Dqp(m, q, p)
                if a != dim_Dqp_bruteforce(m, q, p):
                    return False
                if q % 2 and a:
                    return False
                if q % 2 == 0 and p < q // 2 and a:
                    return False
    return True


def c07_generation():
    for m, d in ((2, 3), (2, 4), (3, 3)):
        if not all(r.passed for r in verify_algebra_generation(m, d, 4)):
            return False
    for d in (3, 4, 5):
        if verify_algebra_generation(2, d, 2, use_u=False)[2].passed:
            return False
    return all(r.passed for r in verify_algebra_generation(2, 2, 4, use_u=False))


def c08_decomposition():
    for m, d in ((2, 3), (2, 4)):
        for r in verify_module_decomposition(m, d, 4):
            if not r.passed:
                return False
            parts = r.detail["parts"]
            s = r.degree
            if "t1^s" in parts and parts["t1^s"] != monomial_count(m, s):
                return False
            if "t1^(s-1)[t1,t2]" in parts and parts["t1^(s-1)[t1,t2]"] != tableau_count(m, s - 1):
                return False
    return True


def c09_center():
    if any(words_span_dim(d, H_COORDS, EF_COORDS, 2 * d) != d * d for d in range(2, 7)):
        return False
    m = 2
    for d in range(2, 7):
        for i in range(1, m + 1):
            if is_central(t(i, d, m)) is not None:
                return False
            for j in range(i, m + 1):
                if is_central(embed_scalar(u(i, j, d, m), d)) is None:
                    return False
    return True


def c10_phi():
    d, m = 4, 2
    t1 = t(1, d, m)
    for s in (1, 2, 3):
        a = proportionality(phi(project(t1**s, s), s), form_F(1, m) ** s)
        G = t1 ** (s - 1) * commutator_t(1, 2, d, m)
        b = proportionality(phi(project(G, s), s), form_F(1, m) ** (s - 1) * jac_J(1, 2, m))
        if not a or not b:
            return False
    return True


def c11_scalars():
    if kappa(2) != 2:
        return False
    for d in range(2, 7):
        k = kappa(d)
        if u(1, 2, d, 2) != disc_D(1, 2, 2).poly * k or not w_scale(d):
            return False
    return evaluate(alternating_part_w(1, 2, 3, 2, 3), HEF) == 1


def c12_charpoly():
    m = 2
    for d in (2, 3, 4):
        t1, t2 = t(1, d, m), t(2, d, m)
        if not (charpoly_invariance(t1) and charpoly_invariance(t1 + t2)):
            return False
    return True


CRITERIA = [
    (1, "bracket relations d=2..12", c01_brackets, 1),
    (2, "equivariance of t, uI, wI on the panel", c02_equivariance, 30),
    (3, "syzygies JJ (m=4) and FJ (m=3)", c03_syzygies, 1),
    (4, "St3 centrality identity d=2..6", c04_lemma52, 120),
    (5, "isotypic basis d=2..8 and projection completeness", c05_clebsch_gordan, 10),
    (6, "oracle equals brute force m<=2, q<=6, p<=4", c06_oracle, 300),
    (7, "algebra generation and t-only deficiency", c07_generation, 600),
    (8, "module decomposition and orbit dimensions", c08_decomposition, 600),
    (9, "center: Burnside span and central elements", c09_center, 30),
    (10, "phi images of highest weight vectors", c10_phi, 60),
    (11, "u = kappa D and alternation of w", c11_scalars, 30),
    (12, "charpoly coefficients invariant", c12_charpoly, 60),
]


def run_criterion(number, label, fn, budget):
    start = time.perf_counter()
    ok = bool(fn())
    elapsed = time.perf_counter() - start
    in_time = elapsed < budget
    verdict = "PASS" if ok and in_time else "FAIL"
    line = f"{verdict} criterion {number:2d}: {label} ({elapsed:.2f}s, budget {budget}s)"
    return ok, in_time, line


@pytest.mark.parametrize("number,label,fn,budget", CRITERIA, ids=[f"criterion{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, label, fn, budget, capsys):
    ok, in_time, line = run_criterion(number, label, fn, budget)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert in_time, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, _, line in results:
        print(line)
    sys.exit(0 if all(ok and in_time for ok, in_time, _ in results) else 1)
