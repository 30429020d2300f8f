"""Named batteries of exact checks, shared by the CLI and the acceptance tests.

A suite is a function ``(m, d, P, **opts) -> list[Check]``; unknown options
are ignored.  Checks are plain
records so that reports serialize deterministically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import linalg
from .cg import block_support, check_lemma51, isotypic_basis, phi, project
from .classical import check_syzygy_FJ, check_syzygy_JJ, form_F, jac_J
from .matrixcon import (
    charpoly_invariance,
    check_lemma52,
    commutator_t,
    is_central,
    is_equivariant,
    lemma52_scalar,
    proportionality,
    t,
    u,
    w,
    words_span_dim,
)
from .oracle import dim_Cd, dim_Cd_bruteforce
from .sl2 import E_COORDS, F_COORDS, H_COORDS, MatrixConcomitant, chevalley
from .verify import (
    verify_algebra_generation,
    verify_D0_generation,
    verify_D_generation,
    verify_highest_weight,
    verify_module_decomposition,
)

EF_COORDS = tuple(e + f for e, f in zip(E_COORDS, F_COORDS))


class ConfigError(ValueError):
    """A suite cannot run for the requested parameters."""


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    params: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "params": self.params, "values": self.values}


def brackets_ok(d: int) -> bool:
    E, F, H = chevalley(d)
    return (
        linalg.commutator(E, F) == H
        and linalg.commutator(H, E) == linalg.matscale(E, 2)
        and linalg.commutator(H, F) == linalg.matscale(F, -2)
    )


def _triples(m):
    return [(i, j, k) for i in range(1, m + 1) for j in range(i + 1, m + 1) for k in range(j + 1, m + 1)]


def suite_identities(m: int, d: int, P: int, **opts) -> list[Check]:
    out = [Check("identities", "chevalley_brackets", brackets_ok(d), {"d": d})]
    for i in range(1, m + 1):
        out.append(Check("identities", f"equivariant t{i}", is_equivariant(t(i, d, m)), {"m": m, "d": d}))
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            F = MatrixConcomitant.scalar(u(i, j, d, m), m, d)
            out.append(Check("identities", f"equivariant u{i}{j} I", is_equivariant(F), {"m": m, "d": d}))
    for i, j, k in _triples(m):
        F = MatrixConcomitant.scalar(w(i, j, k, d, m), m, d)
        out.append(Check("identities", f"equivariant w{i}{j}{k} I", is_equivariant(F), {"m": m, "d": d}))
    out.append(Check("identities", "charpoly invariant t1", charpoly_invariance(t(1, d, m)), {"m": m, "d": d}))
    if m >= 2:
        out.append(Check("identities", "charpoly invariant t1+t2", charpoly_invariance(t(1, d, m) + t(2, d, m)), {"m": m, "d": d}))
    return out


def suite_syzygies(m: int, d: int, P: int, **opts) -> list[Check]:
    return [
        Check("syzygies", "J12 J34 relation", check_syzygy_JJ().is_zero(), {"m": 4}),
        Check("syzygies", "F J relation", check_syzygy_FJ().is_zero(), {"m": 3}),
    ]


def suite_lemma52(m: int, d: int, P: int, **opts) -> list[Check]:
    if d < 2:
        raise ConfigError("lemma52 needs d >= 2")
    ok = check_lemma52(d).is_zero()
    return [Check("lemma52", "St3 is central", ok, {"d": d}, {"c_d": lemma52_scalar(d)})]


def suite_decomposition(m: int, d: int, P: int, **opts) -> list[Check]:
    basis = isotypic_basis(d)
    sizes = basis.block_sizes()
    out = [Check("decomposition", "block sizes", sizes == [2 * s + 1 for s in range(d)], {"d": d}, {"sizes": sizes})]
    samples = {"t1": t(1, d, m), "t1^2": t(1, d, m) ** 2, "u11 I": MatrixConcomitant.scalar(u(1, 1, d, m), m, d)}
    if m >= 2:
        samples["t1 t2"] = t(1, d, m) * t(2, d, m)
    for label, F in samples.items():
        total = MatrixConcomitant.zero(m, d)
        for s in block_support(F):
            total = total + project(F, s)
        out.append(Check("decomposition", f"projections sum to {label}", total == F, {"m": m, "d": d}))
    if m >= 2:
        t1 = t(1, d, m)
        for s in range(1, d):
            out.append(Check("decomposition", f"top block of degree {s} generators", check_lemma51(m, d, s), {"s": s}))
            a = proportionality(phi(project(t1**s, s), s), form_F(1, m) ** s)
            G = t1 ** (s - 1) * commutator_t(1, 2, d, m)
            b = proportionality(phi(project(G, s), s), form_F(1, m) ** (s - 1) * jac_J(1, 2, m))
            ok = bool(a) and bool(b)
            out.append(Check("decomposition", f"phi transfer s={s}", ok, {"s": s}, {"F1^s": _text(a), "F1^(s-1)J12": _text(b)}))
    return out


def _text(r) -> str | None:
    return None if r is None else str(r)


def _span_checks(suite: str, reports) -> list[Check]:
    return [
        Check(
            suite,
            r.theorem,
            r.passed,
            {"m": r.m, "d_or_q": r.d_or_q, "degree": r.degree},
            {"span_dim": r.span_dim, "oracle_dim": r.oracle_dim, "verdict": r.verdict, **r.detail},
        )
        for r in reports
    ]


def suite_generation(m: int, d: int, P: int, **opts) -> list[Check]:
    out = _span_checks("generation", verify_algebra_generation(m, d, P))
    if d >= 3 and P >= 2:
        r = verify_algebra_generation(m, d, 2, use_u=False)[2]
        out.append(Check("generation", "t alone misses u directions", not r.passed, {"m": m, "d": d, "degree": 2}, {"span_dim": r.span_dim, "oracle_dim": r.oracle_dim}))
    out += _span_checks("generation", verify_D0_generation(m, P))
    for q in range(2, 2 * d - 1, 2):
        out += _span_checks("generation", verify_D_generation(m, q, P))
    return out


def suite_module(m: int, d: int, P: int, **opts) -> list[Check]:
    if m < 2:
        raise ConfigError("the module decomposition needs m >= 2")
    out = _span_checks("module", verify_module_decomposition(m, d, P))
    for s in range(1, d):
        out.append(Check("module", f"highest weight vectors s={s}", verify_highest_weight(m, d, s), {"m": m, "d": d, "s": s}))
    return out


def suite_center(m: int, d: int, P: int, **opts) -> list[Check]:
    if m < 2:
        raise ConfigError("the center description holds for m >= 2 only")
    X = tuple(opts.get("witness_x") or H_COORDS)
    Y = tuple(opts.get("witness_y") or EF_COORDS)
    dim = words_span_dim(d, X, Y, 2 * d)
    params = {"d": d, "X": [str(c) for c in X], "Y": [str(c) for c in Y]}
    out = [Check("center", "words in X, Y span all matrices", dim == d * d, params, {"dim": dim})]
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            F = MatrixConcomitant.scalar(u(i, j, d, m), m, d)
            out.append(Check("center", f"u{i}{j} I central", is_central(F) is not None, {"m": m, "d": d}))
    for i in range(1, m + 1):
        out.append(Check("center", f"t{i} not central", is_central(t(i, d, m)) is None, {"m": m, "d": d}))
    return out


def suite_dims(m: int, d: int, P: int, **opts) -> list[Check]:
    out = []
    for p in range(P + 1):
        a, b = dim_Cd(m, d, p), dim_Cd_bruteforce(m, d, p)
        out.append(Check("dims", "oracle matches brute force", a == b, {"m": m, "d": d, "degree": p}, {"oracle": a, "bruteforce": b}))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "identities": suite_identities,
    "syzygies": suite_syzygies,
    "lemma52": suite_lemma52,
    "decomposition": suite_decomposition,
    "generation": suite_generation,
    "module": suite_module,
    "center": suite_center,
    "dims": suite_dims,
}

NEEDS_TWO_SLOTS = ("module", "center")


def run_suite(name: str, m: int, d: int, P: int, **opts) -> list[Check]:
    return SUITES[name](m, d, P, **opts)
