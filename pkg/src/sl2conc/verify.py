"""Span checks by degree, as exact ranks compared with the dimension oracle."""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .classical import BinaryFormCovariant, generator_families, glm_act
from .linalg import EchelonBasis
from .matrixcon import commutator_t, t, u, w
from .oracle import dim_Cd, dim_Dqp, monomial_count, tableau_count
from .qpoly import Polynomial
from .sl2 import MatrixConcomitant

log = logging.getLogger(__name__)


@dataclass
class SpanReport:
    theorem: str
    m: int
    d_or_q: int
    degree: int
    span_dim: int
    oracle_dim: int
    verdict: str
    witnesses: list[str] = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "equal"

    def to_json(self) -> dict:
        out = asdict(self)
        out["witnesses"] = len(self.witnesses)
        return out


def _report(theorem, m, dq, p, span, oracle, witnesses, ok=None, **detail) -> SpanReport:
    if span > oracle:
        raise AssertionError(f"{theorem}: span {span} exceeds oracle {oracle} at degree {p}")
    if ok is None:
        ok = span == oracle
    return SpanReport(theorem, m, dq, p, span, oracle, "equal" if ok else "deficient", witnesses, detail)


# -- spanning sets of C^(d) --------------------------------------------------------


@lru_cache(maxsize=None)
def _t_word(word: tuple[int, ...], d: int, m: int) -> MatrixConcomitant:
    if not word:
        return MatrixConcomitant.scalar(1, m, d)
    return _t_word(word[:-1], d, m) * t(word[-1], d, m)


@lru_cache(maxsize=None)
def _u_poly(i: int, j: int, d: int, m: int) -> Polynomial:
    return u(i, j, d, m)


def _u_pairs(m: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]


def generator_monomials(m: int, d: int, p: int, use_u: bool = True) -> dict[str, MatrixConcomitant]:
    """All degree ``p`` products of ``t_i`` and (central) ``u_ij I``."""
    out = {}
    pairs = _u_pairs(m) if use_u else []
    for nu in range(p // 2 + 1 if use_u else 1):
        for upart in combinations_with_replacement(pairs, nu):
            scalar = Polynomial.one(m)
            for i, j in upart:
                scalar = scalar * _u_poly(i, j, d, m)
            for word in product(range(1, m + 1), repeat=p - 2 * nu):
                label = "".join(f"u{i}{j}" for i, j in upart) + "".join(f"t{i}" for i in word)
                out[label or "1"] = _t_word(word, d, m) * scalar
    return out


def verify_algebra_generation(m: int, d: int, P: int, use_u: bool | None = None) -> list[SpanReport]:
    """Span of generator monomials per degree against ``dim C^(d)_p``.

    By default the ``u_ij I`` are included for ``d >= 3`` and left out for
    ``d = 2``, where the ``t_i`` alone generate.
    """
    if use_u is None:
        use_u = d >= 3
    reports = []
    for p in range(P + 1):
        monos = generator_monomials(m, d, p, use_u)
        basis = EchelonBasis()
        basis.extend(F.flatten() for F in monos.values())
        gens = "t,u" if use_u else "t"
        reports.append(_report(f"algebra_generation[{gens}]", m, d, p, basis.rank, dim_Cd(m, d, p), list(monos)))
        log.debug("generation m=%d d=%d p=%d rank=%d", m, d, p, basis.rank)
    return reports


# -- GL_m orbit spans -------------------------------------------------------------------


def gl_generators(m: int) -> list[list[list[int]]]:
    """Elementary ``I + E_ij`` (i != j) and adjacent transpositions."""
    gens = []
    for i in range(m):
        for j in range(m):
            if i != j:
                g = [[int(r == c) for c in range(m)] for r in range(m)]
                g[i][j] = 1
                gens.append(g)
    for i in range(m - 1):
        g = [[int(r == c) for c in range(m)] for r in range(m)]
        g[i][i] = g[i + 1][i + 1] = 0
        g[i][i + 1] = g[i + 1][i] = 1
        gens.append(g)
    return gens


def gl_orbit_span(F) -> list:
    """Basis of the linear span of the ``GL_m`` orbit, closed until the rank stabilizes."""
    basis = EchelonBasis()
    kept = []
    queue = [F]
    gens = gl_generators(F.m)
    while queue:
        G = queue.pop()
        if not basis.add(_flat(G)):
            continue
        kept.append(G)
        queue.extend(glm_act(G, g) for g in gens)
    return kept


def _flat(F) -> dict:
    if isinstance(F, MatrixConcomitant):
        return F.flatten()
    poly = getattr(F, "poly", F)
    return dict(poly._terms)


def verify_module_decomposition(m: int, d: int, P: int) -> list[SpanReport]:
    """Per degree: ``D0+ C`` plus the two highest-weight orbits is direct and exhausts ``C^(d)_p``."""
    if m < 2 or d < 2:
        raise ValueError("needs m >= 2 and d >= 2")
    t1, t2 = t(1, d, m), t(2, d, m)
    triples = [(i, j, k) for i in range(1, m + 1) for j in range(i + 1, m + 1) for k in range(j + 1, m + 1)]
    reports = []
    for p in range(P + 1):
        ideal = EchelonBasis()
        if p >= 2:
            lower = generator_monomials(m, d, p - 2)
            for i, j in _u_pairs(m):
                ideal.extend((G * _u_poly(i, j, d, m)).flatten() for G in lower.values())
        if p >= 3:
            lower = generator_monomials(m, d, p - 3)
            for i, j, k in triples:
                wf = w(i, j, k, d, m)
                ideal.extend((G * wf).flatten() for G in lower.values())
        parts = {"ideal": ideal.rank}
        total = ideal.copy()
        expected = {}
        if p <= d - 1:
            orbit = gl_orbit_span(t1**p)
            parts["t1^s"] = len(orbit)
            expected["t1^s"] = monomial_count(m, p)
            total.extend(G.flatten() for G in orbit)
        s = p - 1
        if 1 <= s <= d - 1:
            orbit = gl_orbit_span(t1 ** (s - 1) * t1.commutator(t2))
            parts["t1^(s-1)[t1,t2]"] = len(orbit)
            expected["t1^(s-1)[t1,t2]"] = tableau_count(m, s)
            total.extend(G.flatten() for G in orbit)
        direct = total.rank == sum(parts.values())
        sizes_ok = all(parts[k] == v for k, v in expected.items())
        oracle = dim_Cd(m, d, p)
        reports.append(
            _report(
                "module_decomposition",
                m,
                d,
                p,
                total.rank,
                oracle,
                list(parts),
                ok=direct and sizes_ok and total.rank == oracle,
                parts=parts,
                expected_orbit_dims=expected,
                direct=direct,
            )
        )
    return reports


# -- classical algebra D -------------------------------------------------------------


def _covariant_monomials(m: int, order: int, p: int, families=("F", "D", "E", "J"), drop=None):
    """Products of generator covariants with given order and degree.

    ``drop`` removes one generator, given as ``(family, indices)``.
    """
    gens = []
    fam = generator_families(m)
    for name in families:
        for idx, G in fam[name]:
            if drop == (name, idx):
                continue
            gens.append((f"{name}{''.join(map(str, idx))}", G, G.order, G.degree))
    out = {}

    def rec(start, order_left, deg_left, label, acc):
        if order_left == 0 and deg_left == 0:
            out[label or "1"] = acc
            return
        for n in range(start, len(gens)):
            name, G, q, dg = gens[n]
            if q <= order_left and dg <= deg_left:
                rec(n, order_left - q, deg_left - dg, label + name, acc * G)

    rec(0, order, p, "", BinaryFormCovariant(Polynomial.one(m), 0))
    return out


def verify_D0_generation(m: int, P: int) -> list[SpanReport]:
    """Monomials in ``D_ij``, ``E_ijk`` span the invariants; each generator is needed."""
    fam = generator_families(m)
    reports = []
    for p in range(P + 1):
        monos = _covariant_monomials(m, 0, p, ("D", "E"))
        rank = EchelonBasis()
        rank.extend(_flat(G) for G in monos.values())
        detail = {}
        minimal = True
        own = [("D", idx) for idx, _ in fam["D"]] if p == 2 else []
        own += [("E", idx) for idx, _ in fam["E"]] if p == 3 else []
        for gen in own:
            reduced = EchelonBasis()
            reduced.extend(_flat(G) for G in _covariant_monomials(m, 0, p, ("D", "E"), drop=gen).values())
            drop = rank.rank - reduced.rank
            detail[f"{gen[0]}{''.join(map(str, gen[1]))}"] = drop
            minimal &= drop >= 1
        oracle = dim_Dqp(m, 0, p)
        reports.append(
            _report("D0_generation", m, 0, p, rank.rank, oracle, list(monos), ok=rank.rank == oracle and minimal, rank_drop=detail)
        )
    return reports


def verify_D_generation(m: int, q: int, P: int) -> list[SpanReport]:
    reports = []
    for p in range(P + 1):
        monos = _covariant_monomials(m, q, p) if q % 2 == 0 else {}
        basis = EchelonBasis()
        basis.extend(_flat(G) for G in monos.values())
        reports.append(_report("D_generation", m, q, p, basis.rank, dim_Dqp(m, q, p), list(monos)))
    return reports


# -- GL_m highest weights ------------------------------------------------------------


def unipotent_panel(m: int):
    panel = []
    for i in range(m):
        for j in range(i + 1, m):
            for r in (1, 2, Fraction(1, 2)):
                g = [[Fraction(int(a == b)) for b in range(m)] for a in range(m)]
                g[i][j] = Fraction(r)
                panel.append(g)
    return panel


PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


def verify_highest_weight(m: int, d: int, s: int) -> bool:
    """``t1^s`` and ``t1^(s-1)[t1, t2]`` are U-fixed with weights ``(s,0,..)`` and ``(s,1,0,..)``."""
    if m < 2 or not 1 <= s <= d - 1:
        raise ValueError("needs m >= 2 and 1 <= s <= d - 1")
    if m > len(PRIMES):
        raise ValueError("too many slots for the diagonal panel")
    t1 = t(1, d, m)
    vectors = [(t1**s, (s,) + (0,) * (m - 1)), (t1 ** (s - 1) * commutator_t(1, 2, d, m), (s, 1) + (0,) * (m - 2))]
    z = PRIMES[:m]
    diag = [[z[i] if i == j else 0 for j in range(m)] for i in range(m)]
    for G, weight in vectors:
        if any(glm_act(G, g) != G for g in unipotent_panel(m)):
            return False
        factor = 1
        for zi, wi in zip(z, weight):
            factor *= zi**wi
        if glm_act(G, diag) != G * factor:
            return False
    return True
