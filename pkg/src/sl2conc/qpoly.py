"""Sparse multivariate polynomials with exact rational coefficients.

Variables come in two families. Each slot ``i`` (1..m) carries the
coordinates ``a_i, b_i, c_i`` of the traceless matrix
``(b, -a; c, -b)``, equivalently the binary quadratic form
``a x^2 + 2 b xy + c y^2``.  The form variables ``x, y`` are shared.

A polynomial lives in a fixed context ``m`` and stores its terms as a
dict from exponent tuples (length ``3m + 2``, ordered
``a1 b1 c1 a2 ... cm x y``) to nonzero coefficients.  Coefficients are
``int`` when integral and ``fractions.Fraction`` otherwise.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import lcm
from operator import add
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

Coeff = Union[int, Fraction]

SLOT_KINDS = ("a", "b", "c")
FORM_KINDS = ("x", "y")


class ContextError(ValueError):
    """Raised when objects built for different slot counts are combined."""


def as_coeff(value) -> Coeff:
    """Normalize a number to ``int`` or ``Fraction``."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q


class Var(NamedTuple):
    kind: str
    slot: int = 0

    def __str__(self) -> str:
        return self.kind if self.kind in FORM_KINDS else f"{self.kind}{self.slot}"

    @classmethod
    def parse(cls, name: str) -> "Var":
        if name in FORM_KINDS:
            return cls(name, 0)
        match = re.fullmatch(r"([abc])(\d+)", name)
        if not match:
            raise ValueError(f"not a variable name: {name!r}")
        return cls(match.group(1), int(match.group(2)))

    def index(self, m: int) -> int:
        if self.kind in FORM_KINDS:
            return 3 * m + FORM_KINDS.index(self.kind)
        if self.kind not in SLOT_KINDS:
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if not 1 <= self.slot <= m:
            raise ValueError(f"slot {self.slot} out of range 1..{m}")
        return 3 * (self.slot - 1) + SLOT_KINDS.index(self.kind)


def variables(m: int) -> list[Var]:
    """All variables of context ``m`` in exponent-vector order."""
    out = [Var(k, i) for i in range(1, m + 1) for k in SLOT_KINDS]
    out.extend(Var(k) for k in FORM_KINDS)
    return out


class MultiDegree(NamedTuple):
    slots: tuple[int, ...]
    form: int

    @property
    def total(self) -> int:
        return sum(self.slots)


def multidegree(exp: tuple[int, ...], m: int) -> MultiDegree:
    slots = tuple(exp[3 * i] + exp[3 * i + 1] + exp[3 * i + 2] for i in range(m))
    return MultiDegree(slots, exp[3 * m] + exp[3 * m + 1])


class Polynomial:
    """Immutable sparse polynomial over the rationals in context ``m``."""

    __slots__ = ("m", "_terms", "_hash")

    def __init__(self, m: int, terms: Mapping[tuple[int, ...], object] | None = None):
        if m < 0:
            raise ValueError("m must be nonnegative")
        self.m = m
        clean: dict[tuple[int, ...], Coeff] = {}
        n = 3 * m + 2
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for m={m}")
            c = as_coeff(c)
            if c:
                clean[exp] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, m: int, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.m = m
        p._terms = terms
        p._hash = None
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "Polynomial":
        return cls._raw(m, {})

    @classmethod
    def const(cls, value, m: int) -> "Polynomial":
        c = as_coeff(value)
        return cls._raw(m, {(0,) * (3 * m + 2): c} if c else {})

    @classmethod
    def one(cls, m: int) -> "Polynomial":
        return cls.const(1, m)

    @classmethod
    def var(cls, v: Var | str, m: int) -> "Polynomial":
        if isinstance(v, str):
            v = Var.parse(v)
        exp = [0] * (3 * m + 2)
        exp[v.index(m)] = 1
        return cls._raw(m, {tuple(exp): 1})

    # -- basic access ------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], Coeff]]:
        """Terms in canonical order (lexicographically largest exponent first)."""
        for exp in sorted(self._terms, reverse=True):
            yield exp, self._terms[exp]

    def coefficient(self, exp: Iterable[int]) -> Coeff:
        return self._terms.get(tuple(exp), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * (3 * self.m + 2), 0)

    def occurring_variables(self) -> list[Var]:
        used = [False] * (3 * self.m + 2)
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return [v for v, u in zip(variables(self.m), used) if u]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.m != self.m:
                raise ContextError(f"context mismatch: m={self.m} vs m={other.m}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.const(other, self.m)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return Polynomial._raw(self.m, _normalize(terms))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.m, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Polynomial":
        c = as_coeff(c)
        if not c:
            return Polynomial.zero(self.m)
        return Polynomial._raw(self.m, _normalize({e: v * c for e, v in self._terms.items()}))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple[int, ...], Coeff] = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(map(add, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return Polynomial._raw(self.m, _normalize({e: c for e, c in out.items() if c}))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.m == other.m and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == Polynomial.const(other, self.m)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, frozenset(self._terms.items())))
        return self._hash

    # -- grading -----------------------------------------------------------

    def multidegrees(self) -> set[MultiDegree]:
        return {multidegree(e, self.m) for e in self._terms}

    def homogeneous_component(
        self,
        degree: int | None = None,
        *,
        slots: Mapping[int, int] | Iterable[int] | None = None,
        form: int | None = None,
    ) -> "Polynomial":
        """Terms of the requested degree.

        ``degree`` is the total degree in the slot variables, ``form`` the
        degree in ``x, y``; ``slots`` pins per-slot degrees, either as a full
        vector or as a mapping ``{slot: degree}`` for a subset of slots.
        """
        if slots is not None and not isinstance(slots, Mapping):
            vec = tuple(slots)
            if len(vec) != self.m:
                raise ValueError("slot degree vector has wrong length")
            slots = {i + 1: d for i, d in enumerate(vec)}
        out = {}
        for exp, c in self._terms.items():
            md = multidegree(exp, self.m)
            if degree is not None and md.total != degree:
                continue
            if form is not None and md.form != form:
                continue
            if slots is not None and any(md.slots[i - 1] != d for i, d in slots.items()):
                continue
            out[exp] = c
        return Polynomial._raw(self.m, out)

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        """Split by total slot degree."""
        parts: dict[int, dict] = {}
        for exp, c in self._terms.items():
            parts.setdefault(multidegree(exp, self.m).total, {})[exp] = c
        return {k: Polynomial._raw(self.m, v) for k, v in sorted(parts.items())}

    # -- substitution ------------------------------------------------------

    def subs(self, mapping: Mapping[Var | str, object], partial: bool = False) -> "Polynomial":
        """Substitute polynomials (or numbers) for variables.

        Every variable occurring in ``self`` must be assigned unless
        ``partial`` is set, in which case unassigned variables stay put.
        """
        m = self.m
        images: list[Polynomial | None] = [None] * (3 * m + 2)
        for v, img in mapping.items():
            if isinstance(v, str):
                v = Var.parse(v)
            if not isinstance(img, Polynomial):
                img = Polynomial.const(img, m)
            elif img.m != m:
                raise ContextError("substitution image lives in another context")
            images[v.index(m)] = img
        for v in self.occurring_variables():
            if images[v.index(m)] is None:
                if not partial:
                    raise KeyError(f"variable {v} occurs but is not assigned")
                images[v.index(m)] = Polynomial.var(v, m)
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return powers[key]

        out: dict[tuple[int, ...], Coeff] = {}
        for exp, c in self._terms.items():
            term = Polynomial.const(c, m)
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            for e2, c2 in term._terms.items():
                s = out.get(e2, 0) + c2
                if s:
                    out[e2] = s
                else:
                    del out[e2]
        return Polynomial._raw(m, _normalize(out))

    def diff(self, v: Var | str) -> "Polynomial":
        if isinstance(v, str):
            v = Var.parse(v)
        i = v.index(self.m)
        out = {}
        for exp, c in self._terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = c * exp[i]
        return Polynomial._raw(self.m, out)

    def content_denominator(self) -> int:
        """Least common multiple of coefficient denominators."""
        return reduce(lcm, (Fraction(c).denominator for c in self._terms.values()), 1)

    # -- text form ---------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        names = [str(v) for v in variables(self.m)]
        pieces = []
        for exp, c in self.items():
            mono = " ".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exp) if e
            )
            mag = abs(c)
            ctext = format_rational(mag)
            if mono:
                body = mono if mag == 1 else f"{ctext} {mono}"
            else:
                body = ctext
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Polynomial(m={self.m}, {self.to_text()!r})"

    @classmethod
    def parse(cls, text: str, m: int) -> "Polynomial":
        """Inverse of :meth:`to_text`."""
        text = text.strip()
        if text == "0":
            return cls.zero(m)
        tokens = text.split()
        terms: dict[tuple[int, ...], Coeff] = {}
        sign = 1
        i = 0
        expect_sign = False
        n = 3 * m + 2
        while i < len(tokens):
            tok = tokens[i]
            if expect_sign:
                if tok not in "+-":
                    raise ValueError(f"expected sign at {tok!r}")
                sign = 1 if tok == "+" else -1
                i += 1
                expect_sign = False
                continue
            if tok.startswith("-"):
                sign, tok = -sign, tok[1:]
                if not tok:
                    i += 1
                    continue
            coeff: Coeff = 1
            exp = [0] * n
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coeff = as_coeff(Fraction(tok))
                i += 1
            while i < len(tokens) and tokens[i] not in "+-":
                name, _, power = tokens[i].partition("^")
                exp[Var.parse(name).index(m)] += int(power or 1)
                i += 1
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + sign * coeff
            sign = 1
            expect_sign = True
        return cls(m, terms)


def _normalize(terms: dict) -> dict:
    for exp, c in terms.items():
        if isinstance(c, Fraction) and c.denominator == 1:
            terms[exp] = c.numerator
    return terms


def format_rational(value) -> str:
    q = Fraction(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Coeff:
    return as_coeff(Fraction(text))


def slot_var(kind: str, slot: int, m: int) -> Polynomial:
    return Polynomial.var(Var(kind, slot), m)


def substitute_linear(p: Polynomial, mapping: Mapping[Var | str, Polynomial]) -> Polynomial:
    """Linear homogeneous change of variables; rejects non-linear images."""
    for v, img in mapping.items():
        if not isinstance(img, Polynomial):
            raise TypeError(f"image of {v} must be a Polynomial")
        if any(sum(exp) != 1 for exp in img._terms):
            raise ValueError(f"image of {v} is not a linear form")
    return p.subs(mapping)


def homogeneous_component(p: Polynomial, degree=None, **kw) -> Polynomial:
    if isinstance(degree, MultiDegree):
        return p.homogeneous_component(slots=degree.slots, form=degree.form)
    return p.homogeneous_component(degree, **kw)


def slot_mixing(g, m: int) -> dict[Var, Polynomial]:
    """Assignment realising the right action ``X.g = (sum_i g_i1 X_i, ...)``.

    Coordinate ``k_j`` of slot ``j`` becomes ``sum_i g[i][j] k_i``.
    """
    if len(g) != m or any(len(row) != m for row in g):
        raise ValueError(f"expected an {m}x{m} matrix")
    mapping = {}
    for j in range(1, m + 1):
        for k in SLOT_KINDS:
            img = Polynomial.zero(m)
            for i in range(1, m + 1):
                gij = as_coeff(g[i - 1][j - 1])
                if gij:
                    img = img + slot_var(k, i, m).scale(gij)
            mapping[Var(k, j)] = img
    for k in FORM_KINDS:
        mapping[Var(k)] = Polynomial.var(Var(k), m)
    return mapping


def slot_coordinate_action(M, m: int) -> dict[Var, Polynomial]:
    """Assignment applying a 3x3 matrix ``M`` to ``(a_i, b_i, c_i)`` in every slot."""
    mapping = {}
    for i in range(1, m + 1):
        coords = [slot_var(k, i, m) for k in SLOT_KINDS]
        for r, k in enumerate(SLOT_KINDS):
            img = Polynomial.zero(m)
            for col in range(3):
                if M[r][col]:
                    img = img + coords[col].scale(M[r][col])
            mapping[Var(k, i)] = img
    for k in FORM_KINDS:
        mapping[Var(k)] = Polynomial.var(Var(k), m)
    return mapping
