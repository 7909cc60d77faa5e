"""Hilbert functions and polynomials of monomial quotients, the gv/hv formula
and Gotzmann decompositions."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .polyalg import IdealGB, MonomialIdeal, initial_ideal


def binom(x: int, k: int) -> Fraction:
    """C(x, k) by the product formula, so negative x is allowed."""
    if k < 0:
        return Fraction(0)
    num = 1
    for j in range(k):
        num *= x - j
    return Fraction(num, math.factorial(k))


@dataclass(frozen=True)
class QPolynomial:
    """Univariate polynomial in t; coeffs[k] is the coefficient of t^k."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def binomial(cls, k: int, shift: int) -> "QPolynomial":
        """C(t + shift, k) expanded in powers of t."""
        out = cls((1,))
        for j in range(k):
            out = out * cls((shift - j, 1))
        return out.scale(Fraction(1, math.factorial(k)))

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def interpolate(cls, points: Sequence[tuple]) -> "QPolynomial":
        """Lagrange interpolation through (x, y) pairs."""
        out = cls()
        for i, (xi, yi) in enumerate(points):
            term = cls((yi,))
            for j, (xj, _) in enumerate(points):
                if j != i:
                    term = term * cls((Fraction(-xj, xi - xj), Fraction(1, xi - xj)))
            out = out + term
        return out

    def __call__(self, t) -> Fraction:
        v = Fraction(0)
        for c in reversed(self.coeffs):
            v = v * t + c
        return v

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return QPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return QPolynomial(tuple(out))

    def scale(self, c) -> "QPolynomial":
        return QPolynomial(tuple(Fraction(c) * x for x in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_integer_valued(self, start: int = 0, count: int = 100) -> bool:
        return all(self(t).denominator == 1 for t in range(start, start + count))

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> "QPolynomial":
        return cls(tuple(Fraction(c) for c in obj))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*t^{k}" for k, c in enumerate(self.coeffs) if c)


ZERO_POLY = QPolynomial()


@dataclass(frozen=True)
class NumFn:
    """Function Z -> Z given by a finite table and polynomial tails.

    Values below the table follow ``head`` (zero by default), values above
    follow ``tail``.  ``tail_from`` is the first degree from which the tail
    is known to agree.
    """

    table: tuple  # sorted ((deg, value), ...)
    tail: QPolynomial = ZERO_POLY
    tail_from: int | None = None
    head: QPolynomial = ZERO_POLY
    head_to: int | None = None
    _lookup: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        table = tuple(sorted((int(k), Fraction(v)) for k, v in dict(self.table).items()))
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_lookup", dict(table))
        lo = table[0][0] if table else 0
        hi = table[-1][0] if table else -1
        if self.tail_from is None:
            object.__setattr__(self, "tail_from", hi + 1)
        if self.head_to is None:
            object.__setattr__(self, "head_to", lo - 1)

    def __call__(self, j: int) -> Fraction:
        if j in self._lookup:
            return self._lookup[j]
        if j >= self.tail_from:
            return self.tail(j)
        if j <= self.head_to:
            return self.head(j)
        return Fraction(0)

    @property
    def lo(self) -> int:
        return self.table[0][0] if self.table else 0

    @property
    def hi(self) -> int:
        return self.table[-1][0] if self.table else -1

    def values(self, lo: int, hi: int) -> list:
        return [self(j) for j in range(lo, hi + 1)]

    def _combine(self, other: "NumFn", op) -> "NumFn":
        lo = min(self.lo, other.lo, self.head_to + 1, other.head_to + 1)
        hi = max(self.hi, other.hi, self.tail_from, other.tail_from)
        table = {j: op(self(j), other(j)) for j in range(lo, hi + 1)}
        return NumFn(tuple(table.items()), op_poly(op, self.tail, other.tail), hi + 1,
                     op_poly(op, self.head, other.head), lo - 1)

    def __add__(self, other):
        return self._combine(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._combine(other, lambda x, y: x - y)

    def scale(self, c) -> "NumFn":
        c = Fraction(c)
        return NumFn(tuple((k, c * v) for k, v in self.table), self.tail.scale(c),
                     self.tail_from, self.head.scale(c), self.head_to)

    def equals(self, other: "NumFn") -> bool:
        """Equality as functions on all of Z."""
        if self.tail != other.tail or self.head != other.head:
            return False
        lo = min(self.lo, other.lo, self.head_to, other.head_to)
        hi = max(self.hi, other.hi, self.tail_from, other.tail_from)
        return all(self(j) == other(j) for j in range(lo, hi + 1))

    def leq(self, other: "NumFn", window=None) -> bool:
        lo, hi = window or (min(self.lo, other.lo) - 1, max(self.hi, other.hi) + 1)
        return all(self(j) <= other(j) for j in range(lo, hi + 1))

    def to_json(self) -> dict:
        out = {"table": [[k, _num_json(v)] for k, v in self.table],
               "tail": {"poly": self.tail.to_json(), "from": self.tail_from}}
        if not self.head.is_zero():
            out["head"] = {"poly": self.head.to_json(), "to": self.head_to}
        return out

    @classmethod
    def from_json(cls, obj) -> "NumFn":
        tail = obj.get("tail") or {}
        head = obj.get("head") or {}
        return cls(tuple((int(k), Fraction(v)) for k, v in obj.get("table", [])),
                   QPolynomial.from_json(tail.get("poly", [])), tail.get("from"),
                   QPolynomial.from_json(head.get("poly", [])), head.get("to"))


HilbertFn = NumFn


def _num_json(v: Fraction):
    return int(v) if v.denominator == 1 else str(v)


def op_poly(op, p: QPolynomial, q: QPolynomial) -> QPolynomial:
    m = max(len(p.coeffs), len(q.coeffs))
    a = p.coeffs + (Fraction(0),) * (m - len(p.coeffs))
    b = q.coeffs + (Fraction(0),) * (m - len(q.coeffs))
    return QPolynomial(tuple(op(x, y) for x, y in zip(a, b)))


# -- monomial quotients -----------------------------------------------------

def _pivot(gens: frozenset, n: int) -> int | None:
    counts = [0] * n
    for g in gens:
        for i, x in enumerate(g):
            if x:
                counts[i] += 1
    best = max(range(n), key=lambda i: counts[i])
    return best if counts[best] > 1 else None


def _numerator(gens: frozenset, n: int, memo: dict) -> dict:
    """Numerator K(t) of the Hilbert series K(t)/(1-t)^n of S/<gens>."""
    if gens in memo:
        return memo[gens]
    if not gens:
        out = {0: 1}
    else:
        p = _pivot(gens, n)
        if p is None:
            # pairwise coprime generators: a complete intersection
            out = {0: 1}
            for g in gens:
                dg = sum(g)
                nxt = dict(out)
                for k, v in out.items():
                    nxt[k + dg] = nxt.get(k + dg, 0) - v
                out = {k: v for k, v in nxt.items() if v}
        else:
            x = tuple(1 if i == p else 0 for i in range(n))
            plus = MonomialIdeal(n, gens | {x}).gens
            colon = MonomialIdeal(n, frozenset(
                tuple(max(v - 1, 0) if i == p else v for i, v in enumerate(g)) for g in gens)).gens
            out = dict(_numerator(plus, n, memo))
            for k, v in _numerator(colon, n, memo).items():
                out[k + 1] = out.get(k + 1, 0) + v
            out = {k: v for k, v in out.items() if v}
    memo[gens] = out
    return out


def hilbert_numerator(I: MonomialIdeal) -> dict:
    return _numerator(frozenset(I.gens), I.n, {})


def hf_monomial_quotient(I: MonomialIdeal, n: int | None = None, d_max: int | None = None) -> NumFn:
    """h_{S/I} as a table on 0..d_max with its certified polynomial tail."""
    n = I.n if n is None else n
    if n != I.n:
        raise ValueError("ideal lives in a different ring")
    num = hilbert_numerator(I)
    top = max(num, default=0)
    stable = max(0, top - n + 1)
    if d_max is None:
        d_max = I.max_degree() + n + 3
    d_max = max(d_max, stable + n + 1)
    table = {j: sum(v * binom(j - k + n - 1, n - 1) for k, v in num.items() if k <= j)
             for j in range(0, d_max + 1)}
    tail = QPolynomial()
    for k, v in num.items():
        tail = tail + QPolynomial.binomial(n - 1, n - 1 - k).scale(v)
    for j in range(stable, d_max + 1):
        if tail(j) != table[j]:
            raise ArithmeticError(f"Hilbert polynomial disagrees with the table at {j}")
    return NumFn(tuple(table.items()), tail, stable)


def hf_ring(n: int, d_max: int = 0) -> NumFn:
    """h_S for S in n variables."""
    return hf_monomial_quotient(MonomialIdeal(n), n, d_max)


def hf_monomial_ideal(I: MonomialIdeal, d_max: int | None = None) -> NumFn:
    """h_I(j) = dim_K I_j."""
    q = hf_monomial_quotient(I, d_max=d_max)
    return hf_ring(I.n, q.hi) - q


def hf_ideal(I: IdealGB, d_max: int | None = None) -> NumFn:
    return hf_monomial_ideal(initial_ideal(I), d_max)


def hf_quotient(I: IdealGB, d_max: int | None = None) -> NumFn:
    return hf_monomial_quotient(initial_ideal(I), d_max=d_max)


def hilbert_polynomial(h: NumFn) -> QPolynomial:
    if h.tail_from > h.hi + 1:
        raise ValueError("table too short to certify stabilisation")
    return h.tail


def hf_from_gv_hv(gv: Sequence[int], hv: Sequence[int], d: int, n: int) -> NumFn:
    """Hilbert function of <X^B>^sat for a Borel set B from gv(B), hv(B)."""
    if len(gv) != n or len(hv) != d:
        raise ValueError("gv must have length n and hv length d")
    if sum(hv) != gv[-1]:
        raise ValueError("|hv| must equal gv_n")
    table = {}
    for i in range(d):
        table[i] = sum(hv[d - j - 1] for j in range(i + 1))
    tail = QPolynomial()
    for j in range(n):
        tail = tail + QPolynomial.binomial(j, j - d).scale(gv[n - j - 1])
    for i in range(d, d + n + 2):
        table[i] = tail(i)
    return NumFn(tuple(table.items()), tail, d)


# -- Gotzmann ---------------------------------------------------------------

def gotzmann_decomposition(p: QPolynomial, n: int) -> list:
    """Integers b_0 <= ... <= b_s, s < n, with p = sum C(t+n-b_i-i, n-i).

    ``p`` is the Hilbert polynomial of an ideal in n+1 variables.
    """
    bs: list = []
    R = p
    for i in range(n):
        if R.is_zero():
            break
        k = n - i
        if R.degree != k or R.coeff(k) != Fraction(1, math.factorial(k)):
            raise ValueError(f"no Gotzmann decomposition for {p}")
        r = R.coeff(k - 1) * math.factorial(k - 1)
        last = Fraction(k + 1, 2) - r
        # the next term, if any, contributes 1/(k-1)! to the t^(k-1) coefficient
        chosen = None
        for b, final in ((last, True), (last + 1, False)):
            if b.denominator != 1 or b < (bs[-1] if bs else 0):
                continue
            rest = R - QPolynomial.binomial(k, k - int(b))
            if final and rest.is_zero():
                chosen = (int(b), rest)
                break
            if not final and not rest.is_zero():
                chosen = (int(b), rest)
        if chosen is None:
            raise ValueError(f"no Gotzmann decomposition for {p}")
        bs.append(chosen[0])
        R = chosen[1]
    if not R.is_zero():
        raise ValueError(f"no Gotzmann decomposition for {p}")
    check = QPolynomial()
    for i, b in enumerate(bs):
        check = check + QPolynomial.binomial(n - i, n - b - i)
    if check != p:
        raise ArithmeticError("Gotzmann expansion does not reproduce p")
    return bs


def gotzmann_bound(p: QPolynomial, n: int) -> int:
    bs = gotzmann_decomposition(p, n)
    return bs[-1] if bs else 0


def numfn_from_values(values: Iterable[tuple]) -> NumFn:
    return NumFn(tuple(values))
