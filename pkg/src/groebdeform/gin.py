"""Generic initial ideals and the generic-coefficient polynomials alpha, p^rho.

The generic upper triangular matrix has entries Y_ij (i <= j).  A monomial
in the Y_ij is stored as an upper triangular exponent table.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .binsys import BinomialSystem, gb_rlex, generators
from .orders import RLEX, as_order, m_index, negative_part, positive_part
from .polyalg import (IdealGB, MonomialIdeal, Poly, apply_matrix, buchberger, initial_ideal,
                      saturate_wrt_last, transform_ideal)

_ZERO_ENTRY_LIMIT = 10 ** 4


def _mat(M) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in M)


class CoeffPoly:
    """Integer polynomial in the Y_ij, keyed by exponent tables."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        for M, c in (terms or {}).items():
            if c:
                self.terms[_mat(M)] = self.terms.get(_mat(M), 0) + int(c)

    @classmethod
    def diag(cls, a: Sequence[int]) -> "CoeffPoly":
        """Y^a = prod_j Y_jj^{a_j}."""
        n = len(a)
        return cls(n, {tuple(tuple(a[i] if i == j else 0 for j in range(n)) for i in range(n)): 1})

    def __eq__(self, other):
        return isinstance(other, CoeffPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "CoeffPoly") -> "CoeffPoly":
        t = dict(self.terms)
        for M, c in other.terms.items():
            t[M] = t.get(M, 0) + c
            if not t[M]:
                del t[M]
        return CoeffPoly(self.n, t)

    def __mul__(self, other):
        if isinstance(other, int):
            return CoeffPoly(self.n, {M: c * other for M, c in self.terms.items()})
        t: dict = {}
        for M1, c1 in self.terms.items():
            for M2, c2 in other.terms.items():
                M = tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(M1, M2))
                t[M] = t.get(M, 0) + c1 * c2
        return CoeffPoly(self.n, t)

    __rmul__ = __mul__

    def __repr__(self):
        return f"CoeffPoly({self.terms})"

    def evaluate(self, g: Sequence[Sequence]) -> int:
        total = 0
        for M, c in self.terms.items():
            v = c
            for i, row in enumerate(M):
                for j, e in enumerate(row):
                    if e:
                        v *= g[i][j] ** e
            total += v
        return total

    def to_json(self) -> list:
        return [{"M": [list(r) for r in M], "coef": c} for M, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, obj, n: int | None = None) -> "CoeffPoly":
        if n is None:
            n = len(obj[0]["M"]) if obj else 0
        return cls(n, {_mat(t["M"]): t["coef"] for t in obj})


def mu(M: Sequence[Sequence[int]]) -> int:
    """Product of the column multinomial coefficients of M."""
    out = 1
    for col in zip(*M):
        total = 0
        for x in col:
            total += x
            out *= math.comb(total, x)
    return out


def u_matrices(a: Sequence[int], b: Sequence[int]) -> list:
    """All upper triangular M >= 0 with row sums a and column sums b."""
    if len(a) != len(b):
        raise ValueError("length mismatch")
    if sum(a) != sum(b):
        raise ValueError("degree mismatch")
    n = len(a)
    out = []
    cols: list = [None] * n

    def fill_col(j, rows_left):
        # choose column j: entries in rows 0..j summing to b[j]
        if j == n:
            if all(r == 0 for r in rows_left):
                out.append(tuple(tuple(cols[jj][i] for jj in range(n)) for i in range(n)))
            return
        for entries in _compositions(b[j], [rows_left[i] for i in range(j + 1)]):
            col = list(entries) + [0] * (n - j - 1)
            left = [rows_left[i] - col[i] for i in range(n)]
            cols[j] = col
            fill_col(j + 1, left)

    fill_col(0, list(a))
    return out


def _compositions(total: int, caps: list):
    if not caps:
        if total == 0:
            yield ()
        return
    first_max = min(total, caps[0])
    rest_cap = sum(caps[1:])
    for x in range(max(0, total - rest_cap), first_max + 1):
        for tail in _compositions(total - x, caps[1:]):
            yield (x,) + tail


def alpha(b: Sequence[int], a: Sequence[int]) -> CoeffPoly:
    """Coefficient of X^a in phi(X^b), as a sum over U(a, b)."""
    return CoeffPoly(len(a), {M: mu(M) for M in u_matrices(a, b)})


def phi_expansion(b: Sequence[int]) -> dict:
    """phi(X^b) = prod_j (sum_{i<=j} Y_ij X_i)^{b_j}, expanded symbolically.

    Returns a mapping exponent -> CoeffPoly; used as an independent check
    on :func:`alpha`.
    """
    n = len(b)
    zero_M = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    cur = {tuple([0] * n): {zero_M: 1}}
    for j in range(n):
        for _ in range(b[j]):
            nxt: dict = {}
            for e, coeffs in cur.items():
                for i in range(j + 1):
                    e2 = tuple(x + (1 if k == i else 0) for k, x in enumerate(e))
                    slot = nxt.setdefault(e2, {})
                    for M, c in coeffs.items():
                        M2 = tuple(tuple(x + (1 if (r, s) == (i, j) else 0) for s, x in enumerate(row))
                                   for r, row in enumerate(M))
                        slot[M2] = slot.get(M2, 0) + c
            cur = nxt
    return {e: CoeffPoly(n, t) for e, t in cur.items()}


def p_rho(b: Sequence[int], c: Sequence[int], rho: Sequence[int],
          strict: bool = True) -> CoeffPoly:
    """sum_{M in U(b,c)} mu_M Y^{M - rho^-}.

    ``strict=False`` skips the agreement check on b, c before m(rho), which
    is what the factorisation identities need but the sum itself does not.
    """
    n = len(b)
    bp = [x + r for x, r in zip(b, rho)]
    cp = [x + r for x, r in zip(c, rho)]
    if min(bp) < 0 or min(cp) < 0:
        raise ValueError("b + rho and c + rho must be exponent vectors")
    m = m_index(rho)
    if strict and tuple(b[: m - 1]) != tuple(c[: m - 1]):
        raise ValueError("b and c must agree before m(rho)")
    neg = negative_part(rho)
    terms = {}
    for M in u_matrices(b, c):
        shifted = [list(row) for row in M]
        for j in range(n):
            shifted[j][j] -= neg[j]
            if shifted[j][j] < 0:
                raise ValueError("M - rho^- has a negative diagonal entry")
        terms[_mat(shifted)] = mu(M)
    return CoeffPoly(n, terms)


def p_rho_identities(b, c, rho, strict: bool = True) -> tuple:
    """(alpha^c_b == p Y^{rho-}, alpha^{c+rho}_{b+rho} == p Y^{rho+})."""
    p = p_rho(b, c, rho, strict)
    bp = tuple(x + r for x, r in zip(b, rho))
    cp = tuple(x + r for x, r in zip(c, rho))
    first = alpha(c, b) == p * CoeffPoly.diag(negative_part(rho))
    second = alpha(cp, bp) == p * CoeffPoly.diag(positive_part(rho))
    return first, second


# -- random coordinates -----------------------------------------------------

def random_upper(n: int, rng: random.Random, bound: int = _ZERO_ENTRY_LIMIT,
                 unipotent: bool = False) -> tuple:
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j < i:
                row.append(0)
            elif j == i:
                row.append(1 if unipotent else rng.randint(1, bound))
            else:
                row.append(rng.randint(1, bound))
        rows.append(tuple(row))
    return tuple(rows)


def is_borel_ideal(I: MonomialIdeal) -> bool:
    """Strong stability checked on the minimal generators."""
    for g in I.gens:
        for j in range(1, I.n):
            if not g[j]:
                continue
            for i in range(j):
                h = list(g)
                h[j] -= 1
                h[i] += 1
                if not I.contains(h):
                    return False
    return True


@dataclass(frozen=True)
class GinResult:
    ideal: MonomialIdeal
    order: str
    matrices: tuple
    rounds: int


def gin_with_witness(I: IdealGB, order=RLEX, trials: int = 2, seed: int = 0,
                     max_rounds: int = 3) -> GinResult:
    order = as_order(order)
    if not order.admissible:
        raise ValueError("gin needs an admissible order")
    if trials < 2:
        raise ValueError("at least two trials are needed")
    rng = random.Random(seed)
    bound = _ZERO_ENTRY_LIMIT
    for rnd in range(1, max_rounds + 1):
        mats = [random_upper(I.n, rng, bound) for _ in range(trials)]
        results = [_initial_after(g, I, order) for g in mats]
        if all(r == results[0] for r in results):
            if not is_borel_ideal(results[0]):
                raise ArithmeticError("generic initial ideal is not Borel")
            return GinResult(results[0], str(order), tuple(mats), rnd)
        bound *= 100
    raise ArithmeticError("random trials kept disagreeing")


def _initial_after(g, I: IdealGB, order) -> MonomialIdeal:
    if I.is_zero():
        return MonomialIdeal(I.n)
    return initial_ideal(buchberger([apply_matrix(g, f) for f in I.basis], order, n=I.n))


def gin_compute(I: IdealGB, order=RLEX, trials: int = 2, seed: int = 0) -> MonomialIdeal:
    return gin_with_witness(I, order, trials, seed).ideal


def check_unipotent_fixed(sys: BinomialSystem, trials: int = 5, seed: int = 0) -> bool:
    """g(F) = F for random unipotent upper triangular g."""
    rng = random.Random(seed)
    F = gb_rlex(sys, certify=False)
    gens = generators(sys)
    for _ in range(trials):
        g = random_upper(sys.n, rng, unipotent=True)
        # g(F) and F have equal Hilbert functions, so inclusion is equality
        if not all(F.contains(apply_matrix(g, f)) for f in gens):
            return False
    return True


def check_unipotent_fixed_ideal(I: IdealGB, trials: int = 5, seed: int = 0) -> bool:
    rng = random.Random(seed)
    for _ in range(trials):
        g = random_upper(I.n, rng, unipotent=True)
        if not all(I.contains(apply_matrix(g, f)) for f in I.basis):
            return False
    return True


def elementary(n: int, i: int, j: int) -> tuple:
    """Identity plus a 1 in position (i, j), i < j: X_j -> X_j + X_i."""
    return tuple(tuple(1 if r == c or (r, c) == (i, j) else 0 for c in range(n)) for r in range(n))


def unipotent_fixed_exact(I: IdealGB) -> bool:
    """Deterministic test that g(I) = I for every unipotent upper triangular g.

    The unipotent group is generated by the one-parameter groups
    X_j -> X_j + t X_i.  The t fixing I form a Zariski closed subgroup of
    the additive group, so over Q it is everything once it contains t = 1.
    """
    n = I.n
    for j in range(n):
        for i in range(j):
            g = elementary(n, i, j)
            if not all(I.contains(apply_matrix(g, f)) for f in I.basis):
                return False
    return True


def gin_sat_commute_check(I: IdealGB, trials: int = 2, seed: int = 0) -> bool:
    """Gin_rlex(a^sat) == (Gin_rlex a)^sat.

    (a : X_n^oo) is the saturation only when X_n is generic for a, so the
    left side saturates after a random change of coordinates.
    """
    I = I.with_order(RLEX)
    g = random_upper(I.n, random.Random(seed))
    left = gin_compute(saturate_wrt_last(transform_ideal(g, I, RLEX)), RLEX, trials, seed)
    right = gin_compute(I, RLEX, trials, seed + 1).colon_var(I.n)
    return left == right


def monomial_gb(J: MonomialIdeal, order=RLEX) -> IdealGB:
    return IdealGB(as_order(order), tuple(Poly.monomial(g) for g in J.sorted_gens()), J.n)

