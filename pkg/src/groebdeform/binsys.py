"""Binomial systems (A, C, rho), the ideals F(A, C, rho) and Mall steps."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .borel import (BorelSet, borel_closure, ghl_normal_form, growth_vector, height_vector,
                    is_borel, is_lex, roots)
from .orders import (HLEX, RLEX, add, hlex_key, m_index, monomials, mu_index, sort_hlex_desc,
                     star, sub)
from .polyalg import IdealGB, MonomialIdeal, Poly, buchberger, initial_ideal, is_groebner


class SystemClass(enum.IntEnum):
    PLAIN = 0
    ADMISSIBLE = 1
    GOOD = 2
    MALL = 3

    def __str__(self):
        return self.name.lower()


@dataclass(frozen=True)
class BinomialSystem:
    """A triple (A, C, rho) in N^n_d; validated on construction."""

    n: int
    d: int
    A: frozenset
    C: frozenset
    rho: tuple

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(tuple(a) for a in self.A))
        object.__setattr__(self, "C", frozenset(tuple(c) for c in self.C))
        object.__setattr__(self, "rho", tuple(int(r) for r in self.rho))
        problems = validation_errors(self)
        if problems:
            raise ValueError("invalid binomial system: " + "; ".join(problems))

    @property
    def C_rho(self) -> frozenset:
        return frozenset(add(c, self.rho) for c in self.C)

    @property
    def source(self) -> frozenset:
        """A union C."""
        return self.A | self.C

    @property
    def target(self) -> frozenset:
        """A union (C + rho)."""
        return self.A | self.C_rho

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d,
                "A": [list(a) for a in sort_hlex_desc(self.A)],
                "C": [list(c) for c in sort_hlex_desc(self.C)],
                "rho": list(self.rho)}

    @classmethod
    def from_json(cls, obj) -> "BinomialSystem":
        return cls(obj["n"], obj["d"], frozenset(map(tuple, obj["A"])),
                   frozenset(map(tuple, obj["C"])), tuple(obj["rho"]))


def validation_errors(sys: BinomialSystem) -> list:
    out = []
    n, d = sys.n, sys.d
    if len(sys.rho) != n:
        out.append("rho has the wrong length")
        return out
    if sum(sys.rho) != 0:
        out.append("|rho| != 0")
    for a in sys.A | sys.C:
        if len(a) != n or sum(a) != d or min(a) < 0:
            out.append(f"{a} not in N^{n}_{d}")
    if out:
        return out
    Cr = set()
    for c in sys.C:
        e = add(c, sys.rho)
        if min(e) < 0:
            out.append(f"{c} + rho has a negative entry")
        Cr.add(e)
    if out:
        return out
    if sys.A & sys.C or sys.A & Cr or sys.C & Cr:
        out.append("A, C, C+rho are not pairwise disjoint")
    if not is_borel(sys.A | sys.C):
        out.append("A u C is not Borel")
    if not is_borel(sys.A | Cr):
        out.append("A u (C+rho) is not Borel")
    return out


def make_system(A: Iterable, C: Iterable, rho: Sequence[int], n: int | None = None,
                d: int | None = None) -> BinomialSystem:
    A, C = frozenset(map(tuple, A)), frozenset(map(tuple, C))
    pool = A | C
    if n is None:
        n = len(rho)
    if d is None:
        if not pool:
            raise ValueError("degree of an empty system must be given")
        d = sum(next(iter(pool)))
    return BinomialSystem(n, d, A, C, tuple(rho))


def is_admissible(sys: BinomialSystem) -> bool:
    return not sys.C or sys.rho[m_index(sys.rho) - 1] > 0


def is_good(sys: BinomialSystem) -> bool:
    if not is_admissible(sys):
        return False
    m = m_index(sys.rho)
    return len({c[: m - 1] for c in sys.C}) <= 1


def is_mall(sys: BinomialSystem) -> bool:
    if not is_good(sys) or not sys.C:
        return is_good(sys)
    if sys.rho[mu_index(sys.rho) - 1] <= 0:
        return False
    return all(m_index(c) == m_index(add(c, sys.rho)) for c in sys.C)


def classify(sys: BinomialSystem) -> SystemClass:
    if is_mall(sys):
        return SystemClass.MALL
    if is_good(sys):
        return SystemClass.GOOD
    if is_admissible(sys):
        return SystemClass.ADMISSIBLE
    return SystemClass.PLAIN


def _require(sys: BinomialSystem, at_least: SystemClass) -> None:
    got = classify(sys)
    if got < at_least:
        raise ValueError(f"system is {got}, needs {at_least}")


# -- ideals -----------------------------------------------------------------

def bin_polys(C: Iterable, rho: Sequence[int]) -> list:
    return [Poly.binomial(c, add(c, rho)) for c in sort_hlex_desc(C)]


def generators(sys: BinomialSystem) -> list:
    return [Poly.monomial(a) for a in sort_hlex_desc(sys.A)] + bin_polys(sys.C, sys.rho)


def _gb_from(gens: list, n: int, certify: bool) -> IdealGB:
    if certify and not is_groebner(gens, RLEX):
        raise ArithmeticError("generators are not an rlex Groebner basis")
    return buchberger(gens, RLEX, n=n)


def gb_rlex(sys: BinomialSystem, certify: bool = True) -> IdealGB:
    """F(A, C, rho) with its generators certified as an rlex Groebner basis."""
    _require(sys, SystemClass.ADMISSIBLE)
    I = _gb_from(generators(sys), sys.n, certify)
    if certify and initial_ideal(I) != MonomialIdeal.of(sys.n, sys.source):
        raise ArithmeticError("in_rlex F differs from <X^(A u C)>")
    return I


def sat_gb(sys: BinomialSystem, certify: bool = True) -> IdealGB:
    """F^sat from X^{A*} and Bin(C*, rho)."""
    _require(sys, SystemClass.ADMISSIBLE)
    gens = [Poly.monomial(star(a)) for a in sort_hlex_desc(sys.A)]
    gens += bin_polys({star(c) for c in sys.C}, sys.rho)
    return _gb_from(gens, sys.n, certify)


def initial_hlex(sys: BinomialSystem, verify: bool = False) -> MonomialIdeal:
    _require(sys, SystemClass.MALL)
    J = MonomialIdeal.of(sys.n, sys.target)
    if verify and initial_ideal(buchberger(generators(sys), HLEX, n=sys.n)) != J:
        raise ArithmeticError("closed-form in_hlex F disagrees with Buchberger")
    return J


def initial_hlex_sat(sys: BinomialSystem, verify: bool = False) -> MonomialIdeal:
    _require(sys, SystemClass.MALL)
    if sys.rho[-1] != 0:
        raise ValueError("needs rho_n = 0")
    J = MonomialIdeal.of(sys.n, (star(a) for a in sys.target))
    if verify and initial_ideal(sat_gb(sys).with_order(HLEX)) != J:
        raise ArithmeticError("closed-form in_hlex F^sat disagrees with Buchberger")
    return J


# -- slices and the filtration ----------------------------------------------

def restrict(S: Iterable, i: int) -> set:
    """S_i: truncations to length i of elements vanishing after position i."""
    return {tuple(a[:i]) for a in S if not any(a[i:])}


def extend(S: Iterable, n: int) -> set:
    return {tuple(a) + (0,) * (n - len(a)) for a in S}


def _pad_poly(f: Poly, n: int) -> Poly:
    return Poly(n, {tuple(e) + (0,) * (n - len(e)): c for e, c in f.terms.items()})


def filtration_ideal(sys: BinomialSystem, i: int) -> IdealGB:
    """F_i(A, C, rho) for 0 <= i <= n-1, as an rlex basis in S."""
    _require(sys, SystemClass.ADMISSIBLE)
    n = sys.n
    if not 0 <= i <= n - 1:
        raise ValueError(f"filtration index {i} outside 0..{n - 1}")
    l = n - i
    m = m_index(sys.rho) if sys.C else 1
    if l >= m and sys.C:
        A_l, C_l = restrict(sys.A, l), restrict(sys.C, l)
        rho_l = sys.rho[:l]
        gens = [Poly.monomial(star(a)) for a in A_l] + bin_polys({star(c) for c in C_l}, rho_l)
    else:
        pool = restrict(sys.source, l)
        gens = [Poly.monomial(star(a)) for a in pool]
    gens = [_pad_poly(g, n) for g in gens]
    return buchberger(gens, RLEX, n=n)


def dimension_chain(sys: BinomialSystem) -> list:
    """[F_0, ..., F_{n-1}] with each inclusion checked."""
    chain = [filtration_ideal(sys, i) for i in range(sys.n)]
    for lo, hi in zip(chain, chain[1:]):
        if not all(hi.contains(g) for g in lo.basis):
            raise ArithmeticError("filtration is not increasing")
    return chain


# -- Mall sequences ---------------------------------------------------------

def mall_swap_to_lex(B: BorelSet, L: BorelSet) -> list:
    """Single-swap Mall systems leading from B to the lex set L."""
    if (B.n, B.d) != (L.n, L.d):
        raise ValueError("B and L live in different N^n_d")
    if growth_vector(B) != growth_vector(L):
        raise ValueError("gv(B) != gv(L)")
    if not is_lex(L):
        raise ValueError("L is not lexicographic")
    if ghl_normal_form(B) != B:
        raise ValueError("B is not growth-height-lexicographic")
    out = []
    cur = set(B.elems)
    allm = list(monomials(B.n, B.d))
    budget = len(L.elems - B.elems)
    while cur != set(L.elems):
        if len(out) >= budget:
            raise ArithmeticError("swap sequence overran #(L \\ B)")
        c = min(cur, key=hlex_key)
        c2 = next(a for a in allm if a not in cur)
        sys = make_system(cur - {c}, {c}, sub(c2, c), n=B.n, d=B.d)
        if classify(sys) != SystemClass.MALL:
            raise ArithmeticError(f"swap system {sys} is not Mall")
        out.append(sys)
        cur = (cur - {c}) | {c2}
    return out


def swap_window(sys: BinomialSystem) -> tuple:
    """[d - c'_n, d - c_n): the degrees where the saturated HF rises by one."""
    (c,) = sys.C
    c2 = add(c, sys.rho)
    return sys.d - c2[-1], sys.d - c[-1]


def _potential(S: set, L: frozenset) -> int:
    return len(S ^ L)


def _close(c0: tuple, rho: tuple, B: frozenset) -> frozenset | None:
    """Smallest C containing c0 forced by the Borel conditions, or None."""
    def down(c):
        # elements of B Borel-below c via single moves
        for i in range(len(c) - 1):
            if c[i]:
                for j in range(i + 1, len(c)):
                    e = list(c)
                    e[i] -= 1
                    e[j] += 1
                    yield tuple(e)

    C = set()
    todo = [c0]
    while todo:
        c = todo.pop()
        if c in C:
            continue
        if c not in B:
            return None
        t = add(c, rho)
        if min(t) < 0 or t in B:
            return None
        C.add(c)
        for b in down(c):
            if b in B and b not in C:
                todo.append(b)
        Cr = {add(x, rho) for x in C}
        for j in range(1, len(t)):
            if not t[j]:
                continue
            for i in range(j):
                u = list(t)
                u[j] -= 1
                u[i] += 1
                u = tuple(u)
                if u in Cr:
                    continue
                if u in B and u not in C:
                    continue
                if u in C:
                    return None
                todo.append(sub(u, rho))
    return frozenset(C)


def mall_step_search(B: BorelSet) -> BinomialSystem | None:
    """A gv/hv-preserving Mall step A u C = B -> A u (C+rho) towards L_gh(B)."""
    L = ghl_normal_form(B).elems
    if L == B.elems:
        return None
    n, d = B.n, B.d
    Bset = B.elems
    outside = [t for t in monomials(n, d) if t not in Bset]
    rts = sorted(roots(B), key=hlex_key)
    cands = set()
    for c0 in rts:
        for t in outside:
            if t[-1] == c0[-1] and hlex_key(t) > hlex_key(c0) and m_index(t) == m_index(c0):
                cands.add(sub(t, c0))
    start = _potential(set(Bset), L)
    gv, hv = growth_vector(B), height_vector(B)
    for rho in sorted(cands, reverse=True):
        for c0 in rts:
            C = _close(c0, rho, Bset)
            if C is None:
                continue
            A = Bset - C
            try:
                sys = BinomialSystem(n, d, A, C, rho)
            except ValueError:
                continue
            if classify(sys) != SystemClass.MALL or m_index(rho) >= n:
                continue
            tgt = BorelSet(n, d, sys.target)
            if growth_vector(tgt) != gv or height_vector(tgt) != hv:
                continue
            if _potential(set(sys.target), L) < start:
                return sys
    return None


def mall_path_to_ghl(B: BorelSet) -> list:
    """Iterate mall_step_search until the ghl normal form is reached."""
    L = ghl_normal_form(B)
    out = []
    cur = B
    while cur != L:
        sys = mall_step_search(cur)
        if sys is None:
            raise ArithmeticError(f"no Mall step found from {cur.to_json()}")
        out.append(sys)
        cur = BorelSet(cur.n, cur.d, sys.target)
    return out


def counterexample_system() -> BinomialSystem:
    rho = (1, -2, 2, -2, 1)
    C = {(0, 2, 0, 3, 0), (0, 2, 0, 2, 1)}
    D = C | {add(c, rho) for c in C}
    A = borel_closure(D).elems - D
    return BinomialSystem(5, 5, A, frozenset(C), rho)

