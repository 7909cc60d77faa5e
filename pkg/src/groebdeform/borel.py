"""Borel sets, their slices and normal forms, lexicographic sets and lex ideals."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .hilbert import NumFn, QPolynomial, gotzmann_bound, hf_monomial_quotient
from .orders import (borel_geq, borel_moves_down, borel_moves_up, hlex_key, m_index,
                     monomials, sort_hlex_desc, star)
from .polyalg import MonomialIdeal


def _degree_of(S: Iterable[Sequence[int]]) -> int | None:
    degs = {sum(a) for a in S}
    if len(degs) > 1:
        raise ValueError(f"mixed degrees {sorted(degs)}")
    return degs.pop() if degs else None


@dataclass(frozen=True)
class BorelSet:
    n: int
    d: int
    elems: frozenset

    def __post_init__(self):
        elems = frozenset(tuple(a) for a in self.elems)
        object.__setattr__(self, "elems", elems)
        for a in elems:
            if len(a) != self.n or sum(a) != self.d or min(a, default=0) < 0:
                raise ValueError(f"{a} is not in N^{self.n}_{self.d}")
        if not is_borel(elems):
            raise ValueError("not closed under Borel moves")

    def __len__(self):
        return len(self.elems)

    def __contains__(self, a):
        return tuple(a) in self.elems

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> list:
        return sort_hlex_desc(self.elems)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.of(self.n, self.elems)

    def saturated_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.of(self.n, (star(a) for a in self.elems))

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "elems": [list(a) for a in self.sorted()]}

    @classmethod
    def from_json(cls, obj) -> "BorelSet":
        return cls(obj["n"], obj["d"], frozenset(tuple(a) for a in obj["elems"]))


def is_borel(S: Iterable[Sequence[int]]) -> bool:
    S = {tuple(a) for a in S}
    _degree_of(S)
    return all(b in S for a in S for b in borel_moves_up(a))


def borel_closure(S: Iterable[Sequence[int]], n: int | None = None) -> BorelSet:
    S = {tuple(a) for a in S}
    d = _degree_of(S)
    if d is None:
        if n is None:
            raise ValueError("closure of the empty set needs n")
        return BorelSet(n, 0, frozenset())
    todo = list(S)
    while todo:
        a = todo.pop()
        for b in borel_moves_up(a):
            if b not in S:
                S.add(b)
                todo.append(b)
    return BorelSet(len(next(iter(S))), d, frozenset(S))


def roots(B: BorelSet) -> set:
    """Borel-minimal elements of B."""
    return {a for a in B.elems if not any(b in B.elems for b in borel_moves_down(a))}


def growth_vector(B: BorelSet) -> tuple:
    gv = [0] * B.n
    for a in B.elems:
        gv[m_index(a) - 1] += 1
    return tuple(gv)


def height_vector(B: BorelSet) -> tuple:
    hv = [0] * B.d
    for a in B.elems:
        if a[-1]:
            hv[a[-1] - 1] += 1
    return tuple(hv)


def m_slice(n: int, d: int, i: int) -> list:
    """(N^n_d)^{(i)} in hlex-descending order."""
    return [a for a in monomials(n, d) if m_index(a) == i]


def height_slice(n: int, d: int, k: int) -> list:
    """N^n_d(k): last exponent equal to k, hlex-descending."""
    return [a for a in monomials(n, d) if a[-1] == k]


def ghl_normal_form(B: BorelSet) -> BorelSet:
    """Borel set with the gv and hv of B whose slices are hlex segments."""
    n, d = B.n, B.d
    gv, hv = growth_vector(B), height_vector(B)
    out = set()
    for i in range(1, n):
        out.update(m_slice(n, d, i)[: gv[i - 1]])
    for k in range(1, d + 1):
        out.update(height_slice(n, d, k)[: hv[k - 1]])
    if not is_borel(out):
        raise ValueError("slice-wise lex assembly is not Borel")
    L = BorelSet(n, d, frozenset(out))
    assert growth_vector(L) == gv and height_vector(L) == hv
    return L


def is_ghl(B: BorelSet) -> bool:
    return ghl_normal_form(B) == B


def lex_set(n: int, d: int, k: int) -> set:
    allm = list(monomials(n, d))
    if not 0 <= k <= len(allm):
        raise ValueError(f"k={k} outside 0..{len(allm)}")
    return set(allm[:k])


def lex_borel(n: int, d: int, k: int) -> BorelSet:
    return BorelSet(n, d, frozenset(lex_set(n, d, k)))


def is_lex(B: BorelSet) -> bool:
    return B.elems == lex_set(B.n, B.d, len(B))


def lex_ideal_from_hf(h: NumFn, n: int, d_max: int) -> MonomialIdeal:
    """Lex ideal whose degree-i piece has h(i) elements, i <= d_max.

    ``h`` is the Hilbert function of the ideal itself (dim_K a_i).
    """
    gens = []
    prev: set = set()
    for i in range(d_max + 1):
        k = int(h(i))
        seg = lex_set(n, i, k)
        grown = {tuple(a[:j] + (a[j] + 1,) + a[j + 1:]) for a in prev for j in range(n)}
        if not grown <= seg:
            raise ValueError(f"h is not the Hilbert function of an ideal (degree {i})")
        gens.extend(seg - grown)
        prev = seg
    return MonomialIdeal.of(n, gens)


def saturated_lex_ideal(p: QPolynomial, n: int) -> MonomialIdeal:
    """The saturated lex ideal l_p with ideal-side Hilbert polynomial p."""
    D = gotzmann_bound(p, n - 1)
    k = p(D)
    if k.denominator != 1 or not 0 <= k <= len(list(monomials(n, D))):
        raise ValueError(f"p({D}) = {k} is not a valid count")
    L = lex_set(n, D, int(k))
    l_p = MonomialIdeal.of(n, (star(a) for a in L))
    ring = hf_monomial_quotient(MonomialIdeal(n), d_max=0).tail
    got = ring - hf_monomial_quotient(l_p).tail
    if got != p:
        raise ValueError("p is not an admissible Hilbert polynomial")
    return l_p


def borel_sets(n: int, d: int) -> list:
    """All Borel subsets of N^n_d (exponential; small n, d only)."""
    elems = sort_hlex_desc(monomials(n, d))
    # Borel sets are the order ideals (up-sets); grow them by adding minimal
    # candidates in hlex order to avoid duplicates
    out = []

    def rec(current: frozenset, start: int):
        out.append(current)
        for idx in range(start, len(elems)):
            a = elems[idx]
            if a in current:
                continue
            if all(b in current for b in borel_moves_up(a)):
                rec(current | {a}, idx + 1)

    rec(frozenset(), 0)
    return [BorelSet(n, d, s) for s in out]


def monomial_ideal_is_borel(I: MonomialIdeal) -> bool:
    """Borel check on every degree up to the largest generator degree."""
    for k in range(I.max_degree() + 1):
        if not is_borel(I.component(k)):
            return False
    return True


def borel_component(I: MonomialIdeal, d: int) -> BorelSet:
    return BorelSet(I.n, d, frozenset(I.component(d)))


def hlex_min(S: Iterable[Sequence[int]]):
    return min(S, key=hlex_key)


def hlex_max(S: Iterable[Sequence[int]]):
    return max(S, key=hlex_key)
