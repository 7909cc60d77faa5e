"""Shared test helpers: monomial parsing, brute-force counting, random data."""
from __future__ import annotations

import re
from fractions import Fraction

from hypothesis import strategies as st

from groebdeform.orders import monomials
from groebdeform.polyalg import MonomialIdeal

VARS5 = "xyztu"


def parse_monomial(text: str, names: str = VARS5) -> tuple:
    e = [0] * len(names)
    for var, power in re.findall(r"([a-z])(?:\^(\d+))?", text):
        e[names.index(var)] += int(power or 1)
    return tuple(e)


def parse_monomials(text: str, names: str = VARS5) -> set:
    return {parse_monomial(w, names) for w in text.split()}


def count_outside(I: MonomialIdeal, j: int) -> int:
    """Monomials of degree j not in I, by enumeration."""
    return sum(1 for e in monomials(I.n, j) if not I.contains(e))


def rank(rows: list) -> int:
    """Rank of a list of sparse rows (dicts) over Q by echelon reduction."""
    pivots: dict = {}  # pivot key -> row whose largest key is the pivot
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            k = max(row)
            if k not in pivots:
                pivots[k] = row
                break
            c = row[k] / pivots[k][k]
            for kk, vv in pivots[k].items():
                v = row.get(kk, 0) - c * vv
                if v:
                    row[kk] = v
                else:
                    row.pop(kk, None)
    return len(pivots)


def ideal_dim(gens: list, n: int, j: int) -> int:
    """dim_K of the degree-j part of the ideal spanned by gens, by linear algebra."""
    rows = []
    for g in gens:
        dg = g.degree
        if dg > j:
            continue
        for u in monomials(n, j - dg):
            rows.append(g.shift(u).terms)
    return rank(rows)


def vectors(n: int, d: int):
    return st.lists(st.integers(0, d), min_size=n, max_size=n).filter(lambda v: sum(v) == d)


def same_degree_pair(max_n: int = 4, max_d: int = 4):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        d = draw(st.integers(0, max_d))
        allm = list(monomials(n, d))
        a = draw(st.sampled_from(allm))
        b = draw(st.sampled_from(allm))
        return tuple(a), tuple(b)
    return build()
