"""Seeded random Borel sets and binomial systems for tests and experiments."""
from __future__ import annotations

import random

from .binsys import BinomialSystem, SystemClass, _close, classify
from .borel import BorelSet, borel_closure, roots
from .orders import hlex_key, m_index, monomials, sub


def random_borel_set(rng: random.Random, n: int, d: int, k: int | None = None) -> BorelSet:
    """Borel closure of k random monomials (k random in 1..3 by default)."""
    allm = list(monomials(n, d))
    k = rng.randint(1, 3) if k is None else k
    return borel_closure(rng.sample(allm, min(k, len(allm))))


def random_system(rng: random.Random, n: int, d: int, at_least: SystemClass,
                  tries: int = 300, empty_ok: bool = True) -> BinomialSystem:
    """Random system whose class is at least ``at_least``.

    Picks a Borel set, a root c0 and a target t outside it, then closes
    C = {c0, ...} under the forced Borel conditions.  When nothing turns up
    (Mall systems with C nonempty do not exist for d = 2) and ``empty_ok``
    is set, a system with C empty is returned instead.
    """
    allm = list(monomials(n, d))
    for _ in range(tries):
        B = random_borel_set(rng, n, d)
        outside = [t for t in allm if t not in B.elems]
        if not outside:
            continue
        c0 = rng.choice(sorted(roots(B), key=hlex_key))
        if at_least == SystemClass.MALL:
            # Mall needs rho_mu > 0 and m(c) = m(c + rho)
            outside = [t for t in outside
                       if hlex_key(t) > hlex_key(c0) and m_index(t) == m_index(c0)]
            if not outside:
                continue
        t = rng.choice(outside)
        rho = sub(t, c0)
        C = _close(c0, rho, B.elems)
        if C is None:
            continue
        try:
            sys = BinomialSystem(n, d, B.elems - C, C, rho)
        except ValueError:
            continue
        if classify(sys) >= at_least:
            return sys
    if empty_ok:
        return BinomialSystem(n, d, random_borel_set(rng, n, d).elems, frozenset(), (0,) * n)
    raise RuntimeError(f"no {at_least} system found in N^{n}_{d}")


def random_mall_system(rng: random.Random, n: int, d: int) -> BinomialSystem:
    return random_system(rng, n, d, SystemClass.MALL)


def random_good_system(rng: random.Random, n: int, d: int) -> BinomialSystem:
    return random_system(rng, n, d, SystemClass.GOOD)


def random_good_triple(rng: random.Random, n: int, d: int, tries: int = 1000) -> tuple:
    """(b, c, rho) with b+rho, c+rho >= 0, b = c before m(rho), b >=_Bor c."""
    from .orders import borel_geq, m_index

    allm = list(monomials(n, d))
    for _ in range(tries):
        b, c = rng.choice(allm), rng.choice(allm)
        if not borel_geq(b, c):
            continue
        t = rng.choice(allm)
        rho = sub(t, c)
        if not any(rho):
            continue
        m = m_index(rho)
        if b[: m - 1] != c[: m - 1]:
            continue
        if min(x + r for x, r in zip(b, rho)) < 0:
            continue
        return b, c, rho
    raise RuntimeError("no valid triple found")
