"""Cohomological Hilbert functions h^i of S/a for Borel ideals and binomial
ideals, read off a dimension filtration with Cohen-Macaulay quotients.

For a CM piece N of dimension i > 0 the only nonzero local cohomology is
H^i, with h^i_N(j) = (-1)^i (h_N(j) - p_N(j)); a piece of dimension 0
contributes h^0_N = h_N.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .binsys import (BinomialSystem, SystemClass, classify, dimension_chain, gb_rlex,
                     sat_gb)
from .gin import gin_compute, is_borel_ideal
from .hilbert import NumFn, QPolynomial, hf_monomial_ideal, hf_ring
from .orders import RLEX, as_order
from .polyalg import IdealGB, MonomialIdeal, initial_ideal

Source = Union[BinomialSystem, MonomialIdeal, IdealGB]


@dataclass(frozen=True)
class CohomProfile:
    n: int
    fns: tuple  # h^0, ..., h^n

    def __getitem__(self, i: int) -> NumFn:
        return self.fns[i]

    def leq(self, other: "CohomProfile", window) -> bool:
        return all(a.leq(b, window) for a, b in zip(self.fns, other.fns))

    def equals(self, other: "CohomProfile") -> bool:
        return all(a.equals(b) for a, b in zip(self.fns, other.fns))

    def alternating_sum(self, j: int) -> Fraction:
        return sum((-1) ** i * f(j) for i, f in enumerate(self.fns))

    def to_json(self) -> list:
        return [{"i": i, "fn": f.to_json()} for i, f in enumerate(self.fns)]

    @classmethod
    def from_json(cls, obj) -> "CohomProfile":
        fns = [NumFn.from_json(e["fn"]) for e in sorted(obj, key=lambda e: e["i"])]
        return cls(len(fns) - 1, tuple(fns))


def _ideal_hf(J) -> NumFn:
    if isinstance(J, IdealGB):
        J = initial_ideal(J)
    return hf_monomial_ideal(J)


def default_window(n: int, d: int) -> tuple:
    return (-d - n - 2, d + n + 2)


def _as_monomial(x) -> MonomialIdeal | None:
    if isinstance(x, MonomialIdeal):
        return x
    if isinstance(x, IdealGB) and x.is_monomial():
        return initial_ideal(x)
    return None


def filtration_ideals(x: Source, saturated: bool = False) -> list:
    """[a, F_0, ..., F_{n-1}] with F_0 = a^sat (a itself dropped when saturated).

    Monomial input must be Borel; its chain is the iterated colon by
    X_n, X_{n-1}, ...  Binomial systems use the F_i construction.
    """
    mono = _as_monomial(x)
    if mono is not None:
        if not is_borel_ideal(mono):
            raise ValueError("monomial input must be a Borel ideal")
        chain = [mono]
        for k in range(mono.n, 0, -1):
            chain.append(chain[-1].colon_var(k))
        return chain[1:] if saturated else chain
    if isinstance(x, BinomialSystem):
        if classify(x) < SystemClass.ADMISSIBLE:
            raise ValueError("binomial system must be admissible")
        chain = dimension_chain(x)
        return chain if saturated else [gb_rlex(x, certify=False)] + chain
    raise ValueError("cohomology is computed for Borel ideals and admissible systems only")


def dimension_filtration(sys: BinomialSystem, saturated: bool = True) -> list:
    return filtration_ideals(sys, saturated)


def piece_functions(x: Source, saturated: bool = False) -> tuple:
    """(n, [h_{N_0}, ..., h_{N_n}], h_{S/a}) for the filtration pieces."""
    chain = filtration_ideals(x, saturated)
    n = chain[0].n
    hfs = [_ideal_hf(J) for J in chain]
    ring = hf_ring(n, max(h.hi for h in hfs))
    quotient = ring - hfs[0]
    if saturated:
        pieces = [NumFn(())]
        rest = hfs
    else:
        pieces = [hfs[1] - hfs[0]]
        rest = hfs[1:]
    # rest = [F_0, ..., F_{n-1}]
    for i in range(1, n):
        pieces.append(rest[i] - rest[i - 1])
    pieces.append(ring - rest[-1])
    return n, pieces, quotient


def _cm_cohomology(h: NumFn, i: int, window) -> NumFn:
    if i == 0:
        return h
    p = h.tail
    lo = min(window[0], -1)
    hi = max(window[1], h.tail_from, h.hi)
    sign = (-1) ** i
    table = tuple((j, sign * (h(j) - p(j))) for j in range(lo, hi + 1))
    return NumFn(table, QPolynomial(), hi + 1, p.scale(-sign), lo - 1)


def cohom_profile(x: Source, saturated: bool = False, window=None) -> CohomProfile:
    n, pieces, _ = piece_functions(x, saturated)
    window = window or (-n - 6, n + 6)
    return CohomProfile(n, tuple(_cm_cohomology(h, i, window) for i, h in enumerate(pieces)))


def serre_check(x: Source, saturated: bool = False, window=None) -> bool:
    """sum (-1)^i h^i(j) = h_{S/a}(j) - p_{S/a}(j) on the window."""
    n, pieces, quotient = piece_functions(x, saturated)
    window = window or (-n - 6, n + 6)
    prof = CohomProfile(n, tuple(_cm_cohomology(h, i, window) for i, h in enumerate(pieces)))
    p = quotient.tail
    return all(prof.alternating_sum(j) == quotient(j) - p(j)
               for j in range(window[0], window[1] + 1))


def dimension_check(x: Source, saturated: bool = False) -> bool:
    """Piece i is zero or has a Hilbert polynomial of degree i - 1."""
    _, pieces, _ = piece_functions(x, saturated)
    for i, h in enumerate(pieces):
        if all(v == 0 for _, v in h.table) and h.tail.is_zero():
            continue
        if h.tail.degree != i - 1:
            return False
        if any(v < 0 for _, v in h.table):
            return False
    return True


def initial_source(x: Source, order, saturated: bool = False) -> MonomialIdeal:
    """in_order of a (or of a^sat) as a monomial ideal."""
    order = as_order(order)
    mono = _as_monomial(x)
    if mono is not None:
        return mono.colon_var(mono.n) if saturated else mono
    I = sat_gb(x, certify=False) if saturated else gb_rlex(x, certify=False)
    return initial_ideal(I.with_order(order))


def ideal_of(x: Source, saturated: bool = False) -> IdealGB:
    mono = _as_monomial(x)
    if mono is not None:
        J = mono.colon_var(mono.n) if saturated else mono
        return J.to_ideal(RLEX)
    return sat_gb(x, certify=False) if saturated else gb_rlex(x, certify=False)


def hs_monotone_check(x: Source, order, window=None, saturated: bool = False) -> bool:
    """h^i_{S/a} <= h^i_{S/in a} for all i on the window."""
    J = initial_source(x, order, saturated)
    if not is_borel_ideal(J):
        raise ValueError(f"in_{order} is not Borel; its cohomology is out of scope")
    n = J.n
    window = window or default_window(n, max(J.max_degree(), 1))
    left = cohom_profile(x, saturated, window)
    right = cohom_profile(J, False, window)
    return left.leq(right, window)


def hs_equality_check(x: Source, window=None, saturated: bool = False, trials: int = 2,
                      seed: int = 0) -> bool:
    """h^i_{S/a} = h^i_{S/Gin_rlex a} for all i on the window."""
    G = gin_compute(ideal_of(x, saturated), RLEX, trials, seed)
    n = G.n
    window = window or default_window(n, max(G.max_degree(), 1))
    left = cohom_profile(x, saturated, window)
    right = cohom_profile(G, False, window)
    return all(left[i].values(*window) == right[i].values(*window) for i in range(n + 1))
