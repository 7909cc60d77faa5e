"""Polynomials over Q, reduced Groebner bases and the ideal operations built on them."""
from __future__ import annotations

import heapq
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .orders import RLEX, TermOrder, add, as_order, monomials, sub


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(map(operator.le, a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Poly:
    """Sparse polynomial: a mapping exponent tuple -> nonzero Fraction."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not have length {n}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, e: Sequence[int], c=1) -> "Poly":
        return cls(len(e), {tuple(e): c})

    @classmethod
    def binomial(cls, c: Sequence[int], d: Sequence[int]) -> "Poly":
        """X^c - X^d."""
        return cls(len(c), [(c, 1), (d, -1)])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        parts = [f"{c}*X^{list(e)}" for e, c in sorted(self.terms.items(), reverse=True)]
        return "Poly(" + " + ".join(parts) + ")"

    def to_json(self) -> list:
        return [{"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in sorted(self.terms.items(), reverse=True)]

    @classmethod
    def from_json(cls, obj, n: int | None = None) -> "Poly":
        if n is None:
            if not obj:
                raise ValueError("zero polynomial needs n")
            n = len(obj[0]["exp"])
        return cls(n, [(t["exp"], Fraction(int(t["num"]), int(t.get("den", 1)))) for t in obj])

    def __add__(self, other: "Poly") -> "Poly":
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Poly._raw(self.n, t)

    def __neg__(self):
        return Poly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly._raw(self.n, {})
        return Poly._raw(self.n, {e: c * v for e, v in self.terms.items()})

    def shift(self, u: Sequence[int]) -> "Poly":
        """Multiply by the monomial X^u."""
        return Poly._raw(self.n, {add(e, u): c for e, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = add(e1, e2)
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return Poly._raw(self.n, t)

    def support(self) -> set:
        return set(self.terms)

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree of a zero or inhomogeneous polynomial")
        return degs.pop()

    def leading_exp(self, order: TermOrder) -> tuple:
        return max(self.terms, key=order.key)

    def leading_coef(self, order: TermOrder) -> Fraction:
        return self.terms[self.leading_exp(order)]

    def monic(self, order: TermOrder) -> "Poly":
        return self.scale(1 / self.leading_coef(order))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def stripped_last(self) -> "Poly":
        """Divide by the largest power of X_n dividing every term."""
        if not self.terms:
            return self
        k = min(e[-1] for e in self.terms)
        if k == 0:
            return self
        return Poly._raw(self.n, {e[:-1] + (e[-1] - k,): c for e, c in self.terms.items()})


# -- monomial ideals --------------------------------------------------------

def minimalize(exps: Iterable[Sequence[int]]) -> frozenset:
    """Drop exponents divisible by another one."""
    pool = sorted({tuple(e) for e in exps}, key=lambda e: (sum(e), e))
    keep: list = []
    for e in pool:
        if not any(_divides(g, e) for g in keep):
            keep.append(e)
    return frozenset(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators."""

    n: int
    gens: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        gens = minimalize(self.gens)
        if any(len(g) != self.n for g in gens):
            raise ValueError("generator length does not match n")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def of(cls, n: int, exps: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(n, frozenset(tuple(e) for e in exps))

    def contains(self, e: Sequence[int]) -> bool:
        return any(_divides(g, e) for g in self.gens)

    def sorted_gens(self) -> list:
        from .orders import hlex_key

        return sorted(self.gens, key=hlex_key, reverse=True)

    def component(self, k: int) -> set:
        """Exponents of the monomials of degree k in the ideal."""
        return {e for e in monomials(self.n, k) if self.contains(e)} if self.n else set()

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def colon_var(self, i: int) -> "MonomialIdeal":
        """(I : X_i^oo) for the 1-based variable index i."""
        return MonomialIdeal.of(self.n, (g[: i - 1] + (0,) + g[i:] for g in self.gens))

    def truncate(self, k: int) -> "MonomialIdeal":
        out = set()
        for g in self.gens:
            dg = sum(g)
            if dg >= k:
                out.add(g)
            else:
                out.update(add(g, u) for u in monomials(self.n, k - dg))
        return MonomialIdeal.of(self.n, out)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return (0,) * self.n in self.gens

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.sorted_gens()]}

    @classmethod
    def from_json(cls, obj) -> "MonomialIdeal":
        return cls.of(obj["n"], obj["gens"])

    def to_ideal(self, order=RLEX) -> "IdealGB":
        return IdealGB(as_order(order), tuple(Poly.monomial(g) for g in self.sorted_gens()), self.n)


# -- Groebner bases ---------------------------------------------------------

@dataclass(frozen=True)
class IdealGB:
    """Homogeneous ideal stored as its reduced, monic Groebner basis."""

    order: TermOrder
    basis: tuple
    n: int

    def leading_exps(self) -> list:
        return [g.leading_exp(self.order) for g in self.basis]

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def reducer(self) -> "_Reducer":
        r = self.__dict__.get("_reducer")
        if r is None:
            r = _Reducer(self.basis, self.order)
            object.__setattr__(self, "_reducer", r)
        return r

    def reduce(self, f: Poly) -> Poly:
        if not f.terms:
            return f
        if not f.is_homogeneous():
            return normal_form(f, self.basis, self.order)
        return Poly._raw(f.n, self.reducer().reduce(f.terms))

    def contains(self, f: Poly) -> bool:
        return not self.reduce(f)

    def max_degree(self) -> int:
        return max((g.degree for g in self.basis), default=0)

    def to_json(self) -> dict:
        return {"n": self.n, "order": self.order.to_json(),
                "gens": [g.to_json() for g in self.basis]}

    @classmethod
    def from_json(cls, obj) -> "IdealGB":
        """Rebuilds the basis with Buchberger rather than trusting the input."""
        from .orders import TermOrder

        n = obj["n"]
        gens = [Poly.from_json(g, n) for g in obj["gens"]]
        return buchberger(gens, TermOrder.from_json(obj["order"]), n=n)

    def with_order(self, order) -> "IdealGB":
        order = as_order(order)
        if order == self.order:
            return self
        return buchberger(self.basis, order, n=self.n)


class _Elem:
    __slots__ = ("lead", "lc", "terms", "deg")

    def __init__(self, terms: dict, order: TermOrder):
        self.lead = max(terms, key=order.key)
        lc = terms[self.lead]
        self.terms = {e: c / lc for e, c in terms.items()} if lc != 1 else dict(terms)
        self.lc = 1
        self.deg = sum(self.lead)


class _Index:
    """Leads of a basis grouped for divisor search on degree-dm monomials.

    A lower degree group is either scanned or, when that is cheaper, probed
    by looking up m - u for every u of the missing degree.
    """

    def __init__(self, elems: Sequence[_Elem], dm: int, n: int):
        self.exact: dict = {}
        groups: dict = {}
        for g in elems:
            self.exact.setdefault(g.lead, g)
            if g.deg < dm:
                groups.setdefault(g.deg, []).append(g)
        self.groups = []
        for deg in sorted(groups, reverse=True):
            shifts = list(monomials(n, dm - deg)) if n else []
            if len(shifts) < len(groups[deg]):
                self.groups.append((None, shifts))
            else:
                self.groups.append((groups[deg], None))

    def find(self, m: tuple):
        g = self.exact.get(m)
        if g is not None:
            return g
        for group, shifts in self.groups:
            if group is None:
                for u in shifts:
                    e = tuple(x - y for x, y in zip(m, u))
                    if min(e) >= 0:
                        g = self.exact.get(e)
                        if g is not None:
                            return g
            else:
                for h in group:
                    if _divides(h.lead, m):
                        return h
        return None


def _reduce(p: dict, elems: Sequence[_Elem], key, full: bool = True) -> dict:
    """Remainder of p (homogeneous) modulo elems."""
    if not p:
        return {}
    m0 = next(iter(p))
    return _reduce_core(p, _Index(elems, sum(m0), len(m0)), key, full)


def _reduce_core(p: dict, index: _Index, key, full: bool) -> dict:
    p = dict(p)
    rem: dict = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        g = index.find(m)
        if g is None:
            if not full:
                rem.update(p)
                return rem
            rem[m] = c
            del p[m]
            continue
        q = sub(m, g.lead)
        for e, v in g.terms.items():
            e2 = add(e, q)
            nv = p.get(e2, 0) - c * v
            if nv:
                p[e2] = nv
            else:
                p.pop(e2, None)
    return rem


class _Reducer:
    """Reduction modulo a fixed basis, indexed once per degree."""

    def __init__(self, basis: Sequence[Poly], order: TermOrder):
        self.key = order.key
        self.elems = [_Elem(g.terms, order) for g in basis if g.terms]
        self._index: dict = {}

    def reduce(self, p: dict) -> dict:
        if not p:
            return {}
        m0 = next(iter(p))
        dm = sum(m0)
        if dm not in self._index:
            self._index[dm] = _Index(self.elems, dm, len(m0))
        return _reduce_core(p, self._index[dm], self.key, True)


def normal_form(f: Poly, G: Sequence[Poly], order) -> Poly:
    order = as_order(order)
    elems = [_Elem(g.terms, order) for g in G if g.terms]
    return Poly._raw(f.n, _reduce(f.terms, elems, order.key))


def _check_homogeneous(gens: Sequence[Poly]) -> None:
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"inhomogeneous generator {g!r}")


def _interreduce(elems: list, order: TermOrder) -> list:
    elems = sorted(elems, key=lambda g: order.key(g.lead))
    kept: list = []
    for g in elems:
        if not any(_divides(h.lead, g.lead) for h in kept):
            kept.append(g)
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        tail = dict(g.terms)
        del tail[g.lead]
        red = _reduce(tail, others, order.key)
        red[g.lead] = Fraction(1)
        out.append(_Elem(red, order))
    return out


def buchberger(gens: Iterable[Poly], order=RLEX, n: int | None = None) -> IdealGB:
    """Reduced Groebner basis, pairs processed by lowest lcm degree first."""
    order = as_order(order)
    gens = [g for g in gens if g.terms]
    if n is None:
        if not gens:
            raise ValueError("cannot infer n for the zero ideal")
        n = gens[0].n
    _check_homogeneous(gens)
    key = order.key
    basis: list = []
    heap: list = []
    pending: set = set()

    def add_elem(terms):
        g = _Elem(terms, order)
        basis.append(g)
        j = len(basis) - 1
        mono = len(g.terms) == 1
        for i in range(j):
            gi = basis[i]
            # monomial pairs and coprime pairs reduce to zero; never queued
            if mono and len(gi.terms) == 1:
                continue
            if all(x == 0 or y == 0 for x, y in zip(gi.lead, g.lead)):
                continue
            lcm = _lcm(gi.lead, g.lead)
            heapq.heappush(heap, (sum(lcm), key(lcm), i, j))
            pending.add((i, j))

    # feed generators in increasing degree so early reductions stay small
    for g in sorted(gens, key=lambda g: (g.degree, key(g.leading_exp(order)))):
        r = _reduce(g.terms, basis, key)
        if r:
            add_elem(r)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        gi, gj = basis[i], basis[j]
        lcm = _lcm(gi.lead, gj.lead)
        if _chain_skip(i, j, lcm, basis, pending):
            continue
        ui, uj = sub(lcm, gi.lead), sub(lcm, gj.lead)
        s: dict = {}
        for e, c in gi.terms.items():
            s[add(e, ui)] = c
        for e, c in gj.terms.items():
            e2 = add(e, uj)
            v = s.get(e2, 0) - c
            if v:
                s[e2] = v
            else:
                s.pop(e2, None)
        r = _reduce(s, basis, key)
        if r:
            add_elem(r)
    final = _interreduce(basis, order)
    final.sort(key=lambda g: key(g.lead), reverse=True)
    return IdealGB(order, tuple(Poly._raw(n, g.terms) for g in final), n)


def _chain_skip(i, j, lcm, basis, pending) -> bool:
    for k, gk in enumerate(basis):
        if k == i or k == j or not _divides(gk.lead, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def is_groebner(gens: Sequence[Poly], order) -> bool:
    """True iff every S-polynomial of ``gens`` reduces to zero."""
    order = as_order(order)
    red = _Reducer(gens, order)
    elems = red.elems
    for j in range(len(elems)):
        for i in range(j):
            gi, gj = elems[i], elems[j]
            if all(x == 0 or y == 0 for x, y in zip(gi.lead, gj.lead)):
                continue
            if len(gi.terms) == 1 and len(gj.terms) == 1:
                continue
            lcm = _lcm(gi.lead, gj.lead)
            s = dict(Poly._raw(0, gi.terms).shift(sub(lcm, gi.lead)).terms)
            for e, c in gj.terms.items():
                e2 = add(e, sub(lcm, gj.lead))
                v = s.get(e2, 0) - c
                if v:
                    s[e2] = v
                else:
                    s.pop(e2, None)
            if red.reduce(s):
                return False
    return True


def ideal(gens: Iterable[Poly], order=RLEX, n: int | None = None) -> IdealGB:
    return buchberger(gens, order, n)


def initial_ideal(I: IdealGB) -> MonomialIdeal:
    return MonomialIdeal.of(I.n, I.leading_exps())


def saturate_wrt_last(I: IdealGB) -> IdealGB:
    """(I : X_n^oo) by stripping X_n from the rlex basis."""
    if I.order != RLEX:
        raise ValueError("saturation by the last variable needs an rlex basis")
    return buchberger([g.stripped_last() for g in I.basis], RLEX, n=I.n)


def apply_matrix(g: Sequence[Sequence], f: Poly) -> Poly:
    """Substitute X_j -> sum_i g[i][j] X_i."""
    n = f.n
    if len(g) != n or any(len(row) != n for row in g):
        raise ValueError(f"matrix is not {n}x{n}")
    images = []
    for j in range(n):
        images.append(Poly(n, [(tuple(1 if k == i else 0 for k in range(n)), g[i][j]) for i in range(n)]))
    return substitute(f, images)


def substitute(f: Poly, images: Sequence[Poly]) -> Poly:
    """Substitute X_j -> images[j]; powers are cached per call."""
    n = f.n
    cache: dict = {}

    def power(j, k):
        if (j, k) not in cache:
            cache[(j, k)] = Poly.monomial((0,) * n) if k == 0 else power(j, k - 1) * images[j]
        return cache[(j, k)]

    out: dict = {}
    for e, c in f.terms.items():
        term = Poly._raw(n, {(0,) * n: c})
        for j, k in enumerate(e):
            if k:
                term = term * power(j, k)
        for e2, v in term.terms.items():
            nv = out.get(e2, 0) + v
            if nv:
                out[e2] = nv
            else:
                out.pop(e2, None)
    return Poly._raw(n, out)


def transform_ideal(g: Sequence[Sequence], I: IdealGB, order=None) -> IdealGB:
    return buchberger([apply_matrix(g, f) for f in I.basis], order or I.order, n=I.n)


def ideal_equal(I: IdealGB, J: IdealGB) -> bool:
    if I.n != J.n:
        raise ValueError("ideals live in different rings")
    return all(J.contains(f) for f in I.basis) and all(I.contains(f) for f in J.basis)


def truncate_ideal(I: IdealGB, k: int) -> IdealGB:
    """Groebner basis of the truncation I_{>=k}."""
    gens = []
    for g in I.basis:
        dg = g.degree
        if dg >= k:
            gens.append(g)
        else:
            gens.extend(g.shift(u) for u in monomials(I.n, k - dg))
    if not gens:
        return I
    return buchberger(gens, I.order, n=I.n)


# -- weights ----------------------------------------------------------------

def weight_of(omega: Sequence[int], e: Sequence[int]) -> int:
    return sum(w * x for w, x in zip(omega, e))


def beta_deform(f: Poly, omega: Sequence[int], a) -> Poly:
    """sum_m a^(alpha(f) - alpha(m)) c_m m with alpha the omega-weight."""
    if not f.terms:
        return f
    a = Fraction(a)
    top = max(weight_of(omega, e) for e in f.terms)
    out = {}
    for e, c in f.terms.items():
        k = top - weight_of(omega, e)
        v = c if k == 0 else c * a ** k
        if v:
            out[e] = v
    return Poly._raw(f.n, out)


def initial_form(f: Poly, omega: Sequence[int]) -> Poly:
    return beta_deform(f, omega, 0)


def _fourier_motzkin(rows: list, n: int, cap: int = 4000):
    """Rational point with a.x >= r for every (a, r) in rows, or None.

    Plain elimination of the last variable first; ``cap`` bounds the row
    count so degenerate blow-ups bail out instead of hanging.
    """
    stages = []
    cur = [(tuple(Fraction(x) for x in a), Fraction(r)) for a, r in rows]
    for k in range(n - 1, -1, -1):
        stages.append(cur)
        pos = [row for row in cur if row[0][k] > 0]
        neg = [row for row in cur if row[0][k] < 0]
        nxt = {row for row in cur if row[0][k] == 0}
        for ap, rp in pos:
            for an, rn in neg:
                s, t = -an[k], ap[k]
                a = tuple(s * x + t * y for x, y in zip(ap, an))
                nxt.add((a, s * rp + t * rn))
        cur = [_normalise_row(a, r) for a, r in nxt]
        cur = list(dict.fromkeys(cur))
        if len(cur) > cap:
            return None
    if any(r > 0 for _, r in cur):
        return "infeasible"
    x = [Fraction(0)] * n
    for k in range(n):
        lo, hi = None, None
        for a, r in stages[n - 1 - k]:
            if a[k] == 0:
                continue
            rest = r - sum(a[j] * x[j] for j in range(k))
            bound = rest / a[k]
            if a[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        x[k] = _pick(lo, hi)
    return x


def _normalise_row(a, r):
    scale = max((abs(v) for v in a), default=0)
    if scale == 0:
        return a, r
    return tuple(v / scale for v in a), r / scale


def _pick(lo, hi) -> Fraction:
    import math

    if lo is not None and hi is not None and lo > hi:
        raise RuntimeError("back substitution met an empty interval")
    if (lo is None or lo <= 0) and (hi is None or hi >= 0):
        return Fraction(0)
    if lo is not None and lo > 0:
        c = Fraction(math.ceil(lo))
        return c if hi is None or c <= hi else lo
    f = Fraction(math.floor(hi))
    return f if lo is None or f >= lo else hi


def _weight_candidates(order: TermOrder, n: int, D: int):
    # base-B digit weights realise lex / revlex on homogeneous differences of
    # entries bounded by D once B > D + 1
    for B in range(2, D + 3):
        if order.kind == "hlex":
            yield tuple(B ** (n - 1 - i) for i in range(n))
        else:
            yield tuple(B ** (n - 1) - B ** i for i in range(n))


def weight_certifies(I: IdealGB, omega: Sequence[int]) -> bool:
    for g in I.basis:
        lead = g.leading_exp(I.order)
        wl = weight_of(omega, lead)
        if any(weight_of(omega, e) >= wl for e in g.terms if e != lead):
            return False
    forms = [initial_form(g, omega) for g in I.basis]
    if not forms:
        return True
    tie = TermOrder("weight", tuple(omega), I.order.kind)
    return initial_ideal(buchberger(forms, tie, n=I.n)) == initial_ideal(I)


def find_weight(I: IdealGB, order=None) -> tuple:
    """Integer weight omega with in_omega(I) = in_order(I), certified.

    Solves omega.(lead - m) >= 1 by Fourier-Motzkin; if elimination grows
    past its row cap, falls back to digit weights.
    """
    import math

    order = as_order(order or I.order)
    if order.kind not in ("hlex", "rlex"):
        raise ValueError("find_weight realises hlex or rlex only")
    if order != I.order:
        I = I.with_order(order)
    if I.is_monomial():
        return (0,) * I.n
    rows = set()
    for g in I.basis:
        lead = g.leading_exp(order)
        rows.update((sub(lead, e), 1) for e in g.terms if e != lead)
    sol = _fourier_motzkin(sorted(rows), I.n)
    if sol == "infeasible":
        raise RuntimeError("weight inequalities are infeasible")
    if sol is not None:
        den = math.lcm(*(x.denominator for x in sol))
        omega = tuple(int(x * den) for x in sol)
        # homogeneous input: a common shift keeps every comparison
        omega = tuple(w - min(omega) for w in omega)
        if weight_certifies(I, omega):
            return omega
    D = max(max(e) for g in I.basis for e in g.terms)
    for omega in _weight_candidates(order, I.n, D):
        if weight_certifies(I, omega):
            return omega
    raise RuntimeError("no certified weight vector found")
