"""Exponent vectors, the hlex / rlex / Borel orders and Borel matrix witnesses.

Exponent vectors are plain tuples of non-negative ints; ``a[0]`` is the
exponent of ``X_1``.  Index-valued helpers (:func:`m_index`,
:func:`mu_index`) return 1-based variable indices.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

ExponentVec = tuple  # tuple[int, ...], entries >= 0
IntVec = tuple  # tuple[int, ...], entries may be negative
UpperTriMatrix = tuple  # tuple[tuple[int, ...], ...]


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _check_same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")


def degree(a: Sequence[int]) -> int:
    return sum(a)


def m_index(a: Sequence[int]) -> int:
    """Largest 1-based index with a nonzero entry; 1 for the zero vector."""
    for i in range(len(a) - 1, -1, -1):
        if a[i] != 0:
            return i + 1
    return 1


def mu_index(a: Sequence[int]) -> int:
    """Smallest 1-based index with a nonzero entry; n for the zero vector."""
    for i, x in enumerate(a):
        if x != 0:
            return i + 1
    return len(a)


def star(a: Sequence[int]) -> ExponentVec:
    """Zero out the last entry."""
    return tuple(a[:-1]) + (0,)


def add(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def plus(a: Sequence[int], rho: Sequence[int]) -> ExponentVec:
    """``a + rho``; raises if the result leaves N^n."""
    c = add(a, rho)
    if any(x < 0 for x in c):
        raise ValueError(f"{tuple(a)} + {tuple(rho)} has a negative entry")
    return c


def positive_part(rho: Sequence[int]) -> ExponentVec:
    return tuple(max(x, 0) for x in rho)


def negative_part(rho: Sequence[int]) -> ExponentVec:
    return tuple(max(-x, 0) for x in rho)


def is_exponent_vec(a: Sequence[int]) -> bool:
    return all(isinstance(x, int) and x >= 0 for x in a)


def unit(n: int, i: int) -> ExponentVec:
    """The 1-based standard vector e_i of length n."""
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def monomials(n: int, d: int) -> Iterator[ExponentVec]:
    """All of N^n_d, in hlex-descending order."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials(n - 1, d - first):
            yield (first,) + rest


# -- term orders ------------------------------------------------------------

def hlex_key(a: Sequence[int]) -> tuple:
    return (sum(a), tuple(a))


def rlex_key(a: Sequence[int]) -> tuple:
    return (sum(a), tuple(-x for x in reversed(a)))


def _cmp_keys(ka, kb) -> Ordering:
    if ka > kb:
        return Ordering.GT
    if ka < kb:
        return Ordering.LT
    return Ordering.EQ


def cmp_hlex(a: Sequence[int], b: Sequence[int]) -> Ordering:
    _check_same_length(a, b)
    return _cmp_keys(hlex_key(a), hlex_key(b))


def cmp_rlex(a: Sequence[int], b: Sequence[int]) -> Ordering:
    _check_same_length(a, b)
    return _cmp_keys(rlex_key(a), rlex_key(b))


@dataclass(frozen=True)
class TermOrder:
    """``hlex``, ``rlex`` or a weight order refined by one of them.

    Weight orders compare ``w.a`` first and break ties with ``tiebreak``.
    """

    kind: str
    weight: tuple | None = None
    tiebreak: str = "rlex"

    def __post_init__(self):
        if self.kind not in ("hlex", "rlex", "weight"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "weight":
            if self.weight is None:
                raise ValueError("weight order needs a weight vector")
            if self.tiebreak not in ("hlex", "rlex"):
                raise ValueError(f"unknown tiebreak {self.tiebreak!r}")
            object.__setattr__(self, "weight", tuple(int(w) for w in self.weight))

    def key(self, a: Sequence[int]) -> tuple:
        if self.kind == "hlex":
            return hlex_key(a)
        if self.kind == "rlex":
            return rlex_key(a)
        w = sum(x * y for x, y in zip(self.weight, a))
        return (w,) + (hlex_key(a) if self.tiebreak == "hlex" else rlex_key(a))

    def cmp(self, a: Sequence[int], b: Sequence[int]) -> Ordering:
        _check_same_length(a, b)
        return _cmp_keys(self.key(a), self.key(b))

    @property
    def admissible(self) -> bool:
        return self.kind in ("hlex", "rlex")

    def to_json(self):
        if self.kind == "weight":
            return {"weight": list(self.weight), "tiebreak": self.tiebreak}
        return self.kind

    @classmethod
    def from_json(cls, obj) -> "TermOrder":
        if isinstance(obj, TermOrder):
            return obj
        if isinstance(obj, str):
            return cls(obj)
        return cls("weight", tuple(obj["weight"]), obj.get("tiebreak", "rlex"))

    def __str__(self):
        if self.kind == "weight":
            return f"weight{self.weight}/{self.tiebreak}"
        return self.kind


HLEX = TermOrder("hlex")
RLEX = TermOrder("rlex")


def as_order(order) -> TermOrder:
    return TermOrder.from_json(order)


# -- Borel order ------------------------------------------------------------

def borel_geq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Prefix-sum dominance: a >=_Bor b."""
    _check_same_length(a, b)
    if sum(a) != sum(b):
        raise ValueError(f"degree mismatch: |{tuple(a)}| != |{tuple(b)}|")
    return all(x >= y for x, y in zip(accumulate(a), accumulate(b)))


def borel_moves_up(a: Sequence[int]) -> Iterator[ExponentVec]:
    """Single Borel moves a - e_j + e_i with i < j and a_j > 0."""
    n = len(a)
    for j in range(1, n):
        if a[j] == 0:
            continue
        for i in range(j):
            b = list(a)
            b[j] -= 1
            b[i] += 1
            yield tuple(b)


def borel_moves_down(a: Sequence[int]) -> Iterator[ExponentVec]:
    """Single moves a - e_i + e_j with i < j and a_i > 0."""
    n = len(a)
    for i in range(n - 1):
        if a[i] == 0:
            continue
        for j in range(i + 1, n):
            b = list(a)
            b[i] -= 1
            b[j] += 1
            yield tuple(b)


def borel_witness(a: Sequence[int], b: Sequence[int]) -> UpperTriMatrix:
    """Upper triangular M >= 0 with row sums ``a`` and column sums ``b``.

    Starts from the bidiagonal matrix built from the prefix-sum surpluses
    and removes negative diagonal entries one unit at a time by moving mass
    ``(p,l),(l,q) -> (l,l),(p,q)``.
    """
    if not borel_geq(a, b):
        raise ValueError(f"{tuple(a)} is not Borel-greater than {tuple(b)}")
    n = len(a)
    alpha = [0] + [s - t for s, t in zip(accumulate(a), accumulate(b))][: n - 1] + [0]
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = b[i] - alpha[i]
        if i + 1 < n:
            M[i][i + 1] = alpha[i + 1]
    while True:
        neg = [j for j in range(n) if M[j][j] < 0]
        if not neg:
            break
        l = neg[0]
        p = next(i for i in range(l) if M[i][l] > 0)
        q = next(j for j in range(l + 1, n) if M[l][j] > 0)
        M[l][l] += 1
        M[p][q] += 1
        M[p][l] -= 1
        M[l][q] -= 1
    return tuple(tuple(row) for row in M)


def row_sums(M: UpperTriMatrix) -> tuple:
    return tuple(sum(row) for row in M)


def col_sums(M: UpperTriMatrix) -> tuple:
    return tuple(sum(col) for col in zip(*M))


def is_upper_tri(M: UpperTriMatrix) -> bool:
    n = len(M)
    return all(len(row) == n for row in M) and all(
        M[i][j] == 0 for i in range(n) for j in range(i)
    ) and all(x >= 0 for row in M for x in row)


def sort_hlex_desc(vecs: Iterable[Sequence[int]]) -> list:
    return sorted((tuple(v) for v in vecs), key=hlex_key, reverse=True)
