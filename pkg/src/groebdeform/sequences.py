"""Connecting sequences of Groebner deformations.

A connecting sequence is a list of ideals c_0, ..., c_r where neighbours are
related by Gin_rlex or in_hlex, in either direction.  Sequences are built
from Borel ideals through Mall steps (and, for the <= f case, single swaps
towards a lex ideal) and every edge carries a recomputed certificate.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from .binsys import (BinomialSystem, SystemClass, classify, gb_rlex, mall_path_to_ghl,
                     mall_swap_to_lex, sat_gb, swap_window)
from .borel import (BorelSet, borel_component, ghl_normal_form, growth_vector, height_vector,
                    saturated_lex_ideal)
from .cohomology import CohomProfile, cohom_profile, default_window
from .gin import gin_compute, gin_with_witness, is_borel_ideal, unipotent_fixed_exact
from .hilbert import NumFn, QPolynomial, gotzmann_bound, hf_monomial_quotient, hf_ring
from .orders import HLEX, RLEX, star
from .polyalg import (IdealGB, MonomialIdeal, buchberger, ideal_equal, initial_ideal,
                      truncate_ideal)

LABELS = ("gin_rlex_fwd", "gin_rlex_bwd", "in_hlex_fwd", "in_hlex_bwd")
_FLIP = {"gin_rlex_fwd": "gin_rlex_bwd", "gin_rlex_bwd": "gin_rlex_fwd",
         "in_hlex_fwd": "in_hlex_bwd", "in_hlex_bwd": "in_hlex_fwd"}

# Gin certificates by random change of coordinates are used up to this many
# basis terms; larger ideals use the unipotent route (exact, deterministic)
DIRECT_GIN_TERMS = 150


# -- nodes ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Node:
    """An ideal together with where it came from.

    kind is "monomial", "binomial" (F(A, C, rho) or its saturation) or
    "basis" (anything else, given by a Groebner basis).
    """

    kind: str
    n: int
    mono: MonomialIdeal | None = None
    system: BinomialSystem | None = None
    saturated: bool = False
    basis: IdealGB | None = None

    @classmethod
    def monomial(cls, J: MonomialIdeal) -> "Node":
        return cls("monomial", J.n, mono=J)

    @classmethod
    def binomial(cls, sys: BinomialSystem, saturated: bool = False) -> "Node":
        if classify(sys) < SystemClass.ADMISSIBLE:
            raise ValueError("binomial nodes need an admissible system")
        return cls("binomial", sys.n, system=sys, saturated=saturated)

    @classmethod
    def general(cls, I: IdealGB) -> "Node":
        if I.is_monomial():
            return cls.monomial(initial_ideal(I))
        return cls("basis", I.n, basis=I.with_order(RLEX))

    @cached_property
    def ideal(self) -> IdealGB:
        if self.kind == "monomial":
            return self.mono.to_ideal(RLEX)
        if self.kind == "binomial":
            return sat_gb(self.system, certify=False) if self.saturated else \
                gb_rlex(self.system, certify=False)
        return self.basis

    @cached_property
    def initial(self) -> MonomialIdeal:
        """in_rlex of the node."""
        return self.mono if self.kind == "monomial" else initial_ideal(self.ideal)

    def is_borel_monomial(self) -> bool:
        return self.kind == "monomial" and is_borel_ideal(self.mono)

    def cohom_source(self):
        """What the cohomology module accepts for this node, or None."""
        if self.is_borel_monomial():
            return self.mono
        if self.kind == "binomial":
            return self.system
        return None

    def same_ideal(self, other: "Node") -> bool:
        if self.n != other.n:
            return False
        if self.kind == "monomial" and other.kind == "monomial":
            return self.mono == other.mono
        return ideal_equal(self.ideal, other.ideal)

    def describe(self) -> str:
        if self.kind == "monomial":
            return f"monomial ideal with {len(self.mono.gens)} generators"
        if self.kind == "binomial":
            sat = "saturated " if self.saturated else ""
            return f"{sat}binomial ideal with |A|={len(self.system.A)}, |C|={len(self.system.C)}"
        return f"ideal with {len(self.basis.basis)} basis elements"

    def to_json(self) -> dict:
        if self.kind == "monomial":
            return {"kind": "monomial", **self.mono.to_json()}
        if self.kind == "binomial":
            return {"kind": "binomial", "saturated": self.saturated, "system": self.system.to_json()}
        return {"kind": "basis", **self.basis.to_json()}

    @classmethod
    def from_json(cls, obj) -> "Node":
        kind = obj.get("kind")
        if kind == "monomial":
            return cls.monomial(MonomialIdeal.from_json(obj))
        if kind == "binomial":
            return cls.binomial(BinomialSystem.from_json(obj["system"]), bool(obj.get("saturated")))
        if kind == "basis":
            return cls.general(IdealGB.from_json(obj))
        raise ValueError(f"unknown node kind {kind!r}")


NodeLike = Union[Node, MonomialIdeal, IdealGB, BinomialSystem]


def as_node(x: NodeLike) -> Node:
    if isinstance(x, Node):
        return x
    if isinstance(x, MonomialIdeal):
        return Node.monomial(x)
    if isinstance(x, BinomialSystem):
        return Node.binomial(x)
    if isinstance(x, IdealGB):
        return Node.general(x)
    raise TypeError(f"cannot make a sequence node from {type(x).__name__}")


# -- bounds and sequences ---------------------------------------------------

@dataclass(frozen=True)
class BoundSpec:
    """f0 bounds h_{S/a^sat} (exactly or from above); fi bound h^i from below."""

    f0: NumFn
    mode: str = "equal"
    fi: tuple = ()  # ((i, NumFn), ...)

    def __post_init__(self):
        if self.mode not in ("equal", "leq"):
            raise ValueError(f"mode must be equal or leq, not {self.mode!r}")
        fi = tuple(sorted((int(i), f) for i, f in dict(self.fi).items()))
        object.__setattr__(self, "fi", fi)
        for f in [self.f0] + [f for _, f in fi]:
            if any(v < 0 for _, v in f.table):
                raise ValueError("bounds must be nonnegative")
            if not f.tail.is_zero() and f.tail.coeff(f.tail.degree) < 0:
                raise ValueError("bounds must be nonnegative")

    def lower(self, i: int) -> NumFn | None:
        return dict(self.fi).get(i)

    def to_json(self) -> dict:
        return {"mode": self.mode, "f0": self.f0.to_json(),
                "fi": [{"i": i, "fn": f.to_json()} for i, f in self.fi]}

    @classmethod
    def from_json(cls, obj) -> "BoundSpec":
        return cls(NumFn.from_json(obj["f0"]), obj.get("mode", "equal"),
                   tuple((e["i"], NumFn.from_json(e["fn"])) for e in obj.get("fi", [])))


@dataclass
class ConnectingSequence:
    nodes: list
    edges: list
    report: dict = field(default_factory=dict)
    pivot: int | None = None

    def __post_init__(self):
        self.nodes = [as_node(x) for x in self.nodes]
        if len(self.edges) != len(self.nodes) - 1:
            raise ValueError("a sequence has one edge fewer than nodes")
        bad = [e for e in self.edges if e not in LABELS]
        if bad:
            raise ValueError(f"unknown edge labels {bad}")

    def __len__(self):
        return len(self.nodes)

    def reversed(self) -> "ConnectingSequence":
        pivot = None if self.pivot is None else len(self.nodes) - 1 - self.pivot
        return ConnectingSequence(self.nodes[::-1], [_FLIP[e] for e in reversed(self.edges)],
                                  pivot=pivot)

    def concat(self, other: "ConnectingSequence") -> "ConnectingSequence":
        if not self.nodes[-1].same_ideal(other.nodes[0]):
            raise ValueError("sequences do not share an endpoint")
        return ConnectingSequence(self.nodes + other.nodes[1:], self.edges + other.edges,
                                  pivot=len(self.nodes) - 1)

    def to_json(self) -> dict:
        return {"nodes": [v.to_json() for v in self.nodes], "edges": list(self.edges),
                "pivot": self.pivot, "report": self.report}

    @classmethod
    def from_json(cls, obj) -> "ConnectingSequence":
        return cls([Node.from_json(v) for v in obj["nodes"]], list(obj["edges"]),
                   dict(obj.get("report") or {}), obj.get("pivot"))


# -- edges ------------------------------------------------------------------

def _gens_json(J: MonomialIdeal) -> list:
    return [list(g) for g in J.sorted_gens()]


def _gin_certificate(src: Node, tgt: Node, seed: int) -> dict:
    cert = {"method": None, "computed": None, "matrices": []}
    if tgt.kind != "monomial":
        cert.update(method="none", reason="a generic initial ideal is monomial")
        return cert | {"pass": False}
    if src.is_borel_monomial():
        # Borel ideals are fixed by the upper triangular group
        cert.update(method="borel-fixed", computed=_gens_json(src.mono))
        ok = src.mono == tgt.mono
    else:
        I = src.ideal
        terms = sum(len(g.terms) for g in I.basis)
        G = None
        if terms > DIRECT_GIN_TERMS and unipotent_fixed_exact(I):
            # Gin = in for ideals fixed by the unipotent group
            G = src.initial
            cert.update(method="unipotent-fixed")
        if G is None:
            res = gin_with_witness(I, RLEX, trials=2, seed=seed)
            G = res.ideal
            cert.update(method="random-coordinates", rounds=res.rounds,
                        matrices=[[list(r) for r in g] for g in res.matrices])
        cert["computed"] = _gens_json(G)
        ok = G == tgt.mono
    if not ok:
        cert["reason"] = "computed generic initial ideal differs from the target"
    return cert | {"pass": ok}


def _hlex_certificate(src: Node, tgt: Node) -> dict:
    if tgt.kind != "monomial":
        return {"method": "buchberger", "computed": None, "pass": False,
                "reason": "an initial ideal is monomial"}
    if src.kind == "monomial":
        J = src.mono
    else:
        J = initial_ideal(buchberger(src.ideal.basis, HLEX, n=src.n))
    ok = J == tgt.mono
    cert = {"method": "buchberger", "computed": _gens_json(J), "pass": ok}
    if not ok:
        cert["reason"] = "computed hlex initial ideal differs from the target"
    return cert


def verify_edge(c1: NodeLike, c2: NodeLike, label: str, seed: int = 0) -> dict:
    """Recompute the relation named by ``label`` between c1 and c2.

    gin_rlex_fwd means c2 = Gin_rlex c1, gin_rlex_bwd means c1 = Gin_rlex c2,
    and likewise for in_hlex.
    """
    if label not in LABELS:
        return {"label": label, "pass": False, "reason": "unknown label"}
    c1, c2 = as_node(c1), as_node(c2)
    if c1.n != c2.n:
        return {"label": label, "pass": False, "reason": "different rings"}
    src, tgt = (c1, c2) if label.endswith("fwd") else (c2, c1)
    try:
        if label.startswith("gin"):
            cert = _gin_certificate(src, tgt, seed)
        else:
            cert = _hlex_certificate(src, tgt)
    except ArithmeticError as exc:
        cert = {"pass": False, "reason": f"computation failed: {exc}"}
    return {"label": label, "seed": seed, **cert}


# -- per-node facts ---------------------------------------------------------

def _saturation(node: Node, seed: int) -> MonomialIdeal:
    """A monomial ideal with the Hilbert function of node^sat."""
    if node.is_borel_monomial():
        return node.mono.colon_var(node.n)
    if node.kind == "binomial":
        return initial_ideal(sat_gb(node.system, certify=False))
    # Gin and saturation commute, and Gin is Borel
    return gin_compute(node.ideal, RLEX, 2, seed).colon_var(node.n)


def _vals(f: NumFn, window) -> list:
    return [_num(f(j)) for j in range(window[0], window[1] + 1)]


def _num(v):
    return int(v) if v.denominator == 1 else str(v)


def node_facts(node: Node, window, seed: int = 0) -> dict:
    """Hilbert functions (plain and saturated) and the cohomology profile."""
    hf = hf_monomial_quotient(node.initial)
    sat = hf_monomial_quotient(_saturation(node, seed))
    src = node.cohom_source()
    prof = cohom_profile(src, node.kind == "binomial" and node.saturated, window) \
        if src is not None else None
    return {"hf": hf, "sat_hf": sat, "cohom": prof}


# -- verification -----------------------------------------------------------

def _window_for(nodes) -> tuple:
    n = nodes[0].n
    d = max(max(v.initial.max_degree() for v in nodes), 1)
    return default_window(n, d)


def verify_sequence(seq: ConnectingSequence, bounds: BoundSpec, seed: int = 1,
                    window=None) -> dict:
    """Re-verify every edge and every node of ``seq`` against ``bounds``.

    Failures are listed under "failures"; "pass" is true when there are none.
    """
    nodes = seq.nodes
    window = tuple(window or _window_for(nodes))
    failures = []
    edge_reports = []
    rng = random.Random(seed)
    if len(seq.edges) != len(nodes) - 1:
        failures.append("edge count does not match node count")
    for k, (lab, a, b) in enumerate(zip(seq.edges, nodes, nodes[1:])):
        cert = verify_edge(a, b, lab, seed=rng.randrange(2 ** 31))
        cert["index"] = k
        edge_reports.append(cert)
        if not cert["pass"]:
            failures.append(f"edge {k} ({lab}): {cert.get('reason', 'failed')}")

    facts = [node_facts(v, window, seed) for v in nodes]
    node_reports = []
    first_hf = facts[0]["hf"]
    for k, (v, f) in enumerate(zip(nodes, facts)):
        rep = {"index": k, "node": v.describe(),
               "hf": _vals(f["hf"], window), "sat_hf": _vals(f["sat_hf"], window)}
        checks = {}
        if bounds.mode == "equal":
            checks["same_hf"] = f["hf"].equals(first_hf)
            checks["f0"] = f["sat_hf"].equals(bounds.f0)
        else:
            checks["f0"] = f["sat_hf"].leq(bounds.f0, window) and f["sat_hf"].tail == bounds.f0.tail
        prof = f["cohom"]
        if prof is None:
            checks["fi"] = None
            rep["cohom"] = None
        else:
            rep["cohom"] = {str(i): _vals(prof[i], window) for i in range(prof.n + 1)}
            checks["fi"] = all(g.leq(prof[i], window) for i, g in bounds.fi if i <= prof.n)
        rep["checks"] = checks
        for name, ok in checks.items():
            if ok is False:
                failures.append(f"node {k}: {name} check failed")
        node_reports.append(rep)

    report = {"window": list(window), "mode": bounds.mode, "seed": seed,
              "edges": edge_reports, "nodes": node_reports}
    if bounds.mode == "leq":
        mono = _monotone_report([f["sat_hf"] for f in facts], seq.pivot, window)
        report["monotone"] = mono
        if not mono["pass"]:
            failures.append("saturated Hilbert functions are not monotone towards the pivot")
    report["failures"] = failures
    report["pass"] = not failures
    return report


def _monotone_report(sats: list, pivot: int | None, window) -> dict:
    """Non-increasing up to the pivot and non-decreasing after it."""
    if pivot is None:
        pivot = len(sats) - 1
    down = all(b.leq(a, window) for a, b in zip(sats[:pivot], sats[1:pivot + 1]))
    up = all(a.leq(b, window) for a, b in zip(sats[pivot:], sats[pivot + 1:]))
    return {"pivot": pivot, "non_increasing_to_pivot": down,
            "non_decreasing_from_pivot": up, "pass": down and up}


# -- construction -----------------------------------------------------------

def _to_borel(node: Node, seed: int) -> tuple:
    """(nodes, edges, J) reaching a Borel monomial ideal J from ``node``."""
    if node.is_borel_monomial():
        return [node], [], node.mono
    G = gin_compute(node.ideal, RLEX, 2, seed)
    return [node, Node.monomial(G)], ["gin_rlex_fwd"], G


def _mono_node(n: int, S, saturated: bool) -> Node:
    if saturated:
        return Node.monomial(MonomialIdeal.of(n, (star(a) for a in S)))
    return Node.monomial(MonomialIdeal.of(n, S))


def _system_walk(start: Node, systems: list, saturated: bool) -> tuple:
    nodes, edges = [start], []
    for sys in systems:
        nodes.append(Node.binomial(sys, saturated))
        nodes.append(_mono_node(sys.n, sys.target, saturated))
        edges += ["gin_rlex_bwd", "in_hlex_fwd"]
    return nodes, edges


def _half(J: MonomialIdeal, D: int, saturated: bool, lex: BorelSet | None = None) -> tuple:
    """From the Borel ideal J to its ghl form (then to ``lex`` if given).

    Returns (nodes, edges, systems, swaps).
    """
    B = borel_component(J, D)
    start = _mono_node(J.n, B.elems, saturated)
    if start.mono != J:
        raise ValueError(f"ideal is not determined by its degree {D} part")
    steps = mall_path_to_ghl(B)
    swaps = mall_swap_to_lex(ghl_normal_form(B), lex) if lex is not None else []
    nodes, edges = _system_walk(start, steps + swaps, saturated)
    return nodes, edges, steps, swaps


def _is_saturated(J: MonomialIdeal) -> bool:
    return J.colon_var(J.n) == J


def _sat_numfn(J: MonomialIdeal) -> NumFn:
    return hf_monomial_quotient(J.colon_var(J.n))


def _cohom(J: MonomialIdeal, window) -> CohomProfile:
    return cohom_profile(J, False, window)


def default_bounds(a: NodeLike, b: NodeLike, mode: str = "equal", seed: int = 0,
                   window=None) -> BoundSpec:
    """Bounds met by both endpoints.

    f0 is h_{S/a^sat} (equal mode) or the pointwise maximum of the two
    saturated Hilbert functions (leq mode); f_i, i >= 1, is the pointwise
    minimum of the endpoint profiles on the window.
    """
    ends = []
    for x in (a, b):
        node = as_node(x)
        src = node.cohom_source()
        J = node.mono if node.is_borel_monomial() else None
        if J is None:
            J = _to_borel(node, seed)[2]
        ends.append((node, src if src is not None else J, J))
    n = ends[0][0].n
    d = max(max(J.max_degree() for _, _, J in ends), 1)
    window = tuple(window or default_window(n, d))
    sats = [hf_monomial_quotient(_saturation(node, seed)) for node, _, _ in ends]
    if mode == "equal":
        f0 = sats[0]
    else:
        hi = max(window[1], max(s.tail_from for s in sats))
        f0 = NumFn(tuple((j, max(s(j) for s in sats)) for j in range(0, hi + 1)),
                   sats[0].tail, hi + 1)
    profs = []
    for node, src, _ in ends:
        sat = node.kind == "binomial" and node.saturated
        profs.append(cohom_profile(src, sat, window))
    fi = []
    for i in range(1, n + 1):
        tab = tuple((j, min(p[i](j) for p in profs)) for j in range(window[0], window[1] + 1))
        fi.append((i, NumFn(tab)))
    return BoundSpec(f0, mode, tuple(fi))


def _trivial(node: Node, bounds: BoundSpec | None, seed: int) -> ConnectingSequence:
    seq = ConnectingSequence([node], [], pivot=0)
    seq.report = verify_sequence(seq, bounds or default_bounds(node, node, "equal", seed), seed)
    return seq


def connect_equal_hf(a: NodeLike, b: NodeLike, bounds: BoundSpec | None = None,
                     seed: int = 0, saturated: bool | None = None,
                     verify: bool = True) -> ConnectingSequence:
    """Connecting sequence between two ideals with the same Hilbert function.

    Both sides go to a Borel ideal (through Gin when needed) and then by
    Mall steps to the common growth-height-lexicographic normal form; the
    b side is reversed and appended.  Saturated inputs give saturated
    nodes; otherwise both inputs must be truncations (a^sat)_{>=d} in the
    same degree d and all nodes are truncated.
    """
    na, nb = as_node(a), as_node(b)
    if na.n != nb.n:
        raise ValueError("ideals live in different rings")
    if bounds is not None and bounds.mode != "equal":
        raise ValueError("connect_equal_hf needs equal-mode bounds")
    if na.same_ideal(nb):
        return _trivial(na, bounds, seed) if verify else ConnectingSequence([na], [], pivot=0)
    la, ea, Ja = _to_borel(na, seed)
    lb, eb, Jb = _to_borel(nb, seed + 1)
    if saturated is None:
        saturated = _is_saturated(Ja) and _is_saturated(Jb)
    D = max(Ja.max_degree(), Jb.max_degree(), 1)
    for J in (Ja, Jb):
        if saturated and not _is_saturated(J):
            raise ValueError("saturated mode needs saturated inputs")
        if not saturated and J.colon_var(J.n).truncate(D) != J:
            raise ValueError(f"input is not the truncation of its saturation in degree {D}")
    if not hf_monomial_quotient(Ja).equals(hf_monomial_quotient(Jb)):
        raise ValueError("the two ideals have different Hilbert functions")
    Ba, Bb = borel_component(Ja, D), borel_component(Jb, D)
    if (growth_vector(Ba), height_vector(Ba)) != (growth_vector(Bb), height_vector(Bb)):
        raise ValueError("growth or height vectors differ; no common normal form")
    na_, ea_, _, _ = _half(Ja, D, saturated)
    nb_, eb_, _, _ = _half(Jb, D, saturated)
    left = ConnectingSequence(la[:-1] + na_, ea + ea_)
    right = ConnectingSequence(lb[:-1] + nb_, eb + eb_)
    seq = left.concat(right.reversed())
    seq.pivot = len(left.nodes) - 1
    if verify:
        bounds = bounds or default_bounds(na, nb, "equal", seed)
        seq.report = verify_sequence(seq, bounds, seed)
        seq.report["saturated"] = saturated
        seq.report["degree"] = D
    return seq


def ideal_hilbert_polynomial(J: MonomialIdeal) -> QPolynomial:
    """Hilbert polynomial of the ideal J itself (not of S/J)."""
    return hf_ring(J.n).tail - hf_monomial_quotient(J).tail


def _swap_windows_report(swaps: list) -> list:
    """Each swap lowers h_{S/.^sat} by one exactly on its swap window."""
    out = []
    for sys in swaps:
        before = _sat_numfn(MonomialIdeal.of(sys.n, sys.source))
        after = _sat_numfn(MonomialIdeal.of(sys.n, sys.target))
        lo, hi = swap_window(sys)
        top = max(before.hi, after.hi, hi) + 1
        drop = [j for j in range(0, top + 1) if after(j) != before(j)]
        ok = all(before(j) - after(j) == 1 for j in drop) and drop == list(range(lo, hi))
        out.append({"window": [lo, hi], "drop": drop, "pass": ok})
    return out


def connect_leq_hf(a: NodeLike, b: NodeLike, p: QPolynomial | None = None,
                   bounds: BoundSpec | None = None, seed: int = 0,
                   verify: bool = True) -> ConnectingSequence:
    """Connecting sequence through (l_p)_{>=d} for ideals with Hilbert polynomial p.

    ``p`` is the Hilbert polynomial of the ideals (not of the quotients).
    Both endpoints are truncated at d = max(Gotzmann bound of p, generator
    degrees); the pivot node is the truncated saturated lex ideal.
    """
    na, nb = as_node(a), as_node(b)
    n = na.n
    if nb.n != n:
        raise ValueError("ideals live in different rings")
    if bounds is not None and bounds.mode != "leq":
        raise ValueError("connect_leq_hf needs leq-mode bounds")
    _, _, Ja = _to_borel(na, seed)
    _, _, Jb = _to_borel(nb, seed + 1)
    pa, pb = ideal_hilbert_polynomial(Ja), ideal_hilbert_polynomial(Jb)
    if p is None:
        p = pa
    if pa != p or pb != p:
        raise ValueError("Hilbert polynomials of a, b and p do not all agree")
    l = saturated_lex_ideal(p, n)
    D = max(gotzmann_bound(p, n - 1), Ja.max_degree(), Jb.max_degree(), l.max_degree(), 1)
    L = borel_component(l, D)

    sides = []
    for node, J, s in ((na, Ja, seed), (nb, Jb, seed + 1)):
        entry = node
        if node.kind == "monomial":
            entry = Node.monomial(node.mono.truncate(D))
        elif node.kind != "binomial" or node.saturated or node.system.d != D:
            entry = Node.general(truncate_ideal(node.ideal, D))
        lead, e_lead, _ = _to_borel(entry, s)
        nodes, edges, steps, swaps = _half(J.truncate(D), D, False, L)
        sides.append((ConnectingSequence(lead[:-1] + nodes, e_lead + edges), steps, swaps))
    (left, _, sw_a), (right, _, sw_b) = sides
    seq = left.concat(right.reversed())
    seq.pivot = len(left.nodes) - 1
    if verify:
        bounds = bounds or default_bounds(na, nb, "leq", seed)
        seq.report = verify_sequence(seq, bounds, seed)
        seq.report["degree"] = D
        seq.report["lex_pivot"] = seq.nodes[seq.pivot].same_ideal(Node.monomial(l.truncate(D)))
        windows = _swap_windows_report(sw_a) + _swap_windows_report(sw_b)
        seq.report["swap_windows"] = windows
        if not seq.report["lex_pivot"]:
            seq.report["failures"].append("pivot is not the truncated lex ideal")
        if not all(w["pass"] for w in windows):
            seq.report["failures"].append("a swap changed h_{S/.^sat} off its window")
        seq.report["pass"] = not seq.report["failures"]
    return seq
