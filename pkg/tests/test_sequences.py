import json
import random
from dataclasses import replace

import pytest

import groebdeform.sequences as sequences
from groebdeform.binsys import SystemClass, classify, gb_rlex
from groebdeform.borel import borel_closure, ghl_normal_form, is_ghl, BorelSet
from groebdeform.hilbert import NumFn, QPolynomial
from groebdeform.polyalg import MonomialIdeal, Poly, buchberger
from groebdeform.orders import RLEX
from groebdeform.samples import random_good_system, random_mall_system
from groebdeform.sequences import (LABELS, BoundSpec, ConnectingSequence, Node, connect_equal_hf,
                                   connect_leq_hf, default_bounds, ideal_hilbert_polynomial,
                                   verify_edge, verify_sequence)

from pairs import equal_hf_pairs, equal_hp_pairs, saturated_borel_ideals

X = MonomialIdeal.of(2, [(1, 0)])
Yv = MonomialIdeal.of(2, [(0, 1)])


@pytest.fixture(scope="module")
def ideals():
    return saturated_borel_ideals(4, 3)


@pytest.fixture(scope="module")
def equal_pair(ideals):
    return equal_hf_pairs(ideals)[1]


@pytest.fixture(scope="module")
def equal_seq(equal_pair):
    return connect_equal_hf(*equal_pair, seed=2)


def check_labels(seq):
    assert len(seq.edges) == len(seq.nodes) - 1
    assert all(e in LABELS for e in seq.edges)


def test_edge_examples():
    rng = random.Random(41)
    sys = random_good_system(rng, 4, 3)
    F = Node.binomial(sys)
    assert verify_edge(F, MonomialIdeal.of(4, sys.source), "gin_rlex_fwd", 3)["pass"]
    assert verify_edge(MonomialIdeal.of(4, sys.source), F, "gin_rlex_bwd", 3)["pass"]
    mall = random_mall_system(rng, 4, 3)
    G = Node.binomial(mall)
    assert verify_edge(G, MonomialIdeal.of(4, mall.target), "in_hlex_fwd")["pass"]
    assert verify_edge(MonomialIdeal.of(4, mall.target), G, "in_hlex_bwd")["pass"]
    assert not verify_edge(G, MonomialIdeal.of(4, mall.source), "in_hlex_fwd")["pass"] \
        or mall.source == mall.target


def test_edges_between_coordinate_lines():
    for label in ("gin_rlex_fwd", "in_hlex_fwd", "in_hlex_bwd"):
        rep = verify_edge(X, Yv, label)
        assert rep["pass"] is False and rep["reason"]
    # Gin of <y> is <x>, so <x> = Gin <y> holds
    rep = verify_edge(X, Yv, "gin_rlex_bwd")
    assert rep["pass"] and rep["method"] == "random-coordinates"
    assert not verify_edge(X, Yv, "sideways")["pass"]
    assert not verify_edge(X, MonomialIdeal.of(3, [(1, 0, 0)]), "in_hlex_fwd")["pass"]


def test_edge_certificate_methods(monkeypatch):
    J = borel_closure({(0, 1, 1)}).saturated_ideal()
    assert verify_edge(J, J, "gin_rlex_fwd")["method"] == "borel-fixed"
    sys = random_mall_system(random.Random(42), 4, 3)
    F = Node.binomial(sys)
    assert verify_edge(F, MonomialIdeal.of(4, sys.source), "gin_rlex_fwd")["method"] == \
        "random-coordinates"
    monkeypatch.setattr(sequences, "DIRECT_GIN_TERMS", 0)
    rep = verify_edge(F, MonomialIdeal.of(4, sys.source), "gin_rlex_fwd")
    assert rep["method"] == "unipotent-fixed" and rep["pass"]
    # not unipotent fixed: falls back to random coordinates
    rep = verify_edge(Yv, X, "gin_rlex_fwd", 5)
    assert rep["method"] == "random-coordinates" and rep["pass"]
    # a binomial target can never be an initial ideal
    assert not verify_edge(J, F, "in_hlex_fwd")["pass"]


def test_trivial_sequence(ideals):
    J = ideals[5]
    seq = connect_equal_hf(J, J, seed=0)
    assert len(seq.nodes) == 1 and seq.edges == []
    assert seq.report["pass"]


def test_equal_sequence_structure(equal_pair, equal_seq):
    a, b = equal_pair
    check_labels(equal_seq)
    assert equal_seq.report["pass"]
    assert equal_seq.report["saturated"]
    assert equal_seq.nodes[0].same_ideal(Node.monomial(a))
    assert equal_seq.nodes[-1].same_ideal(Node.monomial(b))
    pivot = equal_seq.nodes[equal_seq.pivot]
    D = equal_seq.report["degree"]
    B = BorelSet(4, D, frozenset(pivot.mono.truncate(D).component(D)))
    assert is_ghl(B)
    for v in equal_seq.nodes:
        if v.kind == "binomial":
            assert classify(v.system) == SystemClass.MALL
            assert v.saturated


def test_equal_sequence_fresh_seed(equal_pair, equal_seq):
    bounds = default_bounds(*equal_pair, "equal", 0)
    report = verify_sequence(equal_seq, bounds, seed=12345)
    assert report["pass"], report["failures"]
    assert len(report["edges"]) == len(equal_seq.edges)


def test_all_small_equal_pairs(ideals):
    for a, b in equal_hf_pairs(ideals):
        seq = connect_equal_hf(a, b, seed=1)
        assert seq.report["pass"], seq.report["failures"]
        back = connect_equal_hf(b, a, seed=2)
        assert back.report["pass"]


def test_truncated_equal_sequence():
    a = borel_closure({(0, 2, 1, 0)})
    b = ghl_normal_form(a)
    assert a != b
    seq = connect_equal_hf(a.ideal(), b.ideal(), seed=4, saturated=False)
    assert seq.report["pass"], seq.report["failures"]
    assert seq.report["saturated"] is False
    assert all(not v.saturated for v in seq.nodes if v.kind == "binomial")


def test_binomial_endpoint():
    rng = random.Random(43)
    sys = random_mall_system(rng, 4, 3)
    while sys.rho[-1] != 0 or sys.source == sys.target:
        sys = random_mall_system(rng, 4, 3)
    # with rho_n = 0 the saturations of F and <X^target> share a Hilbert function
    target = MonomialIdeal.of(4, sys.target)
    seq = connect_equal_hf(Node.binomial(sys), target, seed=5)
    assert seq.report["pass"], seq.report["failures"]
    check_labels(seq)


def test_general_ideal_endpoint():
    # a non-Borel monomial ideal and a binomial ideal reach Borel ideals through Gin
    I = buchberger([Poly(3, {(0, 1, 0): 1, (0, 0, 1): -1})], RLEX)
    J = MonomialIdeal.of(3, [(0, 0, 1)])
    seq = connect_equal_hf(I, J, seed=6)
    assert seq.report["pass"], seq.report["failures"]
    assert seq.edges[0] == "gin_rlex_fwd"
    assert seq.edges[-1] == "gin_rlex_bwd"


def test_mismatched_inputs():
    a = MonomialIdeal.of(3, [(1, 0, 0)])
    b = MonomialIdeal.of(3, [(1, 0, 0), (0, 1, 0)])
    with pytest.raises(ValueError):
        connect_equal_hf(a, b)
    with pytest.raises(ValueError):
        connect_equal_hf(a, MonomialIdeal.of(2, [(1, 0)]))
    with pytest.raises(ValueError):
        connect_leq_hf(a, b)


def test_fault_injection(equal_pair, equal_seq):
    bounds = default_bounds(*equal_pair, "equal", 0)
    k = 1
    wrong = Node.monomial(MonomialIdeal.of(4, [(1, 0, 0, 0)]))
    nodes = list(equal_seq.nodes)
    nodes[k] = wrong
    bad = ConnectingSequence(nodes, list(equal_seq.edges), pivot=equal_seq.pivot)
    report = verify_sequence(bad, bounds, seed=9)
    assert not report["pass"]
    failed_edges = {e["index"] for e in report["edges"] if not e["pass"]}
    assert failed_edges == {k - 1, k}
    assert any(f.startswith(f"node {k}:") for f in report["failures"])
    assert not any(f.startswith("node 0:") for f in report["failures"])


def test_wrong_bounds_fail(equal_pair, equal_seq):
    bounds = default_bounds(*equal_pair, "equal", 0)
    shifted = replace(bounds, f0=bounds.f0 + NumFn(((0, 1),)))
    report = verify_sequence(equal_seq, shifted, seed=3)
    assert not report["pass"]
    assert all("f0" in f for f in report["failures"])
    high = replace(bounds, fi=((1, NumFn(tuple((j, 100) for j in range(-5, 5)))),))
    report = verify_sequence(equal_seq, high, seed=3)
    assert any("fi" in f for f in report["failures"])


def test_concatenation(ideals):
    groups = {}
    for a, b in equal_hf_pairs(ideals):
        groups.setdefault(a, []).append(b)
    a, bs = next((a, bs) for a, bs in groups.items() if bs)
    b = bs[0]
    first = connect_equal_hf(a, b, seed=1)
    second = connect_equal_hf(b, a, seed=2)
    joined = first.concat(second)
    assert len(joined.nodes) == len(first.nodes) + len(second.nodes) - 1
    report = verify_sequence(joined, default_bounds(a, b, "equal", 0), seed=8)
    assert report["pass"], report["failures"]
    with pytest.raises(ValueError):
        first.concat(first)


def test_reversal(equal_seq):
    back = equal_seq.reversed()
    assert back.nodes[0] is equal_seq.nodes[-1]
    assert back.pivot == len(equal_seq.nodes) - 1 - equal_seq.pivot
    for e, f in zip(back.edges, reversed(equal_seq.edges)):
        assert e != f and e[:-3] == f[:-3]
    assert back.reversed().edges == equal_seq.edges


def test_sequence_json_roundtrip(equal_pair, equal_seq):
    obj = json.loads(json.dumps(equal_seq.to_json()))
    again = ConnectingSequence.from_json(obj)
    assert again.edges == equal_seq.edges and again.pivot == equal_seq.pivot
    assert all(u.same_ideal(v) for u, v in zip(again.nodes, equal_seq.nodes))
    bounds = BoundSpec.from_json(json.loads(json.dumps(default_bounds(*equal_pair).to_json())))
    assert verify_sequence(again, bounds, seed=77)["pass"]


def test_sequence_validation():
    with pytest.raises(ValueError):
        ConnectingSequence([X, Yv], [])
    with pytest.raises(ValueError):
        ConnectingSequence([X, Yv], ["gin"])
    with pytest.raises(TypeError):
        ConnectingSequence([X, "ideal"], ["gin_rlex_fwd"])


def test_bound_validation():
    with pytest.raises(ValueError):
        BoundSpec(NumFn(((0, -1),)))
    with pytest.raises(ValueError):
        BoundSpec(NumFn(((0, 1),)), mode="approx")
    with pytest.raises(ValueError):
        BoundSpec(NumFn(()), fi=((1, NumFn((), QPolynomial((0, -1)), 0)),))
    b = BoundSpec(NumFn(((0, 1), (1, 2))), "leq", ((2, NumFn(((-1, 1),))),))
    assert b.lower(2)(-1) == 1 and b.lower(1) is None
    assert BoundSpec.from_json(b.to_json()) == b


def test_node_json_and_kinds():
    sys = random_mall_system(random.Random(44), 3, 3)
    for node in (Node.binomial(sys), Node.binomial(sys, saturated=True),
                 Node.monomial(MonomialIdeal.of(3, [(1, 0, 0)])),
                 Node.general(gb_rlex(sys))):
        again = Node.from_json(json.loads(json.dumps(node.to_json())))
        assert again.same_ideal(node)
        assert node.describe()
    assert Node.general(MonomialIdeal.of(2, [(1, 0)]).to_ideal()).kind == "monomial"
    with pytest.raises(ValueError):
        Node.from_json({"kind": "vertex"})


def test_leq_small_pairs(ideals):
    pairs = equal_hp_pairs(ideals)
    assert len(pairs) == 7
    for a, b in pairs[:5]:
        seq = connect_leq_hf(a, b, seed=3)
        rep = seq.report
        assert rep["pass"], rep["failures"]
        assert rep["lex_pivot"] and rep["monotone"]["pass"]
        assert all(w["pass"] for w in rep["swap_windows"])
        check_labels(seq)
        D = rep["degree"]
        assert seq.nodes[0].same_ideal(Node.monomial(a.truncate(D)))
        assert seq.nodes[-1].same_ideal(Node.monomial(b.truncate(D)))


def test_leq_pivot_is_lex(ideals):
    a, b = equal_hp_pairs(ideals)[3]
    p = ideal_hilbert_polynomial(a)
    seq = connect_leq_hf(a, b, p=p, seed=4)
    assert seq.report["pass"]
    from groebdeform.borel import saturated_lex_ideal

    l = saturated_lex_ideal(p, 4)
    D = seq.report["degree"]
    assert seq.nodes[seq.pivot].mono == l.truncate(D)
    bounds = default_bounds(a, b, "leq", 0)
    report = verify_sequence(seq, bounds, seed=31)
    assert report["pass"] and report["monotone"]["pass"]
    with pytest.raises(ValueError):
        connect_leq_hf(a, b, p=p + QPolynomial.constant(1))
