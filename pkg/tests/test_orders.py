import itertools

import pytest
from hypothesis import given, strategies as st

from groebdeform.orders import (HLEX, RLEX, Ordering, TermOrder, add, as_order, borel_geq,
                                borel_moves_up, borel_witness, cmp_hlex, cmp_rlex, col_sums,
                                is_upper_tri, m_index, monomials, mu_index, row_sums, star)

from helpers import same_degree_pair


def reachable_up(a):
    """All vectors reachable from a by single Borel moves, a included."""
    seen = {tuple(a)}
    todo = [tuple(a)]
    while todo:
        for b in borel_moves_up(todo.pop()):
            if b not in seen:
                seen.add(b)
                todo.append(b)
    return seen


def test_cmp_hlex_examples():
    assert cmp_hlex((2, 0, 0), (1, 1, 0)) == Ordering.GT
    # first difference at position 4, 3 > 2
    assert cmp_hlex((0, 2, 0, 3, 0), (0, 2, 0, 2, 1)) == Ordering.GT
    assert cmp_hlex((1, 2, 3), (1, 2, 3)) == Ordering.EQ
    # the binomial pair of the counterexample: c < c + rho
    assert cmp_hlex((0, 2, 0, 2, 1), (1, 0, 2, 0, 2)) == Ordering.LT


def test_cmp_rlex_examples():
    assert cmp_rlex((0, 2, 0, 3, 0), (0, 2, 0, 2, 1)) == Ordering.GT
    assert cmp_rlex((1, 0), (0, 1)) == Ordering.GT
    assert cmp_rlex((0, 0, 2), (1, 0, 1)) == Ordering.LT


def test_rlex_chain_in_three_variables():
    # x^2 > xy > y^2 > xz > yz > z^2
    chain = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    assert sorted(monomials(3, 2), key=RLEX.key, reverse=True) == chain


def test_hlex_chain_in_three_variables():
    chain = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert sorted(monomials(3, 2), key=HLEX.key, reverse=True) == chain


def test_degree_dominates():
    assert cmp_hlex((0, 0, 3), (2, 0, 0)) == Ordering.GT
    assert cmp_rlex((0, 0, 3), (2, 0, 0)) == Ordering.GT


def test_length_mismatch():
    with pytest.raises(ValueError):
        cmp_hlex((1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        cmp_rlex((1,), (0, 1))
    with pytest.raises(ValueError):
        borel_geq((1, 0), (0, 2))


def test_borel_geq_examples():
    assert borel_geq((1, 0, 1), (0, 1, 1))
    assert not borel_geq((0, 1, 1), (1, 0, 1))
    assert borel_geq((0, 3, 1), (0, 3, 1))


def test_borel_witness_examples():
    assert borel_witness((2, 1), (2, 1)) == ((2, 0), (0, 1))
    assert borel_witness((1, 0, 1), (0, 1, 1)) == ((0, 1, 0), (0, 0, 0), (0, 0, 1))
    assert borel_witness((2, 0), (0, 2)) == ((0, 2), (0, 0))
    with pytest.raises(ValueError):
        borel_witness((0, 1, 1), (1, 0, 1))


def test_indices():
    assert m_index((0, 0, 0)) == 1
    assert mu_index((0, 0, 0)) == 3
    assert m_index((1, -2, 0)) == 2
    assert mu_index((0, 0, -1)) == 3
    assert star((1, 2, 3)) == (1, 2, 0)


def test_weight_order_and_json():
    w = TermOrder("weight", (1, 0), "hlex")
    assert w.cmp((1, 0), (0, 1)) == Ordering.GT
    assert w.cmp((0, 2), (0, 2)) == Ordering.EQ
    # equal weight falls back to the tiebreak
    w2 = TermOrder("weight", (0, 0, 0), "rlex")
    assert w2.cmp((0, 0, 2), (1, 0, 1)) == Ordering.LT
    for order in (HLEX, RLEX, w, w2):
        assert as_order(order.to_json()) == order
    assert not w.admissible and HLEX.admissible
    with pytest.raises(ValueError):
        TermOrder("lex")
    with pytest.raises(ValueError):
        TermOrder("weight")


def test_characterisations_agree_small():
    for n, d in [(2, 3), (3, 3), (4, 2)]:
        allm = list(monomials(n, d))
        for a in allm:
            up = reachable_up(a)
            for b in allm:
                # a >= b iff a is reachable from b by moves
                assert borel_geq(a, b) == (a in reachable_up(b))
                assert borel_geq(b, a) == (b in up)


@given(same_degree_pair())
def test_borel_implies_both_orders(pair):
    a, b = pair
    if borel_geq(a, b):
        assert cmp_hlex(a, b) >= Ordering.EQ
        assert cmp_rlex(a, b) >= Ordering.EQ


@given(same_degree_pair())
def test_witness_sums(pair):
    a, b = pair
    if borel_geq(a, b):
        M = borel_witness(a, b)
        assert is_upper_tri(M)
        assert row_sums(M) == a
        assert col_sums(M) == b


@given(st.data())
def test_total_orders(data):
    n = data.draw(st.integers(1, 4))
    vec = st.lists(st.integers(0, 3), min_size=n, max_size=n).map(tuple)
    a, b, c = data.draw(vec), data.draw(vec), data.draw(vec)
    for cmp in (cmp_hlex, cmp_rlex):
        assert cmp(a, b) == -cmp(b, a)
        assert (cmp(a, b) == Ordering.EQ) == (a == b)
        if cmp(a, b) >= 0 and cmp(b, c) >= 0:
            assert cmp(a, c) >= 0
        # multiplicativity
        assert cmp(add(a, c), add(b, c)) == cmp(a, b)


def test_unit_vectors_decrease():
    for n in range(1, 6):
        units = [tuple(1 if i == k else 0 for i in range(n)) for k in range(n)]
        for u, v in itertools.pairwise(units):
            assert cmp_hlex(u, v) == Ordering.GT
            assert cmp_rlex(u, v) == Ordering.GT
