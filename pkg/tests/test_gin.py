import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from groebdeform.binsys import (counterexample_system, gb_rlex, generators, sat_gb)
from groebdeform.borel import borel_closure, borel_sets
from groebdeform.gin import (CoeffPoly, alpha, check_unipotent_fixed,
                             check_unipotent_fixed_ideal, elementary, gin_compute,
                             gin_sat_commute_check, gin_with_witness, is_borel_ideal, mu,
                             p_rho, p_rho_identities, phi_expansion, u_matrices,
                             unipotent_fixed_exact)
from groebdeform.orders import (HLEX, RLEX, borel_geq, monomials, negative_part,
                                positive_part, star, m_index)
from groebdeform.polyalg import (MonomialIdeal, Poly, apply_matrix, buchberger, initial_ideal,
                                 transform_ideal)
from groebdeform.samples import random_good_system, random_good_triple, random_mall_system


def Y(n, entries):
    """Monomial in the Y_ij from {(i, j): exponent} with 1-based indices."""
    M = [[0] * n for _ in range(n)]
    for (i, j), e in entries.items():
        M[i - 1][j - 1] = e
    return CoeffPoly(n, {tuple(map(tuple, M)): 1})


def with_diag(M, rho):
    return tuple(tuple(x + (rho[i] if i == j else 0) for j, x in enumerate(row))
                 for i, row in enumerate(M))


def test_mu_examples():
    assert mu(((2, 0), (0, 3))) == 1
    assert mu(((0, 1), (0, 1))) == 2
    assert mu(((0, 0), (0, 0))) == 1
    assert mu(((1, 2, 0), (0, 1, 0), (0, 0, 0))) == 3


def test_u_matrices_examples():
    assert u_matrices((2, 1), (2, 1)) == [((2, 0), (0, 1))]
    assert u_matrices((1, 0, 1), (0, 1, 1)) == [((0, 1, 0), (0, 0, 0), (0, 0, 1))]
    assert u_matrices((0, 1, 1), (1, 0, 1)) == []
    with pytest.raises(ValueError):
        u_matrices((1, 0), (0, 2))


def test_alpha_examples():
    b = (1, 2, 0)
    assert alpha(b, b) == CoeffPoly.diag(b)
    assert alpha((0, 1), (1, 0)) == Y(2, {(1, 2): 1})
    assert not alpha((2, 0), (0, 2))


def test_alpha_matches_expansion_small():
    for n in (1, 2, 3):
        for d in range(4):
            for b in monomials(n, d):
                expansion = phi_expansion(b)
                for a in monomials(n, d):
                    got = alpha(b, a)
                    assert got == expansion.get(a, CoeffPoly(n))
                    assert bool(got) == borel_geq(a, b)
                assert set(expansion) == {a for a in monomials(n, d) if borel_geq(a, b)}


def test_p_rho_diagonal_case():
    for b, rho in [((1, 1, 1), (1, 0, -1)), ((0, 2, 1), (0, 1, -1)), ((2, 1), (-1, 1))]:
        assert p_rho(b, b, rho) == CoeffPoly.diag(tuple(x - y for x, y in zip(b, negative_part(rho))))


def test_p_rho_identities_random():
    rng = random.Random(21)
    for _ in range(30):
        b, c, rho = random_good_triple(rng, 4, 3)
        assert p_rho_identities(b, c, rho) == (True, True)


def test_counterexample_factor_two():
    b, c = (0, 2, 0, 3, 0), (0, 2, 0, 2, 1)
    rho = (1, -2, 2, -2, 1)
    with pytest.raises(ValueError):
        p_rho(b, c, rho)
    p = p_rho(b, c, rho, strict=False)
    bp = tuple(x + r for x, r in zip(b, rho))
    cp = tuple(x + r for x, r in zip(c, rho))
    lhs = alpha(cp, bp)
    assert lhs == p * CoeffPoly.diag(positive_part(rho)) * 2
    assert lhs != p * CoeffPoly.diag(positive_part(rho))
    assert p_rho_identities(b, c, rho, strict=False)[1] is False


def test_borel_matrix_properties():
    rng = random.Random(22)
    for _ in range(40):
        b, c, rho = random_good_triple(rng, 4, 3)
        bp = tuple(x + r for x, r in zip(b, rho))
        cp = tuple(x + r for x, r in zip(c, rho))
        Ms = u_matrices(b, c)
        m = m_index(rho)
        for M in Ms:
            assert all(M[j][j] == c[j] for j in range(m))
            assert all(M[j][j] + rho[j] >= 0 for j in range(4))
        shifted = {with_diag(M, rho) for M in Ms}
        assert shifted == set(u_matrices(bp, cp))
        back = {with_diag(M, tuple(-r for r in rho)) for M in u_matrices(bp, cp)}
        assert back == set(Ms)


def test_coeffpoly_json():
    p = alpha((0, 1, 2), (1, 1, 1))
    assert CoeffPoly.from_json(p.to_json()) == p
    g = ((1, 2, 3), (0, 1, 4), (0, 0, 1))
    # evaluating alpha at g gives the coefficient of X^a in g(X^b)
    f = apply_matrix(g, Poly.monomial((0, 1, 2)))
    assert f.terms[(1, 1, 1)] == p.evaluate(g)


def test_gin_of_borel_ideal_is_itself():
    for B in borel_sets(3, 3)[:10]:
        J = B.ideal()
        if J.is_zero():
            continue
        for order in (RLEX, HLEX):
            assert gin_compute(J.to_ideal(order), order, 2, 0) == J
    assert is_borel_ideal(MonomialIdeal.of(3, [(1, 0, 0), (0, 2, 0)]))
    assert not is_borel_ideal(MonomialIdeal.of(2, [(0, 1)]))


def test_gin_of_good_system_is_initial():
    rng = random.Random(23)
    for _ in range(4):
        sys = random_good_system(rng, 4, 3)
        F = gb_rlex(sys)
        assert gin_compute(F, RLEX, 2, 5) == MonomialIdeal.of(4, sys.source)


def test_gin_genericity():
    rng = random.Random(24)
    I = buchberger([Poly(3, {(0, 1, 1): 1, (0, 0, 2): -2}), Poly(3, {(0, 2, 0): 1, (1, 0, 1): 3})],
                   RLEX)
    G = gin_compute(I, RLEX, 2, 1)
    assert is_borel_ideal(G)
    assert gin_compute(I, RLEX, 3, 99) == G
    g = ((2, 1, 0), (0, 1, 5), (0, 0, 3))
    assert gin_compute(transform_ideal(g, I), RLEX, 2, 7) == G
    res = gin_with_witness(I, RLEX, 2, 1)
    assert res.ideal == G and len(res.matrices) == 2
    with pytest.raises(ValueError):
        gin_compute(I, RLEX, 1, 0)


def test_unipotent_fixed():
    rng = random.Random(25)
    for _ in range(5):
        sys = random_good_system(rng, 4, 3)
        assert check_unipotent_fixed(sys, 3, rng.randrange(1000))
        assert unipotent_fixed_exact(gb_rlex(sys))
    ce = counterexample_system()
    assert not check_unipotent_fixed(ce, 2, 0)
    assert not unipotent_fixed_exact(gb_rlex(ce))
    J = borel_closure({(0, 1, 2)}).ideal().to_ideal(RLEX)
    assert check_unipotent_fixed_ideal(J, 3, 0)
    assert unipotent_fixed_exact(J)
    assert not unipotent_fixed_exact(MonomialIdeal.of(2, [(0, 1)]).to_ideal(RLEX))


def test_elementary():
    assert elementary(3, 0, 2) == ((1, 0, 1), (0, 1, 0), (0, 0, 1))
    assert apply_matrix(elementary(2, 0, 1), Poly.monomial((0, 1))) == \
        Poly(2, {(1, 0): 1, (0, 1): 1})


def test_gin_and_saturation_commute():
    J = borel_closure({(0, 1, 1)}).saturated_ideal().to_ideal(RLEX)
    assert gin_sat_commute_check(J, 2, 0)
    rng = random.Random(26)
    for _ in range(3):
        sys = random_good_system(rng, 4, 3)
        assert gin_sat_commute_check(gb_rlex(sys), 2, rng.randrange(1000))
        G = gin_compute(sat_gb(sys), RLEX, 2, 3)
        assert G == MonomialIdeal.of(4, (star(a) for a in sys.source))
    I = buchberger([Poly(3, {(1, 0, 1): 1, (0, 1, 1): -1}), Poly(3, {(0, 2, 0): 1, (0, 0, 2): 1})],
                   RLEX)
    assert gin_sat_commute_check(I, 2, 4)


@settings(max_examples=10)
@given(st.integers(0, 10 ** 6))
def test_gin_equals_initial_for_mall(seed):
    sys = random_mall_system(random.Random(seed), 4, 3)
    F = gb_rlex(sys)
    for order in (RLEX, HLEX):
        assert gin_compute(F.with_order(order), order, 2, seed) == \
            initial_ideal(F.with_order(order))
