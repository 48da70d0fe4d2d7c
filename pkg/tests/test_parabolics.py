import numpy as np
import pytest
from hypothesis import given, strategies as hs

from satcr import errors, parabolics as pb, satur as st
from satcr.checks import ad_group, random_parabolic_unipotent, random_small_group
from satcr.gf import make_field
from satcr.group import MatGroup
from satcr.linalg import det, rank
from satcr.oracles import socle_semisimple


def random_lambda(F, n, rng):
    C = F.random((n, n), rng)
    while not det(F, C):
        C = F.random((n, n), rng)
    return pb.cocharacter(rng.integers(0, 3, size=n), C)


def random_in_p(F, lam, rng):
    """Random invertible element of P_lambda, built in adapted coordinates."""
    from satcr.linalg import inverse
    n = lam.n
    while True:
        h = F.random((n, n), rng)
        h[lam.weight_matrix() < 0] = 0
        if det(F, h):
            C = lam.C(F)
            return F.matmul(F.matmul(C, h), inverse(F, C))


@given(hs.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1)]), hs.integers(0, 10**6))
def test_c_lambda_is_a_retraction_homomorphism(pk, seed):
    rng = np.random.default_rng(seed)
    F = make_field(*pk)
    n = int(rng.integers(1, 5))
    lam = random_lambda(F, n, rng)
    g, h = random_in_p(F, lam, rng), random_in_p(F, lam, rng)
    assert pb.in_p_lambda(F, g, lam)
    cg = pb.c_lambda(F, g, lam)
    assert np.array_equal(pb.c_lambda(F, F.matmul(g, h), lam), F.matmul(cg, pb.c_lambda(F, h, lam)))
    assert np.array_equal(pb.c_lambda(F, cg, lam), cg)


@given(hs.sampled_from([(3, 1), (5, 1), (3, 2)]), hs.integers(0, 10**6))
def test_c_lambda_commutes_with_t_powers(pk, seed):
    rng = np.random.default_rng(seed)
    F = make_field(*pk)
    n = int(rng.integers(1, F.p + 1))
    lam = random_lambda(F, n, rng)
    u = random_parabolic_unipotent(F, lam, rng)
    t = int(F.random((), rng))
    assert np.array_equal(pb.c_lambda(F, st.t_power(F, u, t), lam),
                          st.t_power(F, pb.c_lambda(F, u, lam), t))


def test_flag_cocharacter_stabilises_the_flag():
    F = make_field(3)
    chain = [np.array([[1, 1, 0]]), np.array([[1, 1, 0], [0, 1, 2]])]
    lam = pb.flag_to_cocharacter(F, chain)
    assert lam.exponents == (2, 1, 0)
    # upper-triangular in the adapted basis means every subspace is preserved
    g = np.array([[1, 2, 0], [0, 2, 1], [0, 0, 1]])
    C = lam.C(F)
    from satcr.linalg import inverse
    x = F.matmul(F.matmul(C, g), inverse(F, C))
    assert pb.in_p_lambda(F, x, lam)
    for V in chain:
        assert rank(F, np.vstack([V, F.matmul(V, x.T)])) == len(V)


@given(hs.integers(0, 10**6))
def test_semisimplification_output(seed):
    rng = np.random.default_rng(seed)
    F = make_field(2)
    G = random_small_group(F, int(rng.integers(1, 5)), rng)
    res = pb.semisimplify(G, rng)
    assert res.semisimple and socle_semisimple(res.group)
    assert all(pb.in_p_lambda(F, g, res.cocharacter) for g in G.gens)


def test_semisimple_input_is_unchanged():
    F = make_field(2, 2)
    from satcr.group import sl_group
    G = sl_group(F, 2)
    res = pb.semisimplify(G)
    assert res.cocharacter.is_trivial() and res.group is G


def test_ex5_4_commutation():
    F = make_field(2, 2)
    lam = pb.cocharacter([0, 0, 1])
    out = pb.check_semisat_commutation(ad_group(), lam, F.elements())
    assert out["equal"] and out["lhs_order"] == out["rhs_order"]


def test_errors():
    F = make_field(2)
    lam = pb.cocharacter([1, 0])
    with pytest.raises(errors.NotInParabolic):
        pb.c_lambda(F, np.array([[1, 0], [1, 1]]), lam)
    with pytest.raises(errors.NotAChain):
        pb.flag_to_cocharacter(F, [np.array([[1, 0]]), np.array([[0, 1]])])
    with pytest.raises(errors.NotAChain):
        pb.flag_to_cocharacter(F, [])
    with pytest.raises(errors.DimensionMismatch):
        pb.in_p_lambda(F, F.eye(3), lam)
    with pytest.raises(errors.NotInParabolic):
        pb.check_semisat_commutation(MatGroup(F, [np.array([[1, 0], [1, 1]])]), lam, F.elements())
