import numpy as np
import pytest
from hypothesis import given, strategies as hs

from satcr import errors, satur as st
from satcr.gf import make_field
from satcr.group import MatGroup, sl_generators, sl_group

FIELDS = [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (7, 1)]


@given(hs.sampled_from(FIELDS), hs.integers(0, 10**6))
def test_group_laws(pk, seed):
    rng = np.random.default_rng(seed)
    F = make_field(*pk)
    n = int(rng.integers(1, F.p + 1))
    u = st.random_unipotent(F, n, rng)
    s, t = (int(x) for x in F.random(2, rng))
    us = st.t_power(F, u, s)
    assert np.array_equal(st.t_power(F, u, int(F.add(s, t))), F.matmul(us, st.t_power(F, u, t)))
    assert np.array_equal(st.t_power(F, us, t), st.t_power(F, u, int(F.mul(s, t))))
    assert np.array_equal(st.t_power(F, u, 1), u)
    assert np.array_equal(st.t_power(F, u, 0), F.eye(n))
    assert np.array_equal(st.u_exp(F, st.u_log(F, u)), u)


@given(hs.sampled_from(FIELDS), hs.integers(0, 10**6))
def test_integer_t_power_is_ordinary_power(pk, seed):
    rng = np.random.default_rng(seed)
    F = make_field(*pk)
    n = int(rng.integers(1, F.p + 1))
    u = st.random_unipotent(F, n, rng)
    P = F.eye(n)
    for m in range(F.p + 1):
        assert np.array_equal(st.t_power(F, u, int(F.from_int(m))), P)
        P = F.matmul(P, u)


@given(hs.sampled_from([(3, 1), (5, 1), (5, 2), (7, 1)]), hs.integers(0, 10**6))
def test_bch_matches_product(pk, seed):
    rng = np.random.default_rng(seed)
    F = make_field(*pk)
    n = int(rng.integers(1, F.p + 1))
    X, Y = st.strictly_upper_random(F, n, rng), st.strictly_upper_random(F, n, rng)
    Z = st.bch(F, X, Y, check=False)
    assert np.array_equal(st.u_exp(F, Z), F.matmul(st.u_exp(F, X), st.u_exp(F, Y)))


def test_bch_series_low_degree():
    s = st.bch_series(3)
    from fractions import Fraction
    assert s[(0,)] == s[(1,)] == 1
    assert s[(0, 1)] == Fraction(1, 2) and s[(1, 0)] == Fraction(-1, 2)


def test_errors():
    F = make_field(2)
    u = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]])  # (u-1)^2 != 0
    with pytest.raises(errors.OrderTooLarge):
        st.u_log(F, u)
    F3 = make_field(3)
    X = np.triu(np.ones((4, 4), dtype=np.int64), 1)
    with pytest.raises(errors.CharTooSmall):
        st.bch(F3, X, X)


def test_closure_of_prime_field_group_over_extension():
    F = make_field(3, 2)
    small = MatGroup(F, sl_generators(make_field(3), 2))
    assert small.order() == 24
    C = st.f_saturated_closure(small, F.elements())
    assert C.order() == 720
    assert st.is_f_saturated(C, F.elements())


def test_sl2_is_saturated_and_closure_is_idempotent():
    F = make_field(2, 2)
    assert st.is_f_saturated(sl_group(F, 2), F.elements())
    G = MatGroup(F, [np.array([[1, 1], [0, 1]])])
    C = st.f_saturated_closure(G, F.elements())
    assert C.order() == 4
    assert st.f_saturated_closure(C, F.elements()).order() == 4
