import numpy as np
import pytest
from hypothesis import given, strategies as hs

from satcr import errors, frobenius as fb
from satcr.gf import make_field
from satcr.group import MatGroup, sl_generators, sl_group, sl_order, su3_order
from satcr.linalg import det
from satcr.satur import is_f_saturated


def invertible(F, n, rng):
    while True:
        g = F.random((n, n), rng)
        if det(F, g):
            return g


ENDOS = ["standard", "twist", "conj", "perm"]


@given(hs.sampled_from(ENDOS), hs.integers(0, 10**6))
def test_endomorphisms_are_multiplicative(kind, seed):
    rng = np.random.default_rng(seed)
    F = make_field(2, 2)
    n = 4
    e = {"standard": fb.standard(2), "twist": fb.unitary_twist(F, n, 2),
         "conj": fb.conj(invertible(F, n, rng)),
         "perm": fb.block_permutation([1, 0], 2)}[kind]
    g, h = invertible(F, n, rng), invertible(F, n, rng)
    assert np.array_equal(fb.apply(F, e, F.matmul(g, h)),
                          F.matmul(fb.apply(F, e, g), fb.apply(F, e, h)))


def test_unitary_twist_squares_to_standard(rng):
    F = make_field(2, 4)
    e = fb.unitary_twist(F, 3, 2)
    g = invertible(F, 3, rng)
    assert np.array_equal(fb.apply(F, fb.composite([e, e]), g), fb.apply(F, fb.standard(4), g))


@pytest.mark.parametrize("p,k,d,n", [(3, 2, 1, 2), (2, 2, 1, 2), (2, 2, 1, 3), (5, 2, 1, 2)])
def test_standard_fixed_points_are_sl_of_subfield(p, k, d, n):
    F = make_field(p, k)
    fp = fb.fixed_points(sl_group(F, n), fb.standard(p**d))
    assert fp.order == sl_order(p**d, n)
    assert is_f_saturated(fp.group, F.subfield(d))


def test_su3():
    F = make_field(2, 2)
    fp = fb.fixed_points(sl_group(F, 3), fb.unitary_twist(F, 3, 2))
    assert fp.order == su3_order(2)


def test_blockwise_and_permutation_fixed_points():
    F = make_field(2, 2)
    G = fb.pair_group(F, sl_generators(F, 2))
    assert G.order() == 60 * 60
    swap = fb.fixed_points(G, fb.block_permutation([1, 0], 2))
    assert swap.order == 60  # the diagonal copy
    prod = fb.fixed_points(G, fb.blockwise([fb.standard(2), fb.standard(4)], 2))
    assert prod.order == 6 * 60


def test_frobsat_reports(rng):
    for p, k, q in [(3, 2, 3), (5, 2, 5), (3, 4, 9)]:
        F = make_field(p, k)
        assert fb.check_frobsat(F, q, min(p, 3), 50, rng).passed
        assert fb.check_frobsat(F, q, min(p, 3), 30, rng, twisted=True).passed


def test_closure_is_sigma_stable():
    F = make_field(2, 2)
    G = MatGroup(F, sl_generators(make_field(2), 2))
    assert fb.sigma_stability_of_closure(G, fb.standard(2), F.elements()).passed
    assert fb.nori_closure_check(make_field(3, 2), 3).passed


def test_errors():
    F = make_field(2, 2)
    with pytest.raises(ValueError):
        fb.Endo("nonsense")
    with pytest.raises(errors.DimensionMismatch):
        fb.apply(F, fb.block_permutation([1, 0], 2), F.eye(3))
    with pytest.raises(errors.DimensionMismatch):
        fb.apply(F, fb.blockwise([fb.identity(), fb.identity()], 1), np.ones((2, 2), dtype=np.int64))
    with pytest.raises(errors.DimensionMismatch):
        fb.check_frobsat(make_field(2, 2), 2, 3, 1, np.random.default_rng(0))


def test_fixed_points_of_closure_recover_h_sigma():
    F = make_field(2, 2)
    H_sigma = fb.fixed_points(sl_group(F, 2), fb.standard(2)).group
    from satcr.satur import f_saturated_closure
    closure = f_saturated_closure(H_sigma, F.elements())
    again = fb.fixed_points(closure, fb.standard(2))
    assert again.group.elements().same_as(H_sigma.elements())


def test_centraliser_of_unipotent_is_saturated():
    F = make_field(2, 2)
    A = np.array([[1, 1], [0, 1]])
    cent = fb.fixed_points(sl_group(F, 2), fb.conj(A))
    assert cent.order == 4
    assert is_f_saturated(cent.group, F.elements())
