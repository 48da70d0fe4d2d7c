import numpy as np
from hypothesis import given, strategies as hs

from satcr import poly
from satcr.gf import make_field
from satcr.linalg import det

field_st = hs.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1)]).map(lambda pk: make_field(*pk))


@given(field_st, hs.data())
def test_charpoly_cayley_hamilton_and_det(F, data):
    n = data.draw(hs.integers(1, 5))
    A = np.array(data.draw(hs.lists(hs.integers(0, F.q - 1), min_size=n * n, max_size=n * n)),
                 dtype=np.int64).reshape(n, n)
    c = poly.charpoly(F, A)
    assert poly.deg(c) == n and c[-1] == 1
    assert not poly.evaluate_matrix(F, c, A).any()
    # constant term is (-1)^n det A
    d = det(F, A)
    assert int(c[0]) == (d if n % 2 == 0 else int(F.neg(d)))


@given(field_st, hs.data())
def test_divmod(F, data):
    a = np.array(data.draw(hs.lists(hs.integers(0, F.q - 1), min_size=1, max_size=7)))
    b = np.array(data.draw(hs.lists(hs.integers(0, F.q - 1), min_size=1, max_size=4)))
    if poly.deg(b) < 0:
        return
    qt, r = poly.divmod_(F, a, b)
    assert poly.deg(r) < poly.deg(b)
    assert np.array_equal(poly.trim(poly.add(F, poly.mul(F, qt, b), r)), poly.trim(a))


def test_multiplicity_free_factors_divide():
    F = make_field(3)
    rng = np.random.default_rng(5)
    for _ in range(30):
        A = F.random((4, 4), rng)
        c = poly.charpoly(F, A)
        for f in poly.irreducible_factors_multiplicity_free(F, c):
            assert poly.deg(poly.mod(F, c, f)) < 0
            # irreducible: no roots when deg 2 or 3
            if poly.deg(f) in (2, 3):
                assert all(poly.evaluate(F, f, x) != 0 for x in range(F.q))
