from collections import Counter

import pytest
from hypothesis import given, strategies as hs

from satcr import errors
from satcr.rootsys import build_root_system
from satcr.weights import (EXCEPTIONS, adjoint_weight, decompose_by_subtraction, dominant_character,
                           fundamental_weight, lattice, min_fundamental_dim, tensor_square_weights,
                           weyl_dim, weyl_weights)

RANK2 = [("A", 2), ("B", 2), ("G", 2)]


@given(hs.sampled_from(RANK2), hs.integers(0, 3), hs.integers(0, 3))
def test_freudenthal_total_matches_weyl(tr, a, b):
    rs = build_root_system(*tr)
    lam = (a, b)
    L = lattice(rs)
    total = sum(m * len(L.orbit(mu)) for mu, m in dominant_character(rs, lam).items())
    assert total == weyl_dim(rs, lam)


@given(hs.sampled_from(RANK2 + [("A", 3), ("C", 3)]), hs.data())
def test_weights_are_weyl_invariant(tr, data):
    rs = build_root_system(*tr)
    lam = tuple(data.draw(hs.integers(0, 2)) for _ in range(rs.rank))
    ws = weyl_weights(rs, lam).entries
    L = lattice(rs)
    for w, m in ws.items():
        assert ws[L.dominant_conjugate(w)] == m


def test_a1_and_sl3_dims():
    a1 = build_root_system("A", 1)
    assert [weyl_dim(a1, (k,)) for k in range(5)] == [1, 2, 3, 4, 5]
    a2 = build_root_system("A", 2)
    assert weyl_dim(a2, (1, 1)) == 8 and weyl_dim(a2, (2, 0)) == 6
    # adjoint of sl3 has zero weight with multiplicity 2
    assert dominant_character(a2, (1, 1))[(0, 0)] == 2


@pytest.mark.parametrize("t,n", [("A", 2), ("B", 3), ("G", 2), ("F", 4), ("E", 6)])
def test_adjoint_weight_dim(t, n):
    rs = build_root_system(t, n)
    assert weyl_dim(rs, adjoint_weight(rs)) == rs.dim


def test_min_fundamental_dims():
    assert min_fundamental_dim(build_root_system("C", 3)) == 6
    assert min_fundamental_dim(build_root_system("B", 4)) == 9
    assert min_fundamental_dim(build_root_system("F", 4)) == 26
    assert fundamental_weight(build_root_system("G", 2), 1) == (0, 1)


@pytest.mark.parametrize("t,n,lam", [("A", 2, (1, 0)), ("B", 2, (0, 1)), ("G", 2, (0, 1)),
                                     ("C", 3, (1, 0, 0))])
def test_characteristic_zero_decomposition_accounts_for_all_weights(t, n, lam):
    rs = build_root_system(t, n)
    ws = tensor_square_weights(rs, lam)
    d = weyl_dim(rs, lam)
    assert ws.size == d * d
    res = decompose_by_subtraction(ws, 0)
    assert sum(weyl_dim(rs, f) for f in res.factors) == d * d
    assert Counter(res.factors)[(0,) * n] == 1


def test_g2_p7_uses_embedded_deficit_even_with_empty_overrides():
    rs = build_root_system("G", 2)
    res = decompose_by_subtraction(tensor_square_weights(rs, (0, 1)), 7, overrides={})
    assert Counter(res.factors)[(0, 0)] == 2
    assert res.deficits_used == [("G2", 7, (0, 2))]
    assert ("G", 2, 7, (0, 2)) in EXCEPTIONS


def test_tie_break_does_not_change_g2_answer():
    rs = build_root_system("G", 2)
    ws = tensor_square_weights(rs, (0, 1))
    assert decompose_by_subtraction(ws, 5).factors == decompose_by_subtraction(ws, 5, tie_break="colex").factors


def test_bad_override_raises_negative_multiplicity():
    rs = build_root_system("G", 2)
    bogus = {("G", 2, 5, (0, 1)): {(0, 0): -5}}  # adds weights instead
    with pytest.raises(errors.NegativeMultiplicity):
        decompose_by_subtraction(tensor_square_weights(rs, (0, 1)), 5, overrides=bogus)


def test_errors():
    g2 = build_root_system("G", 2)
    with pytest.raises(errors.NonDominant):
        weyl_dim(g2, (-1, 0))
    e8 = build_root_system("E", 8)
    with pytest.raises(errors.TooLarge):
        weyl_weights(e8, tuple(4 * x for x in adjoint_weight(e8)))
    with pytest.raises(errors.TooLarge):
        tensor_square_weights(build_root_system("A", 1), (400,))


def test_a1_natural_tensor_dual():
    rs = build_root_system("A", 1)
    ws = tensor_square_weights(rs, (1,))
    assert dict(ws.entries) == {(2,): 1, (0,): 2, (-2,): 1}
    assert decompose_by_subtraction(ws, 0).factors == [(0,), (2,)]
