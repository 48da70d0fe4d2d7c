import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as hs

from satcr import errors
from satcr.gf import make_field
from satcr.linalg import (complete_basis, det, in_span, inverse, kron, mat_power, nullspace, rank,
                          row_space, rref, solve)

field_st = hs.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]).map(lambda pk: make_field(*pk))


def matrices(F, rows, cols):
    return hs.lists(hs.integers(0, F.q - 1), min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: np.array(xs, dtype=np.int64).reshape(rows, cols))


def leibniz_det(F, A):
    n = len(A)
    out = 0
    for perm in itertools.permutations(range(n)):
        sign = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n)) % 2
        term = 1
        for i in range(n):
            term = int(F.mul(term, A[i, perm[i]]))
        out = int(F.sub(out, term) if sign else F.add(out, term))
    return out


@given(field_st, hs.data())
def test_det_matches_leibniz(F, data):
    n = data.draw(hs.integers(1, 4))
    A = data.draw(matrices(F, n, n))
    assert det(F, A) == leibniz_det(F, A)


@given(field_st, hs.data())
def test_rank_nullity_and_nullspace(F, data):
    r, c = data.draw(hs.integers(1, 5)), data.draw(hs.integers(1, 5))
    A = data.draw(matrices(F, r, c))
    N = nullspace(F, A)
    assert rank(F, A) + len(N) == c
    if len(N):
        assert not F.matmul(A, N.T).any()
    R, piv = rref(F, A)
    assert len(piv) == rank(F, A)
    assert rank(F, np.vstack([R, A])) == len(piv)


@given(field_st, hs.data())
def test_inverse_and_solve(F, data):
    n = data.draw(hs.integers(1, 4))
    A = data.draw(matrices(F, n, n))
    b = data.draw(matrices(F, n, 1))[:, 0]
    if det(F, A) == 0:
        with pytest.raises(errors.Singular):
            inverse(F, A)
        return
    Ai = inverse(F, A)
    assert np.array_equal(F.matmul(A, Ai), F.eye(n))
    x, N = solve(F, A, b)
    assert np.array_equal(F.matmul(A, x), b) and len(N) == 0


def test_solve_inconsistent_returns_none():
    F = make_field(3)
    A = np.array([[1, 1], [1, 1]])
    assert solve(F, A, np.array([0, 1])) is None


@given(field_st, hs.data())
def test_complete_basis_keeps_prefix(F, data):
    n = data.draw(hs.integers(1, 5))
    W = row_space(F, data.draw(matrices(F, data.draw(hs.integers(1, n)), n)))
    if len(W) == 0:
        return
    B = complete_basis(F, W)
    assert B.shape == (n, n) and det(F, B) != 0
    assert np.array_equal(B[:len(W)], W)
    assert all(in_span(F, B, v) for v in F.eye(n))


def test_kron_mixed_product(rng):
    F = make_field(2, 2)
    A, B, C, D = (F.random((2, 2), rng) for _ in range(4))
    lhs = F.matmul(kron(F, A, B), kron(F, C, D))
    assert np.array_equal(lhs, kron(F, F.matmul(A, C), F.matmul(B, D)))


def test_mat_power(rng):
    F = make_field(5)
    A = F.random((3, 3), rng)
    P = F.eye(3)
    for e in range(7):
        assert np.array_equal(mat_power(F, A, e), P)
        P = F.matmul(P, A)
