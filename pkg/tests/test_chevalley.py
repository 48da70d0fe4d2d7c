import numpy as np
import pytest

from satcr.chevalley import build_chevalley, check_vi_equivalence, killing_gram, killing_nondegenerate_mod
from satcr.rootsys import build_root_system

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]


@pytest.mark.parametrize("t,n", SMALL)
def test_jacobi_identity(t, n):
    assert build_chevalley(build_root_system(t, n)).jacobi_full()


@pytest.mark.parametrize("t,n", [("F", 4), ("E", 6)])
def test_jacobi_sampled(t, n):
    cb = build_chevalley(build_root_system(t, n))
    assert cb.jacobi_random(300, np.random.default_rng(0))


@pytest.mark.parametrize("t,n", SMALL)
def test_antisymmetry_and_integrality(t, n):
    cb = build_chevalley(build_root_system(t, n))
    T = cb.structure_tensor
    assert (T == -np.swapaxes(T, 0, 1)).all()
    assert T.dtype.kind == "i"


def test_sl2_killing_form():
    # basis e, f, h of sl2: kappa(e,f) = 4, kappa(h,h) = 8
    G = np.abs(np.array(killing_gram(build_chevalley(build_root_system("A", 1))).gram))
    assert sorted(G[G != 0].tolist()) == [4, 4, 8]


@pytest.mark.parametrize("t,n,p,want", [("B", 3, 5, False), ("G", 2, 7, True), ("A", 2, 3, False),
                                        ("A", 2, 5, True), ("D", 5, 2, False), ("C", 3, 3, True)])
def test_killing_examples(t, n, p, want):
    assert killing_nondegenerate_mod(build_chevalley(build_root_system(t, n)), p) is want


@pytest.mark.parametrize("t,n", SMALL + [("F", 4), ("E", 6)])
def test_equivalence_holds(t, n):
    assert all(lhs == rhs for _, lhs, rhs in check_vi_equivalence(t, n, 50))


def test_pmax_limit():
    with pytest.raises(ValueError):
        check_vi_equivalence("A", 1, 101)
