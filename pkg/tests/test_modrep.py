import numpy as np
import pytest
from hypothesis import given, strategies as hs

from satcr import errors
from satcr.checks import ex44_module_gf9, ex44_module_twisted, random_small_group
from satcr.gf import make_field
from satcr.group import MatGroup, block_diag, sl_generators, sl_group
from satcr.linalg import rank
from satcr.modrep import (composition_series, conjugation_module, find_proper_submodule,
                          invariant_complement, is_irreducible, is_semisimple, spin, splits,
                          traceless_subspace)
from satcr.oracles import lattice_irreducible, lattice_semisimple, socle_semisimple


@given(hs.integers(0, 10**6), hs.sampled_from([(2, 1), (3, 1), (2, 2)]))
def test_meataxe_agrees_with_oracles(seed, pk):
    rng = np.random.default_rng(seed)
    F = make_field(*pk)
    n = int(rng.integers(1, 5 if F.q == 2 else 4))
    G = random_small_group(F, n, rng)
    verdict = is_semisimple(G, rng).semisimple
    assert verdict == lattice_semisimple(G) == socle_semisimple(G)
    assert is_irreducible(G, rng) == lattice_irreducible(G)


@given(hs.integers(0, 10**6))
def test_composition_series_is_invariant_chain_with_irreducible_quotients(seed):
    rng = np.random.default_rng(seed)
    F = make_field(2)
    G = random_small_group(F, int(rng.integers(1, 6)), rng)
    chain = composition_series(G, rng)
    dims = [len(c) for c in chain]
    assert dims == sorted(set(dims)) and dims[-1] == G.dim
    for V in chain:
        for g in G.gens:
            assert rank(F, np.vstack([V, F.matmul(V, g.T)])) == len(V)


def test_natural_modules():
    F = make_field(2, 2)
    nat = sl_group(F, 2)
    assert is_irreducible(nat)
    gens = [block_diag(F, g, g) for g in sl_generators(F, 2)]
    res = is_semisimple(MatGroup(F, gens))
    assert res.semisimple and len(res.summands) == 2


def test_unipotent_is_not_semisimple():
    F = make_field(2)
    G = MatGroup(F, [np.array([[1, 1], [0, 1]])])
    W, _ = find_proper_submodule(G)
    assert W is not None and W.dim == 1 and splits(W) is None
    res = is_semisimple(G)
    assert not res.semisimple and "nonsplit_submodule" in res.certificate(F)


def test_splitting_returns_invariant_complement():
    F = make_field(3)
    g = np.array([[2, 0], [0, 1]])  # diag(-1, 1) is semisimple in char 3
    G = MatGroup(F, [g])
    W = spin(G, np.array([[1, 0]]))
    comp = splits(W)
    assert comp is not None and comp.is_invariant() and comp.dim == 1


def test_ex4_4_modules():
    assert not is_semisimple(ex44_module_gf9()).semisimple
    assert is_irreducible(ex44_module_twisted())


@pytest.mark.parametrize("n,p,k", [(2, 2, 2), (3, 2, 2), (2, 3, 2), (3, 3, 2), (2, 5, 1), (3, 5, 1)])
def test_sl_complement_in_gl(n, p, k):
    F = make_field(p, k)
    comp = invariant_complement(sl_group(F, n), traceless_subspace(F, n))
    if n % p == 0:
        assert comp is None
    else:
        assert rank(F, np.vstack([comp.basis, F.eye(n).reshape(1, -1)])) == 1


def test_conjugation_module_is_a_representation(rng):
    F = make_field(3)
    G = sl_group(F, 2)
    M = conjugation_module(G)
    X = F.random((2, 2), rng)
    g = G.gens[0]
    from satcr.linalg import inverse
    direct = F.matmul(F.matmul(g, X), inverse(F, g)).reshape(-1)
    assert np.array_equal(F.matmul(M.gens[0], X.reshape(-1)), direct)


def test_inconclusive_is_possible_only_beyond_exhaustive_bound():
    F = make_field(2)
    G = MatGroup(F, [F.eye(1)])
    W, cert = find_proper_submodule(G)
    assert W is None and cert.kind == "dimension"
    assert issubclass(errors.Inconclusive, errors.SatcrError)
