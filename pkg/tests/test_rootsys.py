import numpy as np
import pytest

from satcr import errors
from satcr.rootsys import (all_types, bad_primes, build_root_system, check_h_identity, invariants,
                           is_good, is_very_good, parse_type, parse_types)

# |Phi+| and det(Cartan) for each family, from the standard classification tables
POS_ROOTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
             "D": lambda n: n * (n - 1), "E": {6: 36, 7: 63, 8: 120}.get, "F": lambda n: 24,
             "G": lambda n: 6}
CARTAN_DET = {"A": lambda n: n + 1, "B": lambda n: 2, "C": lambda n: 2, "D": lambda n: 4,
              "E": {6: 3, 7: 2, 8: 1}.get, "F": lambda n: 1, "G": lambda n: 1}
BAD = {"A": set(), "B": {2}, "C": {2}, "D": {2}, "E": {2, 3, 5}, "F": {2, 3}, "G": {2, 3}}


@pytest.mark.parametrize("t,n", all_types(8))
def test_root_system_shape(t, n):
    rs = build_root_system(t, n)
    assert len(rs.positive_roots) == POS_ROOTS[t](n)
    assert rs.dim == n + 2 * POS_ROOTS[t](n)
    A = np.array(rs.cartan)
    assert (np.diag(A) == 2).all() and (A - 2 * np.eye(n) <= 0).all()
    assert round(np.linalg.det(A)) == CARTAN_DET[t](n)
    # highest root dominates every positive root coefficientwise
    assert all(all(h >= c for h, c in zip(rs.highest_root, b)) for b in rs.positive_roots)
    want_bad = BAD[t] if not (t == "E" and n < 8) else {2, 3}
    assert bad_primes(rs) == want_bad


def test_g2_convention_first_root_long():
    rs = build_root_system("G", 2)
    assert rs.norm2((1, 0)) == 3 * rs.norm2((0, 1))
    assert rs.highest_root == (2, 3)


def test_prime_classes():
    a2 = build_root_system("A", 2)
    assert is_good(a2, 3) and not is_very_good(a2, 3)
    assert is_very_good(a2, 2) is False or 3 % 2 != 0
    e8 = build_root_system("E", 8)
    assert not is_good(e8, 5) and is_very_good(e8, 7)


@pytest.mark.parametrize("t,n", all_types(8))
def test_invariant_inequalities(t, n):
    inv = invariants([(t, n)])
    assert inv.a <= inv.h <= inv.d
    assert check_h_identity(build_root_system(t, n))


def test_products_and_torus():
    inv = invariants(parse_types("A1xB3"))
    assert (inv.d, inv.a, inv.h, inv.e) == (7, 4, 6, None)
    assert invariants(parse_types("T1")).as_dict()["d"] == 1
    assert invariants([("A", 1)], simply_connected=False).h_tilde == 3


@pytest.mark.parametrize("label", ["A0", "B1", "D3", "E9", "F5", "G3", "H2", "Z", ""])
def test_invalid_labels(label):
    with pytest.raises(errors.InvalidTypeRank):
        parse_type(label)
