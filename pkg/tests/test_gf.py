import numpy as np
import pytest
from hypothesis import given, strategies as hs

from satcr import errors
from satcr._conway import CONWAY
from satcr.gf import frobenius_power, is_irreducible, make_field
from satcr.matio import format_matrices, parse_matrices

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (2, 4), (3, 4)]
field_st = hs.sampled_from(FIELDS).map(lambda pk: make_field(*pk))


def naive_mul(F, a, b):
    """Schoolbook product of coefficient vectors, reduced by the field polynomial."""
    ca, cb = F.coeffs(a), F.coeffs(b)
    prod = [0] * (2 * F.k - 1)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            prod[i + j] = (prod[i + j] + x * y) % F.p
    f = list(F.spec.poly)  # monic, lowest degree first
    for d in range(len(prod) - 1, F.k - 1, -1):
        c = prod[d]
        if c:
            for i in range(F.k + 1):
                prod[d - F.k + i] = (prod[d - F.k + i] - c * f[i]) % F.p
    return F.element(prod[:F.k])


@given(field_st, hs.data())
def test_mul_matches_schoolbook(F, data):
    a = data.draw(hs.integers(0, F.q - 1))
    b = data.draw(hs.integers(0, F.q - 1))
    assert int(F.mul(a, b)) == naive_mul(F, a, b)


@given(field_st, hs.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(hs.integers(0, F.q - 1)) for _ in range(3))
    assert F.add(a, F.neg(a)) == 0
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.power(a, F.q - 1) == 1


@given(field_st, hs.data())
def test_frobenius_is_additive_and_multiplicative(F, data):
    a, b = (data.draw(hs.integers(0, F.q - 1)) for _ in range(2))
    assert F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b))
    assert F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b))
    assert F.frob(a, F.k) == a


@pytest.mark.parametrize("p,k", FIELDS)
def test_primitive_element_has_full_order(p, k):
    F = make_field(p, k)
    g = int(F.primitive)
    seen = {int(F.power(g, e)) for e in range(F.q - 1)}
    assert len(seen) == F.q - 1


@pytest.mark.parametrize("p,k", FIELDS)
def test_subfields(p, k):
    F = make_field(p, k)
    for d in range(1, k + 1):
        if k % d == 0:
            sub = F.subfield(d)
            assert len(sub) == p**d
            assert (F.frob(sub, d) == sub).all()
    assert list(F.subfield(1)) == list(range(p))


def test_conway_polynomials_are_irreducible_and_compatible():
    for (p, k), poly in CONWAY.items():
        if p**k > 2**12:
            continue
        assert is_irreducible(list(poly), p)
        F = make_field(p, k)
        root = p if k > 1 else (-poly[0]) % p  # the class of x
        assert len({int(F.power(root, e)) for e in range(F.q - 1)}) == F.q - 1
        for d in range(1, k):
            if k % d == 0 and (p, d) in CONWAY:
                # x^((q-1)/(p^d-1)) is a root of the degree-d polynomial
                y = int(F.power(p, (F.q - 1) // (p**d - 1)))
                acc, pw = 0, 1
                for c in CONWAY[(p, d)]:
                    acc = int(F.add(acc, F.mul(F.from_int(c), pw)))
                    pw = int(F.mul(pw, y))
                assert acc == 0


def test_errors():
    with pytest.raises(errors.NonPrime):
        make_field(4)
    with pytest.raises(errors.DegreeZero):
        make_field(2, 0)
    with pytest.raises(errors.FieldTooLarge):
        make_field(2, 21)
    with pytest.raises(errors.WrongCharacteristic):
        frobenius_power(make_field(3, 2), 2, 2)


def test_matrix_file_round_trip(rng):
    F = make_field(3, 2)
    mats = [F.random((2, 2), rng), F.random((3, 3), rng)]
    F2, back = parse_matrices(format_matrices(F, mats))
    assert F2 == F
    assert all(np.array_equal(a, b) for a, b in zip(mats, back))


def test_matrix_file_errors():
    with pytest.raises(ValueError):
        parse_matrices("2 2\n1 0 0 1")
    with pytest.raises(errors.DimensionMismatch):
        parse_matrices("GF 2 1\n2 2\n1 0 0")
    with pytest.raises(ValueError):
        parse_matrices("GF 2 1\n1 1\n2")
