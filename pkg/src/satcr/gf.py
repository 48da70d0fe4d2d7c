"""Finite fields GF(p^k) with vectorised arithmetic on numpy index arrays.

An element is stored as the integer ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``
where ``c_i`` are its coefficients in the polynomial basis ``1, x, ...``
modulo the field polynomial.  The prime subfield therefore occupies the
indices ``0 .. p-1``, and matrices are plain ``int64`` arrays of indices.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from ._conway import CONWAY
from .errors import DegreeZero, FieldTooLarge, NonPrime, WrongCharacteristic

DEFAULT_BOUND = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists lowest degree first ---------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, f, p):
    a = list(a)
    inv_lead = pow(f[-1], -1, p)
    while len(a) >= len(f):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(f)
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return _trim(a)


def _polymulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _polymod(out, f, p)


def _polygcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _polymod(a, b, p)
    return a


def _xpow_mod(e, f, p):
    """x^e mod f by repeated squaring."""
    result, base = [1], _polymod([0, 1], f, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def is_irreducible(poly, p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    f = _trim(list(poly))
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if _xpow_mod(p**k, f, p) != _polymod([0, 1], f, p):
        return False
    for r in prime_factors(k):
        h = _xpow_mod(p ** (k // r), f, p)
        h = h + [0] * max(0, 2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_polygcd(f, _trim(h), p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k whose lower coefficients, read as a
    base-p number with c_0 least significant, are smallest."""
    for n in range(p**k):
        low = [(n // p**i) % p for i in range(k)]
        if low[0] == 0 and k > 1:
            continue
        poly = tuple(low) + (1,)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    poly: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    def __str__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


class GF:
    """Arithmetic tables and vectorised operations for one finite field.

    All operations accept numpy arrays (or ints) of element indices and
    broadcast like numpy ufuncs.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p, self.k, self.q = spec.p, spec.k, spec.q
        p, k = self.p, self.k
        self._pw = p ** np.arange(k, dtype=np.int64)
        f = list(spec.poly)
        # companion matrix: digits(x * a) = C @ digits(a)
        C = np.zeros((k, k), dtype=np.int64)
        for i in range(1, k):
            C[i, i - 1] = 1
        C[:, k - 1] = [(-c) % p for c in f[:k]]
        self._companion = C
        # reduction tensor for products of digit vectors
        red = np.zeros((2 * k - 1, k), dtype=np.int64)
        for d in range(2 * k - 1):
            red[d] = self._xpow_digits(d)
        M = np.zeros((k, k, k), dtype=np.int64)
        for a in range(k):
            for b in range(k):
                M[a, b] = red[a + b]
        self._red = M.reshape(k * k, k)
        self.primitive = self._find_primitive()
        self._build_tables()

    # -- construction helpers --------------------------------------------

    def _xpow_digits(self, d):
        v = np.zeros(self.k, dtype=np.int64)
        v[0] = 1
        for _ in range(d):
            v = self._companion @ v % self.p
        return v

    def _mul_matrix(self, a: int) -> np.ndarray:
        """Matrix of multiplication by a on digit vectors."""
        k, p = self.k, self.p
        da = self.digits(np.int64(a))
        M = np.zeros((k, k), dtype=np.int64)
        P = np.eye(k, dtype=np.int64)
        for i in range(k):
            M = (M + da[i] * P) % p
            P = self._companion @ P % p
        return M

    def _pow_by_matrix(self, a: int, e: int) -> int:
        M = self._mul_matrix(a)
        R = np.eye(self.k, dtype=np.int64)
        while e:
            if e & 1:
                R = R @ M % self.p
            M = M @ M % self.p
            e >>= 1
        return int(self.undigits(R[:, 0]))

    def _find_primitive(self) -> int:
        q = self.q
        if q == 2:
            return 1
        factors = prime_factors(q - 1)
        start = self.p if self.k > 1 else 2
        for g in list(range(start, q)) + list(range(2, start)):
            if all(self._pow_by_matrix(g, (q - 1) // r) != 1 for r in factors):
                return g
        raise AssertionError("no primitive element")

    def _build_tables(self):
        q, p = self.q, self.p
        n = q - 1
        B = max(1, math.isqrt(n))
        exp = np.zeros(n, dtype=np.int64)
        cur = np.zeros(self.k, dtype=np.int64)
        cur[0] = 1
        Mg = self._mul_matrix(self.primitive)
        first = np.zeros((B, self.k), dtype=np.int64)
        for i in range(B):
            first[i] = cur
            cur = Mg @ cur % p
        # cur now holds g^B
        MB = self._mul_matrix(int(self.undigits(cur)))
        block = first
        for start in range(0, n, B):
            stop = min(start + B, n)
            exp[start:stop] = block[: stop - start] @ self._pw
            block = block @ MB.T % p
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError("primitive element does not generate")
        self._exp = np.concatenate([exp, exp])
        self._log = log
        self._inv = np.zeros(q, dtype=np.int64)
        self._inv[1:] = exp[(-log[1:]) % n]
        self._neg = self.undigits((-self.digits(np.arange(q, dtype=np.int64))) % p)

    # -- element helpers -------------------------------------------------

    def __repr__(self):
        return f"GF({self.p}^{self.k}, poly={self.spec.poly})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def element(self, coeffs) -> int:
        coeffs = list(coeffs) + [0] * (self.k - len(coeffs))
        if len(coeffs) > self.k:
            raise ValueError("too many coefficients")
        return int(sum((c % self.p) * self.p**i for i, c in enumerate(coeffs)))

    def coeffs(self, x) -> tuple[int, ...]:
        return tuple(int(c) for c in self.digits(np.int64(x)))

    def from_int(self, n) -> np.ndarray:
        """Image of integers under Z -> GF(p) -> GF(q)."""
        return np.asarray(n, dtype=np.int64) % self.p

    def digits(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._pw) % self.p

    def undigits(self, d) -> np.ndarray:
        return np.asarray(d, dtype=np.int64) @ self._pw

    def gen_power(self, e) -> np.ndarray:
        return self._exp[np.asarray(e, dtype=np.int64) % (self.q - 1)]

    def log(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.undigits((self.digits(a) + self.digits(b)) % self.p)

    def neg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return a * b % self.p
        a, b = np.broadcast_arrays(a, b)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("inverse of zero in " + str(self.spec))
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            a, e = self.inv(a), -e
        out = self._exp[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def frob(self, a, d: int = 1):
        """x -> x^(p^d)."""
        return self.power(a, self.p ** (d % self.k) if self.k > 1 else 1)

    def sum(self, a, axis=None):
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if axis is None:
            return self.undigits(self.digits(a.ravel()).sum(axis=0) % self.p)
        ax = axis if axis >= 0 else a.ndim + axis
        return self.undigits(self.digits(a).sum(axis=ax) % self.p)

    def matmul(self, A, B):
        """Matrix product with numpy batching on leading axes."""
        A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
        if self.k == 1:
            return (A @ B) % self.p
        vec = B.ndim == 1
        if vec:
            B = B[:, None]
        Ad, Bd = self.digits(A), self.digits(B)
        T = np.einsum("...ila,...ljb->...ijab", Ad, Bd)
        T = T.reshape(T.shape[:-2] + (self.k * self.k,)) % self.p
        out = self.undigits((T @ self._red) % self.p)
        return out[..., 0] if vec else out

    def scale(self, c, A):
        return self.mul(np.asarray(c, dtype=np.int64), A)

    # -- structure -------------------------------------------------------

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def subfield(self, d: int) -> np.ndarray:
        """Sorted indices of the subfield GF(p^d), realised as Frobenius-fixed points."""
        if d < 1 or self.k % d:
            raise ValueError(f"GF({self.p}^{d}) is not a subfield of {self.spec}")
        step = (self.q - 1) // (self.p**d - 1)
        fixed = self._exp[np.arange(0, self.q - 1, step)]
        return np.sort(np.concatenate([[0], fixed]))

    def random(self, shape, rng: np.random.Generator, nonzero=False):
        lo = 1 if nonzero else 0
        return rng.integers(lo, self.q, size=shape, dtype=np.int64)

    def format(self, x) -> str:
        return ":".join(str(c) for c in self.coeffs(x))


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, k: int, bound: int) -> GF:
    if (p, k) in CONWAY:
        poly = CONWAY[(p, k)]
    else:
        poly = smallest_irreducible(p, k)
    return GF(FieldSpec(p, k, tuple(poly)))


def make_field(p: int, k: int = 1, bound: int = DEFAULT_BOUND) -> GF:
    """Deterministic GF(p^k): Conway polynomial when tabulated, else the
    smallest monic irreducible."""
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise NonPrime(f"{p} is not prime")
    if k < 1:
        raise DegreeZero("extension degree must be at least 1")
    if p**k > bound:
        raise FieldTooLarge(f"{p}^{k} exceeds the table bound {bound}")
    return _cached_field(int(p), int(k), bound)


def frobenius_power(F: GF, x, q: int):
    """Return x^q where q is a power of the characteristic."""
    d, r = 0, q
    while r % F.p == 0:
        r //= F.p
        d += 1
    if r != 1 or q < 1:
        raise WrongCharacteristic(f"{q} is not a power of {F.p}")
    return F.frob(x, d)
