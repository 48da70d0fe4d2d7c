"""Dense univariate polynomials over GF(q), coefficients lowest degree first."""

from __future__ import annotations

import numpy as np

from .gf import GF


def trim(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def deg(a) -> int:
    return len(trim(a)) - 1


def add(F: GF, a, b) -> np.ndarray:
    n = max(len(a), len(b))
    A = np.zeros(n, dtype=np.int64)
    B = np.zeros(n, dtype=np.int64)
    A[: len(a)] = a
    B[: len(b)] = b
    return trim(F.add(A, B))


def sub(F: GF, a, b) -> np.ndarray:
    return add(F, a, F.neg(np.asarray(b, dtype=np.int64)))


def mul(F: GF, a, b) -> np.ndarray:
    a, b = trim(a), trim(b)
    if not len(a) or not len(b):
        return a[:0]
    prod = F.mul(a[:, None], b[None, :])
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for i in range(len(a)):
        out[i:i + len(b)] = F.add(out[i:i + len(b)], prod[i])
    return trim(out)


def divmod_(F: GF, a, b) -> tuple[np.ndarray, np.ndarray]:
    a, b = trim(a).copy(), trim(b)
    if not len(b):
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    if len(a) - 1 < db:
        return a[:0], a
    qt = np.zeros(len(a) - db, dtype=np.int64)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = F.mul(c, lead_inv)
            qt[i - db] = f
            a[i - db:i + 1] = F.sub(a[i - db:i + 1], F.mul(f, b))
    return trim(qt), trim(a[:db])


def mod(F: GF, a, b) -> np.ndarray:
    return divmod_(F, a, b)[1]


def monic(F: GF, a) -> np.ndarray:
    a = trim(a)
    return F.mul(F.inv(a[-1]), a) if len(a) else a


def gcd(F: GF, a, b) -> np.ndarray:
    a, b = trim(a), trim(b)
    while len(b):
        a, b = b, mod(F, a, b)
    return monic(F, a)


def powmod(F: GF, a, e: int, m) -> np.ndarray:
    result = np.array([1], dtype=np.int64)
    base = mod(F, a, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        e >>= 1
    return result


def evaluate(F: GF, a, x) -> np.ndarray:
    """Horner evaluation at an array of field points."""
    x = np.asarray(x, dtype=np.int64)
    out = np.zeros_like(x)
    for c in trim(a)[::-1]:
        out = F.add(F.mul(out, x), c)
    return out


def evaluate_matrix(F: GF, a, A) -> np.ndarray:
    n = A.shape[0]
    out = F.zeros((n, n))
    for c in trim(a)[::-1]:
        out = F.matmul(out, A)
        out[np.diag_indices(n)] = F.add(out[np.diag_indices(n)], c)
    return out


def charpoly(F: GF, A) -> np.ndarray:
    """Characteristic polynomial via Hessenberg reduction."""
    H = np.asarray(A, dtype=np.int64).copy()
    n = H.shape[0]
    for j in range(n - 2):
        nz = np.flatnonzero(H[j + 1:, j])
        if nz.size == 0:
            continue
        i = j + 1 + nz[0]
        if i != j + 1:
            H[[i, j + 1]] = H[[j + 1, i]]
            H[:, [i, j + 1]] = H[:, [j + 1, i]]
        piv_inv = F.inv(H[j + 1, j])
        for r in range(j + 2, n):
            if H[r, j]:
                m = F.mul(H[r, j], piv_inv)
                H[r] = F.sub(H[r], F.mul(m, H[j + 1]))
                H[:, j + 1] = F.add(H[:, j + 1], F.mul(m, H[:, r]))
    # p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik prod_{m=i+1..k} h_{m,m-1} p_{i-1}
    polys = [np.array([1], dtype=np.int64)]
    for k in range(n):
        pk = mul(F, np.array([F.neg(H[k, k]), 1]), polys[k])
        prod = 1
        for i in range(k - 1, -1, -1):
            prod = int(F.mul(prod, H[i + 1, i]))
            if not prod:
                break
            c = int(F.mul(H[i, k], prod))
            if c:
                pk = sub(F, pk, F.mul(c, polys[i]) if len(polys[i]) else polys[i])
        polys.append(pk)
    return polys[n]


def irreducible_factors_multiplicity_free(F: GF, c) -> list[np.ndarray]:
    """Irreducible factors f of c found by distinct-degree splitting when
    f is the only factor of its degree; sorted by degree."""
    c = monic(F, c)
    n = deg(c)
    x = np.array([0, 1], dtype=np.int64)
    out = []
    found = np.array([1], dtype=np.int64)
    xq = x
    for d in range(1, n + 1):
        xq = powmod(F, xq, F.q, c)
        g = gcd(F, c, sub(F, xq, x))
        # strip factors of lower degree dividing d
        g = divmod_(F, g, gcd(F, g, found))[0]
        if deg(g) == d:
            out.append(monic(F, g))
        if deg(g) > 0:
            found = mul(F, found, g)
    return out
