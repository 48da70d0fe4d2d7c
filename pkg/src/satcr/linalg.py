"""Dense Gaussian elimination over a finite field.

Vectors are rows of 2-D index arrays; matrices act on column vectors.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, Singular
from .gf import GF

MAX_DIM = 1024


def _check(A):
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2:
        raise DimensionMismatch("expected a 2-D matrix")
    if max(A.shape) > MAX_DIM:
        raise DimensionMismatch(f"dimension above {MAX_DIM}")
    return A


def rref(F: GF, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = _check(A).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = F.mul(F.inv(R[r, c]), R[r])
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            R[hit] = F.sub(R[hit], F.mul(col[hit, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: GF, A) -> int:
    return len(rref(F, A)[1])


def row_space(F: GF, A) -> np.ndarray:
    """Canonical basis (nonzero RREF rows) of the row space."""
    R, piv = rref(F, A)
    return R[: len(piv)]


def nullspace(F: GF, A) -> np.ndarray:
    """Rows x spanning {x : A @ x = 0}."""
    A = _check(A)
    R, piv = rref(F, A)
    n = A.shape[1]
    free = [c for c in range(n) if c not in piv]
    N = np.zeros((len(free), n), dtype=np.int64)
    for j, f in enumerate(free):
        N[j, f] = 1
        for i, pc in enumerate(piv):
            N[j, pc] = F.neg(R[i, f])
    return N


def solve(F: GF, A, b):
    """One solution of A @ x = b plus a nullspace basis, or None."""
    A = _check(A)
    b = np.asarray(b, dtype=np.int64)
    if b.shape != (A.shape[0],):
        raise DimensionMismatch("right-hand side has the wrong length")
    aug = np.concatenate([A, b[:, None]], axis=1)
    R, piv = rref(F, aug)
    n = A.shape[1]
    if n in piv:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = R[i, n]
    return x, nullspace(F, A)


def inverse(F: GF, A) -> np.ndarray:
    A = _check(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DimensionMismatch("inverse of a non-square matrix")
    R, piv = rref(F, np.concatenate([A, F.eye(n)], axis=1))
    if len(piv) < n or piv[n - 1] != n - 1:
        raise Singular("matrix is singular")
    return R[:, n:]


def det(F: GF, A) -> int:
    R = _check(A).copy()
    n = R.shape[0]
    if R.shape != (n, n):
        raise DimensionMismatch("determinant of a non-square matrix")
    d = 1
    for c in range(n):
        nz = np.flatnonzero(R[c:, c])
        if nz.size == 0:
            return 0
        i = c + nz[0]
        if i != c:
            R[[c, i]] = R[[i, c]]
            d = int(F.neg(d))
        piv = R[c, c]
        d = int(F.mul(d, piv))
        below = R[c + 1:, c]
        hit = np.flatnonzero(below) + c + 1
        if hit.size:
            f = F.div(R[hit, c], piv)
            R[hit] = F.sub(R[hit], F.mul(f[:, None], R[c][None, :]))
    return d


def in_span(F: GF, basis, v) -> bool:
    basis = np.asarray(basis, dtype=np.int64).reshape(-1, np.shape(v)[-1])
    return rank(F, np.vstack([basis, v])) == rank(F, basis) if basis.size else not np.any(v)


def complete_basis(F: GF, rows) -> np.ndarray:
    """Extend independent rows to a basis of the whole space (standard vectors appended)."""
    rows = np.asarray(rows, dtype=np.int64)
    n = rows.shape[1]
    out = list(rows)
    cur = rank(F, rows) if rows.size else 0
    for i in range(n):
        if cur == n:
            break
        e = np.zeros(n, dtype=np.int64)
        e[i] = 1
        trial = np.vstack(out + [e]) if out else e[None, :]
        if rank(F, trial) > cur:
            out.append(e)
            cur += 1
    return np.vstack(out)


def kron(F: GF, A, B) -> np.ndarray:
    A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    out = F.mul(A[:, None, :, None], B[None, :, None, :])
    return out.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def mat_power(F: GF, A, e: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    if e < 0:
        A, e = inverse(F, A), -e
    R = F.eye(A.shape[-1]) if A.ndim == 2 else np.broadcast_to(F.eye(A.shape[-1]), A.shape).copy()
    while e:
        if e & 1:
            R = F.matmul(R, A)
        A = F.matmul(A, A)
        e >>= 1
    return R
