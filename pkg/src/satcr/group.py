"""Finitely generated matrix groups over a finite field and their enumeration."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import CapExceeded, DimensionMismatch, Singular
from .gf import GF
from .linalg import det, inverse

DEFAULT_CAP = 10**6


def default_cap() -> int:
    env = os.environ.get("SATCR_CAP")
    return int(env) if env else DEFAULT_CAP


class KeyCodec:
    """Injective encoding of n x n matrices as sortable numpy keys."""

    def __init__(self, F: GF, n: int):
        self.n, self.q = n, F.q
        bits = n * n * math.log2(F.q)
        if bits <= 62:
            self._pw = F.q ** np.arange(n * n, dtype=np.int64)[::-1]
        else:
            self._pw = None
            self._dtype = np.uint8 if F.q <= 256 else (np.uint16 if F.q <= 65536 else np.uint32)

    def encode(self, mats) -> np.ndarray:
        flat = np.asarray(mats, dtype=np.int64).reshape(-1, self.n * self.n)
        if self._pw is not None:
            return flat @ self._pw
        raw = np.ascontiguousarray(flat.astype(self._dtype))
        return raw.view(np.dtype((np.void, raw.dtype.itemsize * self.n * self.n))).ravel()


def batch_inverse(F: GF, A) -> np.ndarray:
    """Inverses of a stack of invertible matrices, eliminated in lockstep."""
    A = np.asarray(A, dtype=np.int64)
    if A.ndim == 2:
        return inverse(F, A)
    m, n, _ = A.shape
    M = np.concatenate([A, np.broadcast_to(F.eye(n), (m, n, n))], axis=2).copy()
    rows = np.arange(m)
    for c in range(n):
        nz = M[:, c:, c] != 0
        if not nz.any(axis=1).all():
            raise Singular("singular matrix in batch")
        piv = c + nz.argmax(axis=1)
        top = M[rows, c].copy()
        M[rows, c] = M[rows, piv]
        M[rows, piv] = top
        M[:, c] = F.mul(F.inv(M[:, c, c])[:, None], M[:, c])
        f = M[:, :, c].copy()
        f[:, c] = 0
        M = F.sub(M, F.mul(f[:, :, None], M[:, c][:, None, :]))
    return M[:, :, n:]


@dataclass
class ElementSet:
    """Enumerated group elements, stored sorted by key."""

    F: GF
    mats: np.ndarray
    keys: np.ndarray
    codec: KeyCodec

    def __len__(self):
        return len(self.keys)

    def contains(self, mats) -> np.ndarray:
        k = self.codec.encode(mats)
        idx = np.searchsorted(self.keys, k)
        idx = np.minimum(idx, len(self.keys) - 1)
        return self.keys[idx] == k

    def same_as(self, other: "ElementSet") -> bool:
        return len(self) == len(other) and bool(np.all(self.keys == other.keys))

    @classmethod
    def from_mats(cls, F: GF, mats) -> "ElementSet":
        mats = np.asarray(mats, dtype=np.int64)
        codec = KeyCodec(F, mats.shape[-1])
        k = codec.encode(mats)
        k, idx = np.unique(k, return_index=True)
        return cls(F, mats[idx], k, codec)


def enumerate_group(F: GF, gens, n: int, cap: int | None = None) -> ElementSet:
    """Breadth-first closure of the generators under multiplication."""
    cap = default_cap() if cap is None else cap
    codec = KeyCodec(F, n)
    ident = F.eye(n)[None]
    keys = codec.encode(ident)
    chunks = [ident]
    frontier = ident
    total = 1
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    while len(frontier) and gens:
        cand = np.concatenate([F.matmul(frontier, g) for g in gens])
        ck, idx = np.unique(codec.encode(cand), return_index=True)
        pos = np.minimum(np.searchsorted(keys, ck), len(keys) - 1)
        fresh = keys[pos] != ck
        frontier = cand[idx[fresh]]
        total += len(frontier)
        if total > cap:
            raise CapExceeded(f"group has more than {cap} elements")
        if len(frontier):
            chunks.append(frontier)
            keys = np.sort(np.concatenate([keys, ck[fresh]]))
    return ElementSet.from_mats(F, np.concatenate(chunks))


class MatGroup:
    """A matrix group given by generators acting on column vectors."""

    def __init__(self, F: GF, gens, dim: int | None = None, check: bool = True):
        gens = [np.asarray(g, dtype=np.int64) for g in gens]
        if dim is None:
            if not gens:
                raise DimensionMismatch("dimension needed for a group without generators")
            dim = gens[0].shape[0]
        for g in gens:
            if g.shape != (dim, dim):
                raise DimensionMismatch(f"generator of shape {g.shape}, expected {(dim, dim)}")
            if check and det(F, g) == 0:
                raise Singular("generator is not invertible")
        self.F, self.dim, self.gens = F, dim, gens
        self._elements: ElementSet | None = None

    def __repr__(self):
        return f"MatGroup(dim={self.dim}, ngens={len(self.gens)}, field={self.F!r})"

    def elements(self, cap: int | None = None) -> ElementSet:
        if self._elements is None:
            self._elements = enumerate_group(self.F, self.gens, self.dim, cap)
        return self._elements

    def order(self, cap: int | None = None) -> int:
        return len(self.elements(cap))

    @cached_property
    def transposed(self) -> "MatGroup":
        return MatGroup(self.F, [g.T.copy() for g in self.gens], self.dim, check=False)

    @classmethod
    def from_elements(cls, es: ElementSet) -> "MatGroup":
        G = cls(es.F, list(es.mats), es.mats.shape[-1], check=False)
        G._elements = es
        return G


# -- standard generators ----------------------------------------------------

def elementary(F: GF, n: int, i: int, j: int, t) -> np.ndarray:
    """x_ij(t) = 1 + t E_ij."""
    M = F.eye(n)
    M[i, j] = int(t)
    return M


def sl_generators(F: GF, n: int) -> list[np.ndarray]:
    """Generators of SL_n(F): adjacent root elements x_{i,i+1}(1), x_{i+1,i}(1)
    and the torus elements diag(.., w, w^-1, ..) for a primitive w."""
    gens = []
    for i in range(n - 1):
        gens.append(elementary(F, n, i, i + 1, 1))
        gens.append(elementary(F, n, i + 1, i, 1))
    if F.q > 3:
        w = int(F.primitive)
        for i in range(n - 1):
            h = F.eye(n)
            h[i, i] = w
            h[i + 1, i + 1] = int(F.inv(w))
            gens.append(h)
    return gens


def sl_group(F: GF, n: int) -> MatGroup:
    return MatGroup(F, sl_generators(F, n), n)


def block_diag(F: GF, *blocks) -> np.ndarray:
    blocks = [np.asarray(b, dtype=np.int64) for b in blocks]
    n = sum(b.shape[0] for b in blocks)
    M = F.zeros((n, n))
    o = 0
    for b in blocks:
        k = b.shape[0]
        M[o:o + k, o:o + k] = b
        o += k
    return M


def sl_order(q: int, n: int) -> int:
    out = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        out *= q**i - 1
    return out


def su3_order(q: int) -> int:
    return q**3 * (q * q - 1) * (q**3 + 1)
