"""Brute-force module oracles used to cross-check the Meataxe code.

Both work by spinning every vector of the space, so they only make sense
for tiny modules.  Neither uses the splitting solver.
"""

from __future__ import annotations

import numpy as np

from .gf import GF
from .group import MatGroup
from .linalg import rank, row_space

MAX_VECTORS = 1 << 16


def all_vectors(F: GF, n: int) -> np.ndarray:
    if F.q**n > MAX_VECTORS:
        raise ValueError("space too large for exhaustive enumeration")
    idx = np.arange(F.q**n, dtype=np.int64)
    return (idx[:, None] // (F.q ** np.arange(n, dtype=np.int64))) % F.q


def _spin_plain(F: GF, gens, v) -> np.ndarray:
    W = row_space(F, v[None, :])
    while True:
        imgs = [F.matmul(W, g.T) for g in gens]
        W2 = row_space(F, np.vstack([W] + imgs))
        if len(W2) == len(W):
            return W
        W = W2


def cyclic_submodules(G: MatGroup) -> list[np.ndarray]:
    """Distinct cyclic submodules spin(v), v != 0."""
    F = G.F
    seen: dict[bytes, np.ndarray] = {}
    for v in all_vectors(F, G.dim)[1:]:
        W = _spin_plain(F, G.gens, v)
        seen.setdefault(W.tobytes() + bytes([len(W)]), W)
    return list(seen.values())


def submodule_lattice(G: MatGroup) -> list[np.ndarray]:
    """Every invariant subspace: sums of cyclic submodules, closed under sum."""
    F, n = G.F, G.dim
    cyc = cyclic_submodules(G)
    key = lambda W: W.tobytes() + bytes([len(W)])  # noqa: E731
    lattice = {key(np.zeros((0, n), dtype=np.int64)): np.zeros((0, n), dtype=np.int64)}
    for W in cyc:
        lattice.setdefault(key(W), W)
    frontier = list(lattice.values())
    while frontier:
        nxt = []
        for A in frontier:
            for C in cyc:
                S = row_space(F, np.vstack([A, C]))
                k = key(S)
                if k not in lattice:
                    lattice[k] = S
                    nxt.append(S)
        frontier = nxt
    return list(lattice.values())


def lattice_semisimple(G: MatGroup) -> bool:
    """Every submodule has a complement inside the enumerated lattice."""
    F, n = G.F, G.dim
    subs = submodule_lattice(G)
    by_dim: dict[int, list[np.ndarray]] = {}
    for S in subs:
        by_dim.setdefault(len(S), []).append(S)
    for S in subs:
        others = by_dim.get(n - len(S), [])
        if not any(rank(F, np.vstack([S, T])) == n for T in others):
            return False
    return True


def socle_semisimple(G: MatGroup) -> bool:
    """The sum of the minimal (necessarily cyclic) submodules is everything."""
    F, n = G.F, G.dim
    if n == 0:
        return True
    vecs = all_vectors(F, n)[1:]
    dims = {}
    spans = {}
    for v in vecs:
        W = _spin_plain(F, G.gens, v)
        dims[v.tobytes()] = len(W)
        spans[v.tobytes()] = W
    minimal = []
    for v in vecs:
        W = spans[v.tobytes()]
        members = [u for u in _span_vectors(F, W) if u.any()]
        if all(dims[u.tobytes()] == len(W) for u in members):
            minimal.append(W)
    return rank(F, np.vstack(minimal)) == n


def _span_vectors(F: GF, W) -> np.ndarray:
    coeffs = all_vectors(F, len(W))
    return F.sum(F.mul(coeffs[:, :, None], W[None, :, :]), axis=1)


def lattice_irreducible(G: MatGroup) -> bool:
    return len(submodule_lattice(G)) == 2
