"""Cocharacters of GL_n, parabolic membership, the limit map c_lambda and
semisimplification of matrix groups.

For lambda(a) = C diag(a^k_1, ..., a^k_n) C^-1, conjugation scales the entry
(i, j) of C^-1 g C by a^(k_i - k_j).  The limit a -> 0 exists iff every entry
with k_i < k_j vanishes, and the limit keeps exactly the entries with
k_i = k_j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotAChain, NotInParabolic
from .gf import GF
from .group import ElementSet, MatGroup
from .linalg import inverse, rank, row_space
from .modrep import composition_series, is_semisimple
from .satur import f_saturated_closure


@dataclass(frozen=True)
class Cocharacter:
    exponents: tuple[int, ...]
    basis_change: tuple | None = None  # None means the identity

    @property
    def n(self) -> int:
        return len(self.exponents)

    def C(self, F: GF) -> np.ndarray:
        if self.basis_change is None:
            return F.eye(self.n)
        return np.array(self.basis_change, dtype=np.int64)

    def is_trivial(self) -> bool:
        return len(set(self.exponents)) <= 1

    def weight_matrix(self) -> np.ndarray:
        k = np.array(self.exponents)
        return k[:, None] - k[None, :]


def cocharacter(exponents, C=None) -> Cocharacter:
    bc = None if C is None else tuple(tuple(int(x) for x in row) for row in np.asarray(C))
    return Cocharacter(tuple(int(k) for k in exponents), bc)


def _conjugated(F: GF, g, lam: Cocharacter):
    g = np.asarray(g, dtype=np.int64)
    if g.shape[-1] != lam.n or g.shape[-2] != lam.n:
        raise DimensionMismatch("matrix size does not match the cocharacter")
    if lam.basis_change is None:
        return g, None, None
    C = lam.C(F)
    Ci = inverse(F, C)
    return F.matmul(F.matmul(Ci, g), C), C, Ci


def in_p_lambda(F: GF, g, lam: Cocharacter) -> np.ndarray | bool:
    """True iff the limit of lambda(a) g lambda(a)^-1 as a -> 0 exists."""
    h, _, _ = _conjugated(F, g, lam)
    neg = lam.weight_matrix() < 0
    bad = (h[..., neg] != 0).any(axis=-1)
    return bool(~bad) if np.ndim(bad) == 0 else ~bad


def c_lambda(F: GF, g, lam: Cocharacter) -> np.ndarray:
    """The limit map P_lambda -> L_lambda."""
    if not np.all(in_p_lambda(F, g, lam)):
        raise NotInParabolic("matrix is not in P_lambda")
    h, C, Ci = _conjugated(F, g, lam)
    h = h.copy()
    h[..., lam.weight_matrix() > 0] = 0
    if C is None:
        return h
    return F.matmul(F.matmul(C, h), Ci)


def flag_to_cocharacter(F: GF, chain) -> Cocharacter:
    """Cocharacter whose parabolic is the stabiliser of a chain of subspaces.

    chain lists nonzero subspaces (row bases) in increasing order; the whole
    space is appended if missing.  Exponents decrease from the first layer.
    """
    chain = [np.asarray(c, dtype=np.int64) for c in chain]
    if not chain:
        raise NotAChain("empty chain")
    n = chain[0].shape[1]
    dims = [rank(F, c) for c in chain]
    if dims[-1] != n:
        chain.append(F.eye(n))
        dims.append(n)
    for a, b, da, db in zip(chain, chain[1:], dims, dims[1:]):
        if not da < db or rank(F, np.vstack([a, b])) != db:
            raise NotAChain("subspaces are not strictly increasing")
    basis = np.zeros((0, n), dtype=np.int64)
    exps: list[int] = []
    layers = len(chain)
    for j, sub in enumerate(chain):
        before = len(basis)
        basis = _extend(F, basis, sub)
        exps += [layers - 1 - j] * (len(basis) - before)
    return cocharacter(exps, basis.T)


def _extend(F: GF, basis, sub) -> np.ndarray:
    """Append vectors of sub to basis until it spans basis + sub."""
    out = basis
    for v in row_space(F, sub):
        trial = np.vstack([out, v]) if len(out) else v[None, :]
        if rank(F, trial) > len(out):
            out = trial
    return out


@dataclass
class Semisimplification:
    group: MatGroup
    cocharacter: Cocharacter
    semisimple: bool
    chain: list[np.ndarray]


def semisimplify(G: MatGroup, rng=None) -> Semisimplification:
    """c_lambda of the generators for lambda built from a composition series."""
    F = G.F
    if is_semisimple(G, rng).semisimple:
        lam = cocharacter([0] * G.dim)
        return Semisimplification(G, lam, True, [F.eye(G.dim)])
    chain = composition_series(G, rng)
    lam = flag_to_cocharacter(F, chain)
    gens = [c_lambda(F, g, lam) for g in G.gens]
    H = MatGroup(F, gens, G.dim, check=False)
    verdict = is_semisimple(H, rng).semisimple
    return Semisimplification(H, lam, verdict, chain)


def closure_image(F: GF, es: ElementSet, lam: Cocharacter) -> ElementSet:
    return ElementSet.from_mats(F, c_lambda(F, es.mats, lam))


def check_semisat_commutation(G: MatGroup, lam: Cocharacter, T, cap: int | None = None) -> dict:
    """c_lambda(closure(G)) == closure(c_lambda(G)) as finite sets."""
    F = G.F
    for g in G.gens:
        if not in_p_lambda(F, g, lam):
            raise NotInParabolic("generator outside P_lambda")
    lhs = closure_image(F, f_saturated_closure(G, T, cap).elements(), lam)
    H = MatGroup(F, [c_lambda(F, g, lam) for g in G.gens], G.dim, check=False)
    rhs = f_saturated_closure(H, T, cap).elements()
    return {"equal": lhs.same_as(rhs), "lhs_order": len(lhs), "rhs_order": len(rhs)}
