"""Chevalley bases over the integers and the Killing form modulo primes.

Structure constants follow the extraspecial-pair convention: positive roots
are totally ordered by (height, coefficient tuple), N(alpha, beta) = +(r+1)
on every extraspecial pair, N(-a, -b) = -N(a, b), and all other constants
are forced by the Chevalley relations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .errors import InvalidTypeRank
from .gf import is_prime
from .rootsys import RootSystem, build_root_system, e_simple, is_very_good


def _neg(r):
    return tuple(-c for c in r)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def structure_constants(rs: RootSystem) -> dict[tuple, int]:
    """N(a, b) for every ordered pair of roots whose sum is a root."""
    pos = rs.positive_roots
    order = {r: i for i, r in enumerate(pos)}
    table: dict[tuple, int] = {}

    def r_string(a, b):
        r = 0
        while rs.is_root(_sub(b, tuple((r + 1) * c for c in a))):
            r += 1
        return r

    def get(a, b) -> int:
        key = (a, b)
        if key in table:
            return table[key]
        s = _add(a, b)
        if not rs.is_root(s):
            return 0
        apos, bpos = order.get(a) is not None, order.get(b) is not None
        if apos and bpos:
            if order[a] < order[b]:
                raise AssertionError(f"special pair {a},{b} not yet computed")
            val = -get(b, a)
        elif not apos and not bpos:
            val = -get(_neg(a), _neg(b))
        elif not apos:
            val = -get(b, a)
        else:
            c = _neg(s)
            if order.get(c) is not None:
                # N(a,b)/(c,c) = N(c,a)/(b,b) with a, c positive
                num = rs.norm2(c) * get(c, a)
                val = num // rs.norm2(b)
                if val * rs.norm2(b) != num:
                    raise AssertionError("non-integral structure constant")
            else:
                val = -get(_neg(a), _neg(b))
        table[key] = val
        return val

    for xi in pos:
        if sum(xi) == 1:
            continue
        pairs = [(a, _sub(xi, a)) for a in pos
                 if _sub(xi, a) in order and order[a] < order[_sub(xi, a)]]
        alpha, beta = pairs[0]
        n_ab = r_string(alpha, beta) + 1
        table[(alpha, beta)] = n_ab
        xx = rs.norm2(xi)
        for gamma, delta in pairs[1:]:
            acc = Fraction(0)
            bg = _sub(beta, gamma)
            if rs.is_root(bg):
                acc += Fraction(get(beta, _neg(gamma)) * get(alpha, _neg(delta)), rs.norm2(bg))
            ag = _sub(alpha, gamma)
            if rs.is_root(ag):
                acc += Fraction(get(_neg(gamma), alpha) * get(beta, _neg(delta)), rs.norm2(ag))
            val = Fraction(xx) * acc / n_ab
            if val.denominator != 1:
                raise AssertionError("non-integral structure constant")
            table[(gamma, delta)] = int(val)
    # fill every ordered pair
    for a in rs.roots:
        for b in rs.roots:
            if rs.is_root(_add(a, b)):
                get(a, b)
    return table


class ChevalleyBasis:
    """Basis X_alpha (alpha in Phi, positive roots first) followed by H_1..H_n."""

    def __init__(self, rs: RootSystem):
        if rs.rank > 8:
            raise InvalidTypeRank("rank above 8")
        self.rs = rs
        self.N = structure_constants(rs)
        self.nroots = len(rs.roots)
        self.dim = self.nroots + rs.rank
        self._pairing = np.array(
            [[rs.coroot_pairing(b, i) for i in range(rs.rank)] for b in rs.roots], dtype=np.int64)
        self._coroots = [rs.coroot_coeffs(b) for b in rs.roots]

    def label(self, i: int) -> str:
        if i < self.nroots:
            return "X" + str(self.rs.roots[i])
        return f"H{i - self.nroots + 1}"

    def root_of(self, i: int):
        return self.rs.roots[i] if i < self.nroots else None

    def bracket_basis(self, i: int, j: int) -> dict[int, int]:
        """[e_i, e_j] as a sparse coefficient dict."""
        rs, nr = self.rs, self.nroots
        if i >= nr and j >= nr:
            return {}
        if i >= nr:
            c = int(self._pairing[j, i - nr])
            return {j: c} if c else {}
        if j >= nr:
            c = -int(self._pairing[i, j - nr])
            return {i: c} if c else {}
        a, b = rs.roots[i], rs.roots[j]
        s = _add(a, b)
        if not any(s):
            return {nr + k: c for k, c in enumerate(self._coroots[i]) if c}
        idx = rs.root_index.get(s)
        if idx is None:
            return {}
        return {idx: self.N[(a, b)]}

    def bracket(self, x: dict[int, int], y: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def ad_matrix(self, i: int) -> np.ndarray:
        """Dense integer matrix of ad(e_i) acting on coordinate columns."""
        M = np.zeros((self.dim, self.dim), dtype=np.int64)
        for j in range(self.dim):
            for k, c in self.bracket_basis(i, j).items():
                M[k, j] = c
        return M

    @cached_property
    def structure_tensor(self) -> np.ndarray:
        C = np.zeros((self.dim,) * 3, dtype=np.int64)
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in self.bracket_basis(i, j).items():
                    C[i, j, k] = c
        return C

    def jacobi_defect(self, i: int, j: int, k: int) -> dict[int, int]:
        e = lambda t: {t: 1}  # noqa: E731
        out: dict[int, int] = {}
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            for key, v in self.bracket(e(x), self.bracket(e(y), e(z))).items():
                out[key] = out.get(key, 0) + v
        return {key: v for key, v in out.items() if v}

    def jacobi_full(self) -> bool:
        """Jacobi identity for all basis triples via the structure tensor."""
        C = self.structure_tensor
        # J[i,j,k,l] = sum_m C[j,k,m] C[i,m,l] + cyclic
        T = np.tensordot(C, C, axes=([2], [1]))  # T[j,k,i,l] = sum_m C[j,k,m] C[i,m,l]
        J = T.transpose(2, 0, 1, 3) + T.transpose(1, 2, 0, 3) + T.transpose(0, 1, 2, 3)
        return not J.any()

    def jacobi_random(self, samples: int, rng: np.random.Generator) -> bool:
        triples = rng.integers(0, self.dim, size=(samples, 3))
        return all(not self.jacobi_defect(*map(int, t)) for t in triples)


@lru_cache(maxsize=None)
def build_chevalley(rs: RootSystem) -> ChevalleyBasis:
    return ChevalleyBasis(rs)


class KillingGram:
    """Integer Killing form on a Chevalley basis, reduced modulo primes on demand."""

    def __init__(self, cb: ChevalleyBasis):
        self.cb = cb
        rs = cb.rs
        P = cb._pairing
        # kappa(H_i, H_j) = sum over roots of alpha(H_i) alpha(H_j)
        self.cartan_block = P.T @ P
        npos = len(rs.positive_roots)
        self.root_pairs = np.zeros(npos, dtype=np.int64)
        for a in range(npos):
            self.root_pairs[a] = self._trace_ad_ad(a, a + npos)
        self.p_rank_cache: dict[int, int] = {}

    def _trace_ad_ad(self, i: int, j: int) -> int:
        cb = self.cb
        total = 0
        for b in range(cb.dim):
            inner = cb.bracket_basis(j, b)
            for k, c in inner.items():
                total += c * cb.bracket_basis(i, k).get(b, 0)
        return total

    @cached_property
    def gram(self) -> np.ndarray:
        cb = self.cb
        nr, npos = cb.nroots, len(cb.rs.positive_roots)
        G = np.zeros((cb.dim, cb.dim), dtype=np.int64)
        for a in range(npos):
            G[a, a + npos] = G[a + npos, a] = self.root_pairs[a]
        G[nr:, nr:] = self.cartan_block
        return G

    def rank_mod(self, p: int) -> int:
        """Rank of the Gram matrix mod p, computed block by block."""
        if p not in self.p_rank_cache:
            from .gf import make_field
            from .linalg import rank
            F = make_field(p)
            r = rank(F, F.from_int(self.cartan_block))
            r += 2 * int(np.count_nonzero(self.root_pairs % p))
            self.p_rank_cache[p] = r
        return self.p_rank_cache[p]


@lru_cache(maxsize=None)
def killing_gram(cb: ChevalleyBasis) -> KillingGram:
    return KillingGram(cb)


def killing_nondegenerate_mod(cb: ChevalleyBasis, p: int) -> bool:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return killing_gram(cb).rank_mod(p) == cb.dim


def theorem_vi_condition(rs: RootSystem, p: int) -> bool:
    """p very good and, for classical types, p does not divide e(G)."""
    e = e_simple(rs.type, rs.rank)
    return is_very_good(rs, p) and (e is None or e % p != 0)


def check_vi_equivalence(typ: str, rank: int, p_max: int) -> list[tuple[int, bool, bool]]:
    """(p, Killing form nondegenerate mod p, very-good-and-e condition) for primes p <= p_max."""
    if p_max > 100:
        raise ValueError("p_max is limited to 100")
    rs = build_root_system(typ.upper(), rank)
    cb = build_chevalley(rs)
    return [(p, killing_nondegenerate_mod(cb, p), theorem_vi_condition(rs, p))
            for p in range(2, p_max + 1) if is_prime(p)]
