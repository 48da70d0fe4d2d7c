"""Weights of Weyl modules, Weyl dimensions and tensor-square decomposition.

Weights are integer tuples in fundamental-weight coordinates, so a weight
is dominant iff all coordinates are >= 0 and the simple root alpha_i is
column i of the Cartan matrix.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NegativeMultiplicity, NonDominant, TooLarge
from .rootsys import RootSystem, build_root_system

MAX_WEIGHTS = 10**5

# (type, rank, p, highest weight) -> dominant character to remove from the
# Weyl character to obtain the irreducible character.
# G2 at p = 7: L(2 lambda_2) = V(2 lambda_2) - L(0).
EXCEPTIONS: dict[tuple, dict[tuple[int, ...], int]] = {
    ("G", 2, 7, (0, 2)): {(0, 0): 1},
}


def _frac_inverse(A):
    n = len(A)
    M = [[Fraction(int(A[i][j])) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


class WeightLattice:
    """Bilinear form, reflections and dominance order for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        self.A = rs.cartan
        self.Ainv = _frac_inverse(rs.cartan.tolist())
        S = rs.gram
        # (lambda, mu) = m^T Ainv^T S Ainv n, kept as Fractions
        Q = [[sum(self.Ainv[a][i] * int(S[a, b]) * self.Ainv[b][j] for a in range(n) for b in range(n))
              for j in range(n)] for i in range(n)]
        self.Q = Q
        self.pos_w = [rs.to_weight(b) for b in rs.positive_roots]
        self.rho = (1,) * n
        self._alpha_cols = [tuple(int(x) for x in self.A[:, i]) for i in range(n)]

    def inner(self, x, y) -> Fraction:
        n = self.rs.rank
        return sum(x[i] * self.Q[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j])

    def root_coords(self, w) -> tuple[Fraction, ...]:
        n = self.rs.rank
        return tuple(sum(self.Ainv[i][j] * w[j] for j in range(n)) for i in range(n))

    def is_nonneg_root_combination(self, w) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.root_coords(w))

    def dominant_conjugate(self, w) -> tuple[int, ...]:
        w = list(w)
        while True:
            i = next((i for i, x in enumerate(w) if x < 0), None)
            if i is None:
                return tuple(w)
            m = w[i]
            col = self._alpha_cols[i]
            w = [a - m * b for a, b in zip(w, col)]

    def orbit(self, dom) -> list[tuple[int, ...]]:
        seen = {tuple(dom)}
        frontier = [tuple(dom)]
        while frontier:
            nxt = []
            for w in frontier:
                for i, m in enumerate(w):
                    if m > 0:
                        col = self._alpha_cols[i]
                        v = tuple(a - m * b for a, b in zip(w, col))
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
            frontier = nxt
        return sorted(seen)


@lru_cache(maxsize=None)
def lattice(rs: RootSystem) -> WeightLattice:
    return WeightLattice(rs)


def _check_dominant(rs, lam):
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank or min(lam) < 0:
        raise NonDominant(f"{lam} is not a dominant weight of {rs.name}")
    return lam


def weyl_dim(rs: RootSystem, lam) -> int:
    lam = _check_dominant(rs, lam)
    num, den = Fraction(1), Fraction(1)
    for beta in rs.positive_roots:
        b2 = rs.norm2(beta)
        # <mu, beta^vee> = sum_i c_i (alpha_i, alpha_i)/(beta, beta) m_i
        w = [Fraction(c * int(rs.gram[i, i]), b2) for i, c in enumerate(beta)]
        num *= sum(wi * (m + 1) for wi, m in zip(w, lam))
        den *= sum(w)
    val = num / den
    assert val.denominator == 1
    return int(val)


def fundamental_weight(rs: RootSystem, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(rs.rank))


def min_fundamental_dim(rs: RootSystem) -> int:
    return min(weyl_dim(rs, fundamental_weight(rs, i)) for i in range(rs.rank))


def minimal_fundamental_weight(rs: RootSystem) -> tuple[int, ...]:
    """Fundamental weight of least Weyl dimension (first index on ties)."""
    dims = [weyl_dim(rs, fundamental_weight(rs, i)) for i in range(rs.rank)]
    return fundamental_weight(rs, dims.index(min(dims)))


def adjoint_weight(rs: RootSystem) -> tuple[int, ...]:
    return rs.to_weight(rs.highest_root)


@lru_cache(maxsize=None)
def dominant_character(rs: RootSystem, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Freudenthal multiplicities of the dominant weights of V(lam)."""
    lam = _check_dominant(rs, lam)
    L = lattice(rs)
    dominant = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for a in L.pos_w:
                v = tuple(x - y for x, y in zip(w, a))
                if min(v) >= 0 and v not in dominant:
                    dominant[v] = dominant[w] + sum(
                        int(c) for c in L.root_coords(a))
                    nxt.append(v)
        frontier = nxt
    # depth = height of lam - mu
    depth = {mu: int(sum(L.root_coords(tuple(x - y for x, y in zip(lam, mu))))) for mu in dominant}
    order = sorted(dominant, key=lambda mu: (depth[mu], mu))
    lr = tuple(x + 1 for x in lam)
    lr2 = L.inner(lr, lr)
    mult: dict[tuple[int, ...], int] = {}
    for mu in order:
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for a in L.pos_w:
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(mu, a))
                dv = L.dominant_conjugate(v)
                if dv not in mult:
                    break
                total += mult[dv] * L.inner(v, a)
                k += 1
        mr = tuple(x + 1 for x in mu)
        val = 2 * total / (lr2 - L.inner(mr, mr))
        if val.denominator != 1:
            raise AssertionError("non-integral Freudenthal multiplicity")
        mult[mu] = int(val)
    return {mu: m for mu, m in mult.items() if m}


@dataclass
class WeightMultiset:
    rs: RootSystem
    entries: Counter = field(default_factory=Counter)

    @property
    def size(self) -> int:
        return sum(self.entries.values())

    def dominant_part(self) -> Counter:
        return Counter({w: m for w, m in self.entries.items() if min(w) >= 0 and m})


@dataclass
class DecompositionResult:
    factors: list[tuple[int, ...]]
    deficits_used: list[tuple[str, int, tuple[int, ...]]] = field(default_factory=list)

    def multiset(self) -> Counter:
        return Counter(self.factors)


def weyl_weights(rs: RootSystem, lam) -> WeightMultiset:
    lam = _check_dominant(rs, lam)
    if weyl_dim(rs, lam) > MAX_WEIGHTS:
        raise TooLarge("module dimension above 1e5")
    L = lattice(rs)
    out: Counter = Counter()
    for mu, m in dominant_character(rs, lam).items():
        for w in L.orbit(mu):
            out[w] += m
    return WeightMultiset(rs, out)


def tensor_square_weights(rs: RootSystem, lam) -> WeightMultiset:
    """Weights of V(lam) tensor its dual: all differences mu - nu."""
    ws = weyl_weights(rs, lam)
    dim = ws.size
    if dim * dim > MAX_WEIGHTS:
        raise TooLarge(f"{dim}^2 weights exceed the cap")
    W = np.array(list(ws.entries.keys()), dtype=np.int64)
    M = np.array(list(ws.entries.values()), dtype=np.int64)
    diffs = (W[:, None, :] - W[None, :, :]).reshape(-1, rs.rank)
    counts = (M[:, None] * M[None, :]).ravel()
    uniq, inv = np.unique(diffs, axis=0, return_inverse=True)
    tot = np.bincount(inv.ravel(), weights=counts).astype(np.int64)
    return WeightMultiset(rs, Counter({tuple(int(x) for x in u): int(c) for u, c in zip(uniq, tot)}))


def irreducible_character(rs: RootSystem, lam, p: int, overrides=None):
    """Dominant character used for L(lam): Weyl character minus any tabulated deficit.

    overrides extends (and may replace entries of) the embedded table.
    """
    table = {**EXCEPTIONS, **(overrides or {})}
    char = Counter(dominant_character(rs, tuple(lam)))
    key = (rs.type, rs.rank, p, tuple(lam))
    used = key in table
    if used:
        for w, m in table[key].items():
            for v, c in dominant_character(rs, tuple(w)).items():
                char[v] -= m * c
    return char, used


def decompose_by_subtraction(ws: WeightMultiset, p: int = 0, overrides=None,
                             tie_break: str = "lex") -> DecompositionResult:
    """Peel off irreducible characters, highest weights first."""
    rs = ws.rs
    L = lattice(rs)
    rem = ws.dominant_part()
    factors, used = [], []
    while rem:
        cands = [w for w, m in rem.items() if m > 0]
        maximal = [w for w in cands
                   if not any(v != w and L.is_nonneg_root_combination(tuple(a - b for a, b in zip(v, w)))
                              for v in cands)]
        mu = max(maximal) if tie_break == "lex" else min(maximal)
        char, hit = irreducible_character(rs, mu, p, overrides)
        if hit:
            used.append((rs.name, p, mu))
        for w, m in char.items():
            rem[w] -= m
            if rem[w] < 0:
                raise NegativeMultiplicity(
                    f"negative multiplicity at {w} after removing L{mu} ({rs.name}, p={p})")
            if rem[w] == 0:
                del rem[w]
        factors.append(mu)
    return DecompositionResult(sorted(factors), used)


def adjoint_multiplicity_in_tensor_square(rs: RootSystem, lam_min, p: int, overrides=None) -> int:
    res = decompose_by_subtraction(tensor_square_weights(rs, lam_min), p, overrides)
    return res.multiset()[adjoint_weight(rs)]


def named_rs(label: str) -> RootSystem:
    from .rootsys import parse_type
    return build_root_system(*parse_type(label))
