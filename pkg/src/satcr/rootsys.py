"""Root systems of simple types and the numeric invariants d, a, h, h~, e.

Roots are integer coefficient vectors over the simple roots.  Simple roots
are numbered as in Bourbaki except for G2, where alpha_1 is the long root so
that the 7-dimensional module has highest weight lambda_2 and the adjoint
module has highest weight lambda_1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import InvalidTypeRank
from .gf import prime_factors

VALID_MIN = {"A": 1, "B": 2, "C": 2, "D": 4}
EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def check_type(typ: str, rank: int) -> None:
    typ = typ.upper()
    if typ in VALID_MIN:
        ok = rank >= VALID_MIN[typ]
    elif typ in EXCEPTIONAL:
        ok = rank in EXCEPTIONAL[typ]
    else:
        ok = False
    if not ok:
        raise InvalidTypeRank(f"no simple type {typ}{rank}")


def parse_type(label: str) -> tuple[str, int]:
    """'E8' -> ('E', 8); 'T1' -> ('T', 1) for a rank-one torus."""
    m = re.fullmatch(r"\s*([A-Ga-gTt])\s*_?\s*(\d+)\s*", label)
    if not m:
        raise InvalidTypeRank(f"cannot parse type label {label!r}")
    typ, rank = m.group(1).upper(), int(m.group(2))
    if typ != "T":
        check_type(typ, rank)
    return typ, rank


def parse_types(label: str) -> list[tuple[str, int]]:
    """'A1xA1' or 'A1*B3' -> list of components; tori are dropped."""
    parts = [s for s in re.split(r"[x*×,+ ]+", label.strip()) if s]
    comps = [parse_type(s) for s in parts]
    return [c for c in comps if c[0] != "T"]


def simple_root_gram(typ: str, n: int) -> np.ndarray:
    """Integer Gram matrix (alpha_i, alpha_j); short roots have square length 2."""
    check_type(typ, n)
    S = np.zeros((n, n), dtype=np.int64)

    def link(i, j, v):
        S[i - 1, j - 1] = S[j - 1, i - 1] = v

    if typ == "A":
        np.fill_diagonal(S, 2)
        for i in range(1, n):
            link(i, i + 1, -1)
    elif typ == "B":
        np.fill_diagonal(S, 4)
        S[n - 1, n - 1] = 2
        for i in range(1, n):
            link(i, i + 1, -2)
    elif typ == "C":
        np.fill_diagonal(S, 2)
        S[n - 1, n - 1] = 4
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif typ == "D":
        np.fill_diagonal(S, 2)
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 2, n, -1)
    elif typ == "E":
        np.fill_diagonal(S, 2)
        link(1, 3, -1)
        link(2, 4, -1)
        for i in range(3, n):
            link(i, i + 1, -1)
    elif typ == "F":
        S[:] = np.diag([4, 4, 2, 2])
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif typ == "G":
        S[:] = np.diag([6, 2])
        link(1, 2, -3)
    return S


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int
    gram: np.ndarray = field(repr=False, compare=False)
    cartan: np.ndarray = field(repr=False, compare=False)
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    @cached_property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots followed by their negatives."""
        return self.positive_roots + tuple(tuple(-c for c in r) for r in self.positive_roots)

    @cached_property
    def root_index(self) -> dict[tuple[int, ...], int]:
        return {r: i for i, r in enumerate(self.roots)}

    @property
    def dim(self) -> int:
        return len(self.roots) + self.rank

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    def inner(self, a, b) -> int:
        return int(np.asarray(a) @ self.gram @ np.asarray(b))

    def norm2(self, a) -> int:
        return self.inner(a, a)

    def coroot_pairing(self, beta, i: int) -> int:
        """<beta, alpha_i^vee> for beta in root coordinates."""
        return int(2 * self.inner(beta, self.simple_roots[i]) // self.gram[i, i])

    def to_weight(self, beta) -> tuple[int, ...]:
        """Root coordinates -> fundamental-weight coordinates."""
        return tuple(int(x) for x in self.cartan @ np.asarray(beta, dtype=np.int64))

    def coroot_coeffs(self, beta) -> tuple[int, ...]:
        """Coefficients of beta^vee over the simple coroots."""
        n2 = self.norm2(beta)
        out = []
        for i, c in enumerate(beta):
            num = c * int(self.gram[i, i])
            if num % n2:
                raise AssertionError("coroot coefficients must be integral")
            out.append(num // n2)
        return tuple(out)

    def is_root(self, beta) -> bool:
        return tuple(beta) in self.root_index

    def height(self, beta) -> int:
        return int(sum(beta))


@lru_cache(maxsize=None)
def build_root_system(typ: str, rank: int) -> RootSystem:
    """Positive roots by the root-string algorithm, sorted by height then lexicographically."""
    typ = typ.upper()
    S = simple_root_gram(typ, rank)
    A = 2 * S // np.diag(S)[:, None]
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            b = np.array(beta)
            for i in range(rank):
                # beta - p alpha_i ... beta + q alpha_i, with p - q = <beta, alpha_i^vee>
                p_ = 0
                while True:
                    c = list(beta)
                    c[i] -= p_ + 1
                    if tuple(c) in found:
                        p_ += 1
                    else:
                        break
                q_ = p_ - int(A[i] @ b)
                if q_ > 0:
                    c = list(beta)
                    c[i] += 1
                    c = tuple(c)
                    if c not in found:
                        found.add(c)
                        nxt.append(c)
        layer = nxt
    pos = tuple(sorted(found, key=lambda r: (sum(r), r)))
    return RootSystem(typ, rank, S, A, pos)


def positive_root_count(typ: str, n: int) -> int:
    """Closed-form |Phi+|."""
    return {
        "A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0), "F": 24, "G": 6,
    }[typ]


def bad_primes(rs: RootSystem) -> set[int]:
    out: set[int] = set()
    for beta in rs.positive_roots:
        for c in beta:
            if c > 1:
                out.update(prime_factors(c))
    return out


def is_good(rs: RootSystem, p: int) -> bool:
    return p not in bad_primes(rs)


def is_very_good(rs: RootSystem, p: int) -> bool:
    if not is_good(rs, p):
        return False
    return not (rs.type == "A" and (rs.rank + 1) % p == 0)


# -- tabulated invariants --------------------------------------------------

def d_simple(typ: str, n: int) -> int:
    check_type(typ, n)
    if typ == "B" and n == 2:
        typ = "C"  # B2 = C2: the 4-dimensional symplectic module is minimal
    return {
        "A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n,
        "E": {6: 27, 7: 56, 8: 248}.get(n), "F": 26, "G": 7,
    }[typ]


def h_simple(typ: str, n: int) -> int:
    check_type(typ, n)
    return {
        "A": n + 1, "B": 2 * n, "C": 2 * n, "D": 2 * n - 2,
        "E": {6: 12, 7: 18, 8: 30}.get(n), "F": 12, "G": 6,
    }[typ]


def e_simple(typ: str, n: int) -> int | None:
    """e(G) for classical types; None (not applicable) for exceptional types."""
    check_type(typ, n)
    return {"A": 2, "B": 2 * n - 1, "C": n + 1, "D": n - 1}.get(typ)


@dataclass(frozen=True)
class GroupInvariants:
    d: int
    a: int
    h: int
    h_tilde: int
    e: int | None
    bad_primes: frozenset[int]
    simply_connected: bool = True

    def as_dict(self) -> dict:
        out = {"d": self.d, "a": self.a, "h": self.h, "h_tilde": self.h_tilde,
               "bad_primes": sorted(self.bad_primes)}
        if self.e is not None:
            out["e"] = self.e
        return out


def invariants(types, simply_connected: bool = True) -> GroupInvariants:
    """Invariants of a product of simple types; an empty product is a torus.

    e is reported only for a single classical component.
    """
    comps = []
    for typ, n in types:
        typ = typ.upper()
        if typ == "T":
            continue
        check_type(typ, n)
        comps.append((typ, n))
    d = max([1] + [d_simple(t, n) for t, n in comps])
    a = max([1] + [n + 1 for _, n in comps])
    h = max([1] + [h_simple(t, n) for t, n in comps])
    e = e_simple(*comps[0]) if len(comps) == 1 else None
    bad: set[int] = set()
    for t, n in comps:
        bad |= bad_primes(build_root_system(t, n))
    h_tilde = h if simply_connected or not comps else h + 1
    return GroupInvariants(d, a, h, h_tilde, e, frozenset(bad), simply_connected)


def check_h_identity(rs: RootSystem) -> bool:
    """h + 1 == dim / rank."""
    h = h_simple(rs.type, rs.rank)
    return (h + 1) * rs.rank == rs.dim


def all_types(max_rank: int = 8):
    """Every valid (type, rank) with rank <= max_rank."""
    out = []
    for t, lo in VALID_MIN.items():
        out += [(t, n) for n in range(lo, max_rank + 1)]
    for t, ranks in EXCEPTIONAL.items():
        out += [(t, n) for n in ranks if n <= max_rank]
    return out
