"""Meataxe-style module analysis for matrix groups over finite fields.

Vectors are rows; a generator g acts on a row v as v @ g.T (that is, on
the column v.T).  Subspaces are stored as row-reduced bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import poly
from .errors import DimensionMismatch, Inconclusive
from .gf import GF
from .group import MatGroup, batch_inverse
from .linalg import complete_basis, inverse, kron, nullspace, rank, row_space, solve

MAX_TRIES = 64
# exhaustive seed spinning is allowed when the number of lines is below this
EXHAUSTIVE_LINES = 200_000


@dataclass
class Submodule:
    group: MatGroup
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    def is_invariant(self) -> bool:
        F = self.group.F
        if not self.dim:
            return True
        r = self.dim
        return all(rank(F, np.vstack([self.basis, F.matmul(self.basis, g.T)])) == r
                   for g in self.group.gens)


def _act(F: GF, gens, V) -> np.ndarray:
    return np.concatenate([F.matmul(V, g.T) for g in gens]) if gens else V[:0]


def spin(G: MatGroup, seeds) -> Submodule:
    """Smallest invariant subspace containing the seed vectors."""
    F, n = G.F, G.dim
    seeds = np.asarray(seeds, dtype=np.int64).reshape(-1, n)
    W = row_space(F, seeds) if seeds.size else np.zeros((0, n), dtype=np.int64)
    new = W
    while len(new):
        img = _act(F, G.gens, new)
        W2 = row_space(F, np.vstack([W, img]))
        if len(W2) == len(W):
            break
        new = W = W2
        if len(W) == n:
            break
    return Submodule(G, W)


def _random_algebra_element(G: MatGroup, rng) -> tuple[np.ndarray, list]:
    F, n = G.F, G.dim
    A = F.zeros((n, n))
    recipe = []
    for _ in range(int(rng.integers(1, 4))):
        length = int(rng.integers(1, 9))
        word = [int(i) for i in rng.integers(0, len(G.gens), size=length)]
        W = F.eye(n)
        for i in word:
            W = F.matmul(W, G.gens[i])
        c = int(F.random((), rng, nonzero=True))
        A = F.add(A, F.mul(c, W))
        recipe.append((c, word))
    return A, recipe


def _annihilator(F: GF, W) -> np.ndarray:
    """Rows x with w . x = 0 for every row w of W."""
    return row_space(F, nullspace(F, W))


@dataclass
class Certificate:
    kind: str
    detail: dict = field(default_factory=dict)


def find_proper_submodule(G: MatGroup, rng=None, exhaustive_lines: int = EXHAUSTIVE_LINES):
    """A proper nonzero invariant subspace, or (None, certificate)."""
    F, n = G.F, G.dim
    rng = np.random.default_rng(0) if rng is None else rng
    if n <= 1:
        return None, Certificate("dimension", {"dim": n})
    if not G.gens or all((g == F.eye(n)).all() for g in G.gens):
        return spin(G, F.eye(n)[:1]), None
    GT = G.transposed
    for attempt in range(MAX_TRIES):
        A, recipe = _random_algebra_element(G, rng)
        c = poly.charpoly(F, A)
        for f in poly.irreducible_factors_multiplicity_free(F, c):
            fA = poly.evaluate_matrix(F, f, A)
            N = nullspace(F, fA)
            v = N[int(rng.integers(0, len(N)))]
            S = spin(G, v)
            if S.dim < n:
                return S, None
            if len(N) != poly.deg(f):
                continue
            NT = nullspace(F, fA.T)
            w = NT[0]
            ST = spin(GT, w)
            if ST.dim < n:
                return Submodule(G, _annihilator(F, ST.basis)), None
            return None, Certificate("norton", {"word_recipe": recipe, "factor": f.tolist(),
                                                "attempt": attempt})
    lines = (F.q**n - 1) // (F.q - 1)
    if lines <= exhaustive_lines:
        return _exhaustive_search(G)
    raise Inconclusive(f"no conclusive Norton test after {MAX_TRIES} tries (dim {n}, q {F.q})")


def _projective_points(F: GF, n: int):
    """One representative (first nonzero entry 1) of every line of F^n."""
    for lead in range(n):
        rest = n - lead - 1
        count = F.q**rest
        idx = np.arange(count, dtype=np.int64)
        tail = (idx[:, None] // (F.q ** np.arange(rest, dtype=np.int64))) % F.q if rest else \
            np.zeros((count, 0), dtype=np.int64)
        V = np.zeros((count, n), dtype=np.int64)
        V[:, lead] = 1
        V[:, lead + 1:] = tail
        yield V


def _exhaustive_search(G: MatGroup):
    F, n = G.F, G.dim
    for block in _projective_points(F, n):
        for v in block:
            S = spin(G, v)
            if S.dim < n:
                return S, None
    return None, Certificate("exhaustive", {"lines": (F.q**n - 1) // (F.q - 1)})


def is_irreducible(G: MatGroup, rng=None) -> bool:
    return find_proper_submodule(G, rng)[0] is None


# -- splitting and semisimplicity ------------------------------------------

def adapted_blocks(G: MatGroup, W) -> tuple[np.ndarray, list, list, list]:
    """Basis P (columns: W first, then a completion) and the blocks
    A_g (on W), B_g (coupling), D_g (on V/W) of P^-1 g P."""
    F = G.F
    W = np.asarray(W, dtype=np.int64)
    m = len(W)
    B = complete_basis(F, W)
    P = B.T
    Pinv = inverse(F, P)
    As, Bs, Ds = [], [], []
    for g in G.gens:
        h = F.matmul(F.matmul(Pinv, g), P)
        if h[m:, :m].any():
            raise DimensionMismatch("subspace is not invariant")
        As.append(h[:m, :m])
        Bs.append(h[:m, m:])
        Ds.append(h[m:, m:])
    return P, As, Bs, Ds


def splits(sub: Submodule):
    """An invariant complement to sub, or None when the extension is non-split."""
    G = sub.group
    F, n = G.F, G.dim
    m = sub.dim
    if m in (0, n):
        return Submodule(G, F.eye(n)[m:] if m == 0 else np.zeros((0, n), dtype=np.int64))
    P, As, Bs, Ds = adapted_blocks(G, sub.basis)
    k = n - m
    # A X - X D = -B for each generator; vec is column-major
    rows, rhs = [], []
    Im, Ik = F.eye(m), F.eye(k)
    for A, Bg, D in zip(As, Bs, Ds):
        rows.append(F.sub(kron(F, Ik, A), kron(F, D.T, Im)))
        rhs.append(F.neg(Bg.T.reshape(-1)))
    if not rows:
        X = F.zeros((m, k))
    else:
        sol = solve(F, np.concatenate(rows), np.concatenate(rhs))
        if sol is None:
            return None
        X = sol[0].reshape(k, m).T
    section = np.vstack([X, Ik])  # columns in adapted coordinates
    comp = F.matmul(P, section).T
    out = Submodule(G, row_space(F, comp))
    assert out.dim == k and out.is_invariant()
    assert rank(F, np.vstack([sub.basis, out.basis])) == n
    return out


@dataclass
class SemisimpleResult:
    semisimple: bool
    summands: list[np.ndarray] = field(default_factory=list)
    nonsplit: tuple[np.ndarray, np.ndarray] | None = None

    def certificate(self, F: GF) -> dict:
        fmt = lambda M: [[F.format(x) for x in row] for row in M]  # noqa: E731
        if self.semisimple:
            return {"summands": [fmt(S) for S in self.summands]}
        sub, amb = self.nonsplit
        return {"nonsplit_submodule": fmt(sub), "ambient": fmt(amb)}


def _restrict(F: GF, gens, dim):
    return MatGroup(F, gens, dim, check=False)


def is_semisimple(G: MatGroup, rng=None) -> SemisimpleResult:
    """Recursive split test; certificate is a decomposition or a non-split pair."""
    rng = np.random.default_rng(0) if rng is None else rng
    F = G.F
    return _semisimple(G, F.eye(G.dim), rng)


def _semisimple(G: MatGroup, emb, rng) -> SemisimpleResult:
    F, n = G.F, G.dim
    if n == 0:
        return SemisimpleResult(True)
    W, _ = find_proper_submodule(G, rng)
    if W is None:
        return SemisimpleResult(True, [row_space(F, emb)])
    comp = splits(W)
    if comp is None:
        return SemisimpleResult(False, nonsplit=(row_space(F, F.matmul(W.basis, emb)), row_space(F, emb)))
    summands = []
    for S in (W, comp):
        P, As, _, _ = adapted_blocks(G, S.basis)
        sub = _restrict(F, As, S.dim)
        r = _semisimple(sub, F.matmul(S.basis, emb), rng)
        if not r.semisimple:
            return r
        summands += r.summands
    return SemisimpleResult(True, summands)


def composition_series(G: MatGroup, rng=None) -> list[np.ndarray]:
    """Strictly increasing invariant subspaces 0 < V_1 < ... < V with
    irreducible quotients, each as a row-reduced basis."""
    rng = np.random.default_rng(0) if rng is None else rng
    F = G.F
    return [row_space(F, S) for S in _series(G, F.eye(G.dim), rng)]


def _series(G: MatGroup, emb, rng) -> list[np.ndarray]:
    F, n = G.F, G.dim
    if n == 0:
        return []
    W, _ = find_proper_submodule(G, rng)
    if W is None:
        return [emb]
    P, As, _, Ds = adapted_blocks(G, W.basis)
    m = W.dim
    Wemb = F.matmul(W.basis, emb)
    lower = _series(_restrict(F, As, m), Wemb, rng)
    Cemb = F.matmul(P[:, m:].T, emb)
    upper = _series(_restrict(F, Ds, n - m), Cemb, rng)
    return lower + [np.vstack([Wemb, U]) for U in upper]


# -- constructions ----------------------------------------------------------

def conjugation_module(G: MatGroup) -> MatGroup:
    """Action X -> g X g^-1 on n x n matrices, flattened row-major."""
    F = G.F
    gens = [kron(F, g, inverse(F, g).T) for g in G.gens]
    return MatGroup(F, gens, G.dim**2, check=False)


def tensor_module(F: GF, gens_list) -> list[np.ndarray]:
    """Kronecker product of several representations given generator by generator."""
    out = []
    for parts in zip(*gens_list):
        M = parts[0]
        for P in parts[1:]:
            M = kron(F, M, P)
        out.append(M)
    return out


def traceless_subspace(F: GF, n: int) -> np.ndarray:
    """sl_n inside gl_n, vectors in row-major flattening."""
    rows = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = F.zeros(n * n)
                v[i * n + j] = 1
                rows.append(v)
    for i in range(n - 1):
        v = F.zeros(n * n)
        v[i * n + i] = 1
        v[(i + 1) * n + i + 1] = int(F.neg(1))
        rows.append(v)
    return row_space(F, np.array(rows))


def invariant_complement(G: MatGroup, sub) -> Submodule | None:
    """Conjugation-invariant complement of sub (rows of flattened matrices) in gl_n."""
    M = conjugation_module(G)
    S = Submodule(M, row_space(G.F, sub))
    if not S.is_invariant():
        raise DimensionMismatch("subspace is not conjugation-invariant")
    return splits(S)


def module_of_elements(F: GF, mats) -> MatGroup:
    mats = np.asarray(mats, dtype=np.int64)
    return MatGroup(F, list(mats), mats.shape[-1], check=False)


def inverse_gens(G: MatGroup) -> list[np.ndarray]:
    return list(batch_inverse(G.F, np.array(G.gens)))
