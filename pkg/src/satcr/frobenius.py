"""Matrix-realised Steinberg endomorphisms and their fixed-point subgroups."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch
from .gf import GF, frobenius_power
from .group import ElementSet, MatGroup, batch_inverse, block_diag, elementary
from .linalg import inverse
from .satur import f_saturated_closure, random_unipotent, t_power

KINDS = ("standard", "conj", "transpose_inverse_conj", "block_permutation",
         "blockwise", "identity", "composite")


@dataclass(frozen=True)
class Endo:
    """A group endomorphism of GL_n(F) given by a recipe.

    kind        parameters
    standard    q: entries raised to the q-th power
    conj        A: g -> A g A^-1
    transpose_inverse_conj
                A: g -> A (g^T)^-1 A^-1
    block_permutation
                perm, block: output block i is input block perm[i]
    blockwise   parts, block: one endomorphism per diagonal block
    identity    (none)
    composite   parts: applied left to right
    """

    kind: str
    q: int = 0
    A: tuple | None = None
    perm: tuple[int, ...] = ()
    block: int = 0
    parts: tuple["Endo", ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown endomorphism kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "standard":
            return f"sigma_{self.q}"
        if self.kind in ("composite", "blockwise"):
            return f"{self.kind}(" + ", ".join(p.describe() for p in self.parts) + ")"
        if self.kind == "block_permutation":
            return f"pi{list(self.perm)}"
        return self.kind


def standard(q: int) -> Endo:
    return Endo("standard", q=q)


def conj(A) -> Endo:
    return Endo("conj", A=_freeze(A))


def transpose_inverse_conj(A) -> Endo:
    return Endo("transpose_inverse_conj", A=_freeze(A))


def block_permutation(perm, block: int) -> Endo:
    return Endo("block_permutation", perm=tuple(perm), block=block)


def blockwise(parts, block: int) -> Endo:
    return Endo("blockwise", parts=tuple(parts), block=block)


def identity() -> Endo:
    return Endo("identity")


def composite(parts) -> Endo:
    return Endo("composite", parts=tuple(parts))


def _freeze(A):
    return tuple(tuple(int(x) for x in row) for row in np.asarray(A))


def antidiagonal(F: GF, n: int) -> np.ndarray:
    return np.fliplr(F.eye(n)).copy()


def unitary_twist(F: GF, n: int, q: int) -> Endo:
    """g -> sigma_q(n0 (g^T)^-1 n0^-1) with n0 the antidiagonal permutation."""
    return composite([transpose_inverse_conj(antidiagonal(F, n)), standard(q)])


def apply(F: GF, e: Endo, g) -> np.ndarray:
    """Image of a matrix (or a stack of matrices) under e."""
    g = np.asarray(g, dtype=np.int64)
    if g.ndim < 2 or g.shape[-1] != g.shape[-2]:
        raise DimensionMismatch("expected square matrices")
    n = g.shape[-1]
    k = e.kind
    if k == "identity":
        return g.copy()
    if k == "standard":
        return frobenius_power(F, g, e.q)
    if k in ("conj", "transpose_inverse_conj"):
        A = np.array(e.A, dtype=np.int64)
        if A.shape != (n, n):
            raise DimensionMismatch("conjugating matrix has the wrong size")
        h = g
        if k == "transpose_inverse_conj":
            h = np.swapaxes(batch_inverse(F, g) if g.ndim > 2 else inverse(F, g), -1, -2)
        return F.matmul(F.matmul(A, h), inverse(F, A))
    if k == "composite":
        for part in e.parts:
            g = apply(F, part, g)
        return g
    b = e.block
    r = n // b if b else 0
    if not b or r * b != n:
        raise DimensionMismatch("block size does not divide the dimension")
    if k == "block_permutation":
        if sorted(e.perm) != list(range(r)):
            raise DimensionMismatch("permutation does not match the block count")
        out = np.zeros_like(g)
        # block (i, i2) of the image is block (perm[i], perm[i2]) of g
        for i, j in enumerate(e.perm):
            for i2, j2 in enumerate(e.perm):
                out[..., i * b:(i + 1) * b, i2 * b:(i2 + 1) * b] = \
                    g[..., j * b:(j + 1) * b, j2 * b:(j2 + 1) * b]
        return out
    if k == "blockwise":
        if len(e.parts) != r:
            raise DimensionMismatch("one endomorphism per block is required")
        off = g.copy()
        for i in range(r):
            off[..., i * b:(i + 1) * b, i * b:(i + 1) * b] = 0
        if off.any():
            raise DimensionMismatch("blockwise endomorphism needs block-diagonal input")
        out = np.zeros_like(g)
        for i, part in enumerate(e.parts):
            sl = (..., slice(i * b, (i + 1) * b), slice(i * b, (i + 1) * b))
            out[sl] = apply(F, part, g[sl])
        return out
    raise AssertionError(k)


@dataclass
class FixedPointGroup:
    group: MatGroup
    endo: Endo

    @property
    def order(self) -> int:
        return len(self.group.elements())


def fixed_points(G: MatGroup, e: Endo, cap: int | None = None, verify: bool = True) -> FixedPointGroup:
    """{g in G : e(g) = g} by enumeration."""
    F = G.F
    es = G.elements(cap)
    img = apply(F, e, es.mats)
    keep = (img == es.mats).reshape(len(es), -1).all(axis=1)
    fixed = ElementSet.from_mats(F, es.mats[keep])
    if verify:
        _verify_closed(F, fixed)
    return FixedPointGroup(MatGroup.from_elements(fixed), e)


def _verify_closed(F: GF, es: ElementSet, sample: int = 2000) -> None:
    m = len(es)
    if m * m <= 4 * 10**5:
        prods = F.matmul(es.mats[:, None], es.mats[None, :]).reshape(-1, *es.mats.shape[1:])
    else:
        rng = np.random.default_rng(0)
        i, j = rng.integers(0, m, size=(2, sample))
        prods = F.matmul(es.mats[i], es.mats[j])
    if not es.contains(prods).all():
        raise AssertionError("fixed-point set is not closed under multiplication")


def diagonal_blocks(F: GF, mats, block: int) -> list[np.ndarray]:
    n = mats.shape[-1]
    return [mats[..., i:i + block, i:i + block] for i in range(0, n, block)]


# -- compatibility checks ----------------------------------------------------

@dataclass
class Report:
    name: str
    passed: bool
    trials: int = 0
    failures: list = field(default_factory=list)


def check_frobsat(F: GF, q: int, n: int, samples: int, rng, twisted: bool = False) -> Report:
    """sigma(u^t) = sigma(u)^(t^q) for random order-p unipotents u and scalars t."""
    if n > F.p:
        raise DimensionMismatch("needs n <= p")
    e = unitary_twist(F, n, q) if twisted else standard(q)
    fails = []
    for _ in range(samples):
        u = random_unipotent(F, n, rng)
        t = int(F.random((), rng))
        lhs = apply(F, e, t_power(F, u, t))
        rhs = t_power(F, apply(F, e, u), int(frobenius_power(F, t, q)))
        if not np.array_equal(lhs, rhs):
            fails.append((u.tolist(), t))
    return Report(f"frobsat q={q} n={n}{' twisted' if twisted else ''}", not fails, samples, fails)


def sigma_stability_of_closure(G: MatGroup, e: Endo, T, cap: int | None = None) -> Report:
    """e maps the F-saturated closure onto itself."""
    C = f_saturated_closure(G, T, cap)
    es = C.elements()
    img = apply(G.F, e, es.mats)
    ok = bool(es.contains(img).all()) and len(ElementSet.from_mats(G.F, img)) == len(es)
    return Report("sigma-stability of closure", ok, len(es))


def nori_closure_check(F_ext: GF, q: int) -> Report:
    """Each x_12(t), x_21(t) with t in F_ext is a t-power of x_12(1), x_21(1) in SL_2(q)."""
    fails = []
    ts = F_ext.elements()
    for (i, j) in ((0, 1), (1, 0)):
        base = elementary(F_ext, 2, i, j, 1)
        for t in ts:
            if not np.array_equal(t_power(F_ext, base, int(t)), elementary(F_ext, 2, i, j, int(t))):
                fails.append(((i, j), int(t)))
    return Report(f"nori SL2({q}) -> SL2({F_ext.q})", not fails, 2 * len(ts), fails)


def pair_group(F: GF, gens2) -> MatGroup:
    """SL_2 x SL_2 style product from generators of each factor."""
    n = gens2[0].shape[0]
    I = F.eye(n)
    gens = [block_diag(F, g, I) for g in gens2] + [block_diag(F, I, g) for g in gens2]
    return MatGroup(F, gens, 2 * n)
