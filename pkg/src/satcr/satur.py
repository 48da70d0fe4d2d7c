"""Truncated log/exp for unipotent matrices of order p, t-th powers, BCH,
and the finite-field proxy of saturated closure.

The closure computed here lives inside GL_n(F) for a fixed finite field F
and uses t ranging over a chosen finite set T of scalars.  It is a finite
stand-in for the saturation of an algebraic group, never the thing itself.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CharTooSmall, DimensionMismatch, OrderTooLarge
from .gf import GF
from .group import ElementSet, MatGroup, default_cap, enumerate_group
from .linalg import mat_power


def _square(u):
    u = np.asarray(u, dtype=np.int64)
    if u.ndim < 2 or u.shape[-1] != u.shape[-2]:
        raise DimensionMismatch("expected square matrices")
    return u


def nilpotent_part(F: GF, u) -> np.ndarray:
    u = _square(u)
    return F.sub(u, F.eye(u.shape[-1]))


def _powers(F: GF, E, count: int) -> np.ndarray:
    """E^0 .. E^(count-1) stacked on a new axis just before the matrix axes."""
    n = E.shape[-1]
    out = [np.broadcast_to(F.eye(n), E.shape).copy()]
    for _ in range(count - 1):
        out.append(F.matmul(out[-1], E))
    return np.stack(out, axis=-3)


def is_order_p_unipotent(F: GF, u) -> np.ndarray:
    """Batched test of (u - 1)^p = 0."""
    E = nilpotent_part(F, u)
    return ~mat_power(F, E, F.p).reshape(E.shape[:-2] + (-1,)).any(axis=-1)


def _require_order_p(F: GF, E, what: str):
    if mat_power(F, E, F.p).any():
        raise OrderTooLarge(f"{what}: (u - 1)^p != 0, u is not unipotent of order p")


def _field_scalar(F: GF, frac: Fraction) -> int:
    if frac.denominator % F.p == 0:
        raise CharTooSmall(f"denominator {frac.denominator} vanishes mod {F.p}")
    return int(F.div(F.from_int(frac.numerator), F.from_int(frac.denominator)))


def _combine(F: GF, coeffs, mats) -> np.ndarray:
    """sum_i coeffs[..., i] * mats[..., i, :, :]."""
    return F.sum(F.mul(np.asarray(coeffs)[..., None, None], mats), axis=-3)


def log_coefficients(F: GF) -> np.ndarray:
    return np.array([0] + [_field_scalar(F, Fraction((-1) ** (i + 1), i)) for i in range(1, F.p)])


def exp_coefficients(F: GF) -> np.ndarray:
    out, f = [], 1
    for i in range(F.p):
        f *= max(i, 1)
        out.append(_field_scalar(F, Fraction(1, f)))
    return np.array(out)


def u_log(F: GF, u) -> np.ndarray:
    """log(1 + e) = sum_{i<p} (-1)^(i+1) e^i / i."""
    E = nilpotent_part(F, u)
    _require_order_p(F, E, "log")
    return _combine(F, log_coefficients(F), _powers(F, E, F.p))


def u_exp(F: GF, X) -> np.ndarray:
    """exp(X) = sum_{i<p} X^i / i!."""
    X = _square(X)
    if mat_power(F, X, F.p).any():
        raise OrderTooLarge("exp: X^p != 0")
    return _combine(F, exp_coefficients(F), _powers(F, X, F.p))


def binomial_coefficients(F: GF, t) -> np.ndarray:
    """binom(t, i) for i < p as field elements; t may be an array."""
    t = np.asarray(t, dtype=np.int64)
    out = [np.ones_like(t)]
    cur = np.ones_like(t)
    for i in range(1, F.p):
        cur = F.mul(cur, F.sub(t, F.from_int(i - 1)))
        cur = F.mul(cur, F.inv(F.from_int(i)))
        out.append(cur)
    return np.stack(out, axis=-1)


def t_power_binomial(F: GF, u, t) -> np.ndarray:
    """1 + t e + binom(t,2) e^2 + ... + binom(t,p-1) e^(p-1)."""
    E = nilpotent_part(F, u)
    return _combine(F, binomial_coefficients(F, t), _powers(F, E, F.p))


def t_power(F: GF, u, t) -> np.ndarray:
    """u^t, computed in binomial form and checked against exp(t log u)."""
    u = _square(u)
    E = nilpotent_part(F, u)
    _require_order_p(F, E, "t_power")
    a = t_power_binomial(F, u, t)
    b = u_exp(F, F.mul(np.int64(t), u_log(F, u)))
    if not np.array_equal(a, b):
        raise AssertionError("binomial and exp-log forms of u^t disagree")
    return a


def all_t_powers(F: GF, us, T) -> np.ndarray:
    """u^t for every u in the stack us and every t in T: shape (len(us), len(T), n, n).

    Callers guarantee the order-p condition.
    """
    us = _square(us)
    E = nilpotent_part(F, us)
    P = _powers(F, E, F.p)  # (m, p, n, n)
    C = binomial_coefficients(F, np.asarray(T))  # (|T|, p)
    return F.sum(F.mul(C[None, :, :, None, None], P[:, None]), axis=2)


# -- Baker-Campbell-Hausdorff ------------------------------------------------

@lru_cache(maxsize=None)
def bch_series(degree: int) -> dict[tuple[int, ...], Fraction]:
    """log(exp(x) exp(y)) in the free algebra on x=0, y=1, words up to degree."""

    def mul(a, b):
        out: dict = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                if len(wa) + len(wb) <= degree:
                    w = wa + wb
                    out[w] = out.get(w, 0) + ca * cb
        return {w: c for w, c in out.items() if c}

    def exp_of(letter):
        out, f = {(): Fraction(1)}, 1
        for k in range(1, degree + 1):
            f *= k
            out[(letter,) * k] = Fraction(1, f)
        return out

    Z = mul(exp_of(0), exp_of(1))
    Z.pop((), None)
    result: dict = {}
    power = {(): Fraction(1)}
    for k in range(1, degree + 1):
        power = mul(power, Z)
        for w, c in power.items():
            result[w] = result.get(w, 0) + Fraction((-1) ** (k + 1), k) * c
    return {w: c for w, c in result.items() if c}


def bch(F: GF, X, Y, check: bool = True) -> np.ndarray:
    """BCH product of nilpotents from a common flag (words of length n vanish)."""
    X, Y = _square(X), _square(Y)
    n = X.shape[0]
    if n > F.p:
        raise CharTooSmall(f"BCH needs n <= p (n={n}, p={F.p})")
    series = bch_series(max(n - 1, 1))
    mats = (X, Y)
    out = F.zeros((n, n))
    for w, c in series.items():
        M = F.eye(n)
        for letter in w:
            M = F.matmul(M, mats[letter])
        out = F.add(out, F.mul(_field_scalar(F, c), M))
    if check:
        direct = u_log(F, F.matmul(u_exp(F, X), u_exp(F, Y)))
        if not np.array_equal(direct, out):
            raise AssertionError("BCH series disagrees with log(exp X exp Y)")
    return out


def product_log_additivity(F: GF, blocks) -> bool:
    """log of a block-diagonal product equals the blockwise logs."""
    from .group import block_diag
    U = block_diag(F, *blocks)
    return bool(np.array_equal(u_log(F, U), block_diag(F, *[u_log(F, b) for b in blocks])))


# -- finite saturated closure ----------------------------------------------

def unipotents_of_order_p(F: GF, es: ElementSet) -> np.ndarray:
    n = es.mats.shape[-1]
    mask = is_order_p_unipotent(F, es.mats)
    mask &= (es.mats != F.eye(n)).reshape(len(es), -1).any(axis=1)
    return es.mats[mask]


def _missing_powers(F: GF, es: ElementSet, T, chunk: int = 4096) -> np.ndarray:
    us = unipotents_of_order_p(F, es)
    n = es.mats.shape[-1]
    found = []
    for s in range(0, len(us), chunk):
        pw = all_t_powers(F, us[s:s + chunk], T).reshape(-1, n, n)
        miss = pw[~es.contains(pw)]
        if len(miss):
            found.append(ElementSet.from_mats(F, miss).mats)
    if not found:
        return np.zeros((0, n, n), dtype=np.int64)
    return ElementSet.from_mats(F, np.concatenate(found)).mats


def f_saturated_closure(G: MatGroup, T, cap: int | None = None) -> MatGroup:
    """Smallest subgroup containing G closed under u -> u^t (u of order p, t in T)."""
    F = G.F
    cap = default_cap() if cap is None else cap
    T = np.asarray(T, dtype=np.int64)
    gens = list(G.gens)
    es = enumerate_group(F, gens, G.dim, cap)
    while True:
        extra = _missing_powers(F, es, T)
        if not len(extra):
            return MatGroup.from_elements(es)
        gens = gens + list(extra)
        es = enumerate_group(F, gens, G.dim, cap)


def is_f_saturated(G: MatGroup, T, cap: int | None = None) -> bool:
    es = G.elements(cap)
    return len(_missing_powers(G.F, es, np.asarray(T, dtype=np.int64))) == 0


def random_unipotent(F: GF, n: int, rng, conjugate: bool = True) -> np.ndarray:
    """1 + N with N strictly upper triangular, optionally conjugated by a random
    invertible matrix; of order p whenever n <= p."""
    from .linalg import det, inverse
    N = np.triu(F.random((n, n), rng), 1)
    u = F.add(F.eye(n), N)
    if not conjugate:
        return u
    while True:
        g = F.random((n, n), rng)
        if det(F, g):
            return F.matmul(F.matmul(g, u), inverse(F, g))


def strictly_upper_random(F: GF, n: int, rng) -> np.ndarray:
    return np.triu(F.random((n, n), rng), 1)
