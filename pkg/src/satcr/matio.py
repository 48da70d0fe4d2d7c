"""Plain-text matrix files.

    GF p k
    rows cols
    e e e ...      (rows * cols entries, row-major)

Each entry is the coefficient tuple c0:c1:...:c(k-1) of the element over
the canonical basis 1, x, ..., x^(k-1); for k = 1 a bare integer is fine.
Several "rows cols" blocks may follow a single header to list generators.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .gf import GF, make_field


def _entry(F: GF, tok: str) -> int:
    parts = [int(c) for c in tok.split(":")]
    if len(parts) > F.k or any(not 0 <= c < F.p for c in parts):
        raise ValueError(f"bad field entry {tok!r} for GF({F.p}^{F.k})")
    return F.element(parts)


def parse_matrices(text: str) -> tuple[GF, list[np.ndarray]]:
    toks = text.split()
    if len(toks) < 3 or toks[0] != "GF":
        raise ValueError("matrix file must start with 'GF p k'")
    F = make_field(int(toks[1]), int(toks[2]))
    pos = 3
    mats = []
    while pos < len(toks):
        if toks[pos] == "GF":
            if (int(toks[pos + 1]), int(toks[pos + 2])) != (F.p, F.k):
                raise DimensionMismatch("all matrices in one file must share the field")
            pos += 3
            continue
        r, c = int(toks[pos]), int(toks[pos + 1])
        pos += 2
        body = toks[pos:pos + r * c]
        if len(body) != r * c:
            raise DimensionMismatch(f"expected {r * c} entries, found {len(body)}")
        mats.append(np.array([_entry(F, t) for t in body], dtype=np.int64).reshape(r, c))
        pos += r * c
    if not mats:
        raise ValueError("no matrices in file")
    return F, mats


def read_matrices(path: str) -> tuple[GF, list[np.ndarray]]:
    with open(path, encoding="ascii") as fh:
        return parse_matrices(fh.read())


def format_matrices(F: GF, mats) -> str:
    lines = [f"GF {F.p} {F.k}"]
    for M in mats:
        M = np.asarray(M)
        lines.append(f"{M.shape[0]} {M.shape[1]}")
        for row in M:
            lines.append(" ".join(F.format(x) for x in row))
    return "\n".join(lines) + "\n"


def matrix_json(F: GF, M) -> list[list[str]]:
    return [[F.format(x) for x in row] for row in np.asarray(M)]
