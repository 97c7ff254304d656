"""Exact rank of rational matrices.

Rank modulo a prime never exceeds the rank over Q, so a mod-p computation that
already reaches a known upper bound is a proof of the exact rank.  Otherwise we
fall back to fraction-free (Bareiss) elimination over the integers.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

PRIME = 2_147_483_629  # below 2**31, so products fit in int64


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * den) for x in fr])
    return out


def rank_mod_p(rows: list[list[int]], p: int = PRIME) -> int:
    if not rows or not rows[0]:
        return 0
    a = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, col].copy()
        if below.any():
            a[rank + 1:] = (a[rank + 1:] - np.outer(below, a[rank]) % p) % p
        rank += 1
    return rank


def rank_bareiss(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col, ncols):
                row_r[c] = (pv * row_r[c] - f * row_p[c]) // prev
        prev = pv
        rank += 1
    return rank


def exact_rank(rows: Sequence[Sequence], upper: int | None = None) -> int:
    """Rank over Q of a matrix with rational entries.

    ``upper`` is an a priori bound on the rank (e.g. number of columns minus a
    known kernel dimension); reaching it mod p short-circuits the exact path.
    """
    ints = _integer_rows(rows)
    if not ints or not ints[0]:
        return 0
    bound = min(len(ints), len(ints[0]))
    if upper is not None:
        bound = min(bound, upper)
    if rank_mod_p(ints) >= bound:
        return bound
    return rank_bareiss(ints)
