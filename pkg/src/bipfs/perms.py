"""Lehmer-code ranking of permutations and cached full permutation tables.

The dense component engine identifies each placement of 2r tokens on 2r
positions with its lexicographic rank among all (2r)! permutations.  Rank i
of n items is the usual factorial-base encoding: rank(p) =
sum_i L_i * (n-1-i)! with L_i = #{j > i : p_j < p_i}.

perm_table(n) materializes every permutation of 0..n-1 in lexicographic
(= rank) order as one uint8 array of shape (n!, n); row s is unrank(n, s).
The table for n = 10 is 36 MB and builds in well under a second, which is
what makes exhaustive sweeps over 10! placements practical.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["factorials", "perm_table", "rank_of", "unrank"]

_TABLES: dict[int, np.ndarray] = {}

_MAX_TABLE_N = 12  # 12! rows would be 2.3 GB; refuse beyond


def factorials(n: int) -> np.ndarray:
    """Array f with f[k] = k! for k = 0..n, as int64."""
    f = np.ones(n + 1, dtype=np.int64)
    for k in range(1, n + 1):
        f[k] = f[k - 1] * k
    return f


def perm_table(n: int) -> np.ndarray:
    """All permutations of 0..n-1 in lexicographic order, shape (n!, n).

    Built recursively: the block of permutations starting with symbol i is
    the table for n-1 relabeled over the remaining symbols, which are already
    sorted, so lexicographic order is preserved at every level.
    The result is cached and must be treated as read-only.
    """
    if not 1 <= n <= _MAX_TABLE_N:
        raise ValueError(f"permutation table supported for 1 <= n <= {_MAX_TABLE_N}, got {n}")
    cached = _TABLES.get(n)
    if cached is not None:
        return cached
    tbl = np.zeros((1, 1), dtype=np.uint8)
    for k in range(2, n + 1):
        m = tbl.shape[0]
        out = np.empty((m * k, k), dtype=np.uint8)
        symbols = np.arange(k, dtype=np.uint8)
        for i in range(k):
            rest = np.delete(symbols, i)
            out[i * m : (i + 1) * m, 0] = i
            out[i * m : (i + 1) * m, 1:] = rest[tbl]
        tbl = out
    tbl.setflags(write=False)
    _TABLES[n] = tbl
    return tbl


def rank_of(perm) -> int:
    """Lexicographic rank of a permutation of 0..n-1.

    >>> rank_of((0, 1, 2))
    0
    >>> rank_of((2, 1, 0))
    5
    """
    p = list(perm)
    n = len(p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm!r}")
    fact = math.factorial
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if p[j] < p[i])
        r += smaller * fact(n - 1 - i)
    return r


def unrank(n: int, rank: int) -> tuple[int, ...]:
    """Permutation of 0..n-1 with the given lexicographic rank.

    >>> unrank(3, 5)
    (2, 1, 0)
    >>> all(rank_of(unrank(4, r)) == r for r in range(24))
    True
    """
    total = math.factorial(n)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range for n={n}")
    avail = list(range(n))
    out = []
    f = total
    for i in range(n):
        f //= n - i
        idx, rank = divmod(rank, f)
        out.append(avail.pop(idx))
    return tuple(out)
