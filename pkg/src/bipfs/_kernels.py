"""Compiled inner loops for exhaustive sweeps over permutation tables.

Everything here takes plain ndarrays so numba can compile it once and cache
the result on disk.  P is a lexicographic permutation table from
bipfs.perms.perm_table (row index == rank), ea/eb are the endpoints of the
position-graph edges as absolute indices, yadj is the 2r x 2r uint8 adjacency
matrix of the token graph, and fact[k] = k!.

The union-find sweep visits every placement once and, for each legal swap,
ranks the neighbouring placement directly with the O(n^2) Lehmer sum instead
of materializing it, so the whole reachability structure on n! states needs
no queue and no hashing.  Each undirected FS edge is discovered from both of
its endpoints; the second union is a no-op.
"""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = ["union_sweep", "isolated_scan", "isolated_count"]


@njit(cache=True)
def union_sweep(P, ea, eb, yadj, fact):  # pragma: no cover - compiled
    """Union-find over all rows of P; returns fully compressed parent array.

    Rows s and t are joined whenever the placements differ by one swap that
    is an edge of the position graph (ea/eb) carrying tokens adjacent in the
    token graph (yadj).
    """
    N, n = P.shape
    parent = np.arange(N, dtype=np.int64)
    size = np.ones(N, dtype=np.int64)
    buf = np.empty(n, dtype=np.uint8)
    nE = ea.shape[0]
    for s in range(N):
        for e in range(nE):
            a = ea[e]
            b = eb[e]
            u = P[s, a]
            v = P[s, b]
            if yadj[u, v] == 0:
                continue
            for i in range(n):
                buf[i] = P[s, i]
            buf[a] = v
            buf[b] = u
            t = np.int64(0)
            for i in range(n):
                c = np.int64(0)
                bi = buf[i]
                for j in range(i + 1, n):
                    if buf[j] < bi:
                        c += 1
                t += c * fact[n - 1 - i]
            rx = s
            while parent[rx] != rx:
                parent[rx] = parent[parent[rx]]
                rx = parent[rx]
            ry = t
            while parent[ry] != ry:
                parent[ry] = parent[parent[ry]]
                ry = parent[ry]
            if rx != ry:
                if size[rx] < size[ry]:
                    rx, ry = ry, rx
                parent[ry] = rx
                size[rx] += size[ry]
    for i in range(N):
        root = i
        while parent[root] != root:
            root = parent[root]
        j = i
        while parent[j] != root:
            nxt = parent[j]
            parent[j] = root
            j = nxt
    return parent


@njit(cache=True)
def isolated_scan(P, ea, eb, yadj, start, stop):  # pragma: no cover - compiled
    """First row index in [start, stop) with no legal swap at all, else -1."""
    nE = ea.shape[0]
    for s in range(start, stop):
        found = False
        for e in range(nE):
            u = P[s, ea[e]]
            v = P[s, eb[e]]
            if yadj[u, v] != 0:
                found = True
                break
        if not found:
            return s
    return -1


@njit(cache=True)
def isolated_count(P, ea, eb, yadj):  # pragma: no cover - compiled
    """Number of rows of P admitting no legal swap."""
    N = P.shape[0]
    nE = ea.shape[0]
    total = 0
    for s in range(N):
        found = False
        for e in range(nE):
            u = P[s, ea[e]]
            v = P[s, eb[e]]
            if yadj[u, v] != 0:
                found = True
                break
        if not found:
            total += 1
    return total
