"""Exact operations on friends-and-strangers graphs over bipartite hosts.

For bipartite graphs X and Y on the same vertex count 2r, the state space is
the set of all (2r)! bijections from V(X) (positions) to V(Y) (tokens).  Two
states are adjacent when they differ by one swap exchanging the tokens u, v
sitting on positions a, b with {a, b} an edge of X and {u, v} an edge of Y.

fs_component_count sweeps the whole state space with a compiled union-find
and reports every component size exactly.  exchangeable answers single-pair
reachability questions without touching the full table, via bidirectional
breadth-first search, and returns an explicit swap sequence as its witness.

Each legal swap moves one token between the two sides of Y and changes the
permutation's inversion parity, so the sum

    parity_class = (#inversions + #(side-A tokens on side-A positions)) mod 2

is invariant on components.  It splits the state space into two halves and is
why these graphs are never connected: component counts start at 2, and the
structural results pin down exactly when 2 is achieved.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .bigraph import BiGraph
from .perms import factorials, perm_table

__all__ = [
    "Bijection",
    "FsReport",
    "ExchangeResult",
    "IsolatedSearch",
    "swap_legal",
    "apply_swap",
    "parity_class",
    "fs_component_count",
    "exchangeable",
    "count_isolated_states",
    "DENSE_CAP",
]

# Largest 2r for which full-table sweeps are allowed: 10! rows * 10 bytes
# is 36 MB, 12! would be 5.7 GB.
DENSE_CAP = 10


class Bijection:
    """An assignment of tokens to positions, both labelled 0..n-1.

    place[a] is the token on position a; pos[t] is the position of token t.
    Instances are immutable and hashable.
    """

    __slots__ = ("place", "pos")

    def __init__(self, place: Iterable[int]):
        p = tuple(int(v) for v in place)
        n = len(p)
        if sorted(p) != list(range(n)):
            raise ValueError(f"place is not a permutation of 0..{n - 1}: {p!r}")
        inv = [0] * n
        for a, t in enumerate(p):
            inv[t] = a
        object.__setattr__(self, "place", p)
        object.__setattr__(self, "pos", tuple(inv))

    def __setattr__(self, *_):
        raise AttributeError("Bijection is immutable")

    @staticmethod
    def identity(n: int) -> "Bijection":
        return Bijection(range(n))

    @property
    def n(self) -> int:
        return len(self.place)

    def __eq__(self, other) -> bool:
        return isinstance(other, Bijection) and self.place == other.place

    def __hash__(self) -> int:
        return hash(self.place)

    def __repr__(self) -> str:
        return f"Bijection({list(self.place)!r})"


def swap_legal(x: BiGraph, y: BiGraph, b: Bijection, u: int, v: int) -> bool:
    """True when tokens u and v may trade places: their current positions are
    adjacent in x and the tokens themselves are adjacent in y."""
    _check_pair(x, y, b)
    return y.has_edge(u, v) and x.has_edge(b.pos[u], b.pos[v])


def apply_swap(b: Bijection, u: int, v: int) -> Bijection:
    """New state with tokens u and v traded; legality is the caller's concern."""
    pu, pv = b.pos[u], b.pos[v]
    place = list(b.place)
    place[pu], place[pv] = v, u
    return Bijection(place)


def parity_class(r: int, b: Bijection) -> int:
    """Component-level invariant: inversion count of the placement plus the
    number of side-A tokens (< r) on side-A positions (< r), mod 2."""
    p = b.place
    n = len(p)
    if n != 2 * r:
        raise ValueError(f"state has {n} positions, expected {2 * r}")
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[j] < p[i])
    on_a = sum(1 for a in range(r) if p[a] < r)
    return (inv + on_a) % 2


@dataclass
class FsReport:
    """Exact census of one friends-and-strangers state space.

    component_sizes maps a size to how many components have it, so the
    multiset stays small even when nearly every state is isolated.
    """

    r: int
    component_count: int
    component_sizes: dict[int, int]
    parity_split: tuple[int, int]
    states_explored: int

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "component_count": self.component_count,
            "component_sizes": {str(k): v for k, v in sorted(self.component_sizes.items())},
            "parity_split": list(self.parity_split),
            "states_explored": self.states_explored,
        }


def _check_pair(x: BiGraph, y: BiGraph, b: Optional[Bijection] = None) -> None:
    if x.r != y.r:
        raise ValueError(f"position graph has r={x.r} but token graph has r={y.r}")
    if b is not None and b.n != x.n:
        raise ValueError(f"state has {b.n} positions for graphs on {x.n} vertices")


def _edge_arrays(x: BiGraph) -> tuple[np.ndarray, np.ndarray]:
    edges = x.edges()
    ea = np.fromiter((e[0] for e in edges), dtype=np.int64, count=len(edges))
    eb = np.fromiter((e[1] for e in edges), dtype=np.int64, count=len(edges))
    return ea, eb


def parity_classes_of_table(P: np.ndarray, r: int) -> np.ndarray:
    """Vectorized parity_class over every row of a permutation table."""
    N, n = P.shape
    cls = np.zeros(N, dtype=bool)
    for i in range(n):
        col = P[:, i]
        for j in range(i + 1, n):
            cls ^= P[:, j] < col
    cls ^= (P[:, :r] < r).sum(axis=1, dtype=np.int64) % 2 == 1
    return cls


def fs_component_count(x: BiGraph, y: BiGraph, cap: int = DENSE_CAP) -> FsReport:
    """Exhaustive component census of FS(x, y).

    Enumerates all (2r)! states through the shared lexicographic permutation
    table and merges across legal swaps with a compiled union-find.  Refuses
    to run when 2r exceeds cap, because table size grows factorially.
    """
    from ._kernels import union_sweep

    _check_pair(x, y)
    n = x.n
    if n > cap:
        need = math.factorial(n) * n / 2**30
        raise ValueError(
            f"dense sweep over {n}! states needs about {need:.1f} GiB of table; "
            f"2r = {n} exceeds cap = {cap}"
        )
    P = perm_table(n)
    ea, eb = _edge_arrays(x)
    yadj = y.adjacency_matrix()
    parent = union_sweep(P, ea, eb, yadj, factorials(n))
    counts = np.bincount(parent)
    sizes = counts[counts > 0]
    size_hist: dict[int, int] = {}
    for s in np.unique(sizes):
        size_hist[int(s)] = int((sizes == s).sum())
    return FsReport(
        r=x.r,
        component_count=int(len(sizes)),
        component_sizes=size_hist,
        parity_split=_parity_split(n, x.r),
        states_explored=int(P.shape[0]),
    )


@functools.lru_cache(maxsize=None)
def _parity_split(n: int, r: int) -> tuple[int, int]:
    # the split depends only on the shared table, not on the graphs
    cls = parity_classes_of_table(perm_table(n), r)
    odd = int(cls.sum())
    return (int(cls.shape[0]) - odd, odd)


@dataclass
class ExchangeResult:
    """Outcome of a single-pair reachability query.

    status is "exchangeable", "not_exchangeable", or "inconclusive" (budget
    ran out before either side's frontier was exhausted).  On success,
    witness is the swap sequence as (token, token) pairs, applicable from the
    queried state.
    """

    status: str
    witness: Optional[list[tuple[int, int]]]
    states_explored: int

    @property
    def decided(self) -> bool:
        return self.status != "inconclusive"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": None if self.witness is None else [list(p) for p in self.witness],
            "states_explored": self.states_explored,
        }


def _legal_neighbors(place: tuple[int, ...], xedges, ybits) -> Iterable[tuple[tuple[int, ...], tuple[int, int]]]:
    for a, b in xedges:
        u = place[a]
        v = place[b]
        if (ybits[u] >> v) & 1:
            nxt = list(place)
            nxt[a] = v
            nxt[b] = u
            yield tuple(nxt), (u, v)


def exchangeable(
    x: BiGraph,
    y: BiGraph,
    b: Bijection,
    u: int,
    v: int,
    budget: int = 2_000_000,
) -> ExchangeResult:
    """Can tokens u and v trade places, all others returning home?

    Runs breadth-first search from the state and from its target
    simultaneously, expanding the smaller frontier one full level at a time,
    so a returned witness is a shortest exchange sequence.  A definitive
    "not_exchangeable" means one side's component was exhausted; budget only
    ever produces "inconclusive".
    """
    _check_pair(x, y, b)
    n = x.n
    if not (0 <= u < n and 0 <= v < n) or u == v:
        raise ValueError(f"tokens must be distinct labels in 0..{n - 1}, got {u}, {v}")
    xedges = x.edges()
    ybits = [0] * n
    for t in range(n):
        for w in y.neighbors(t):
            ybits[t] |= 1 << w

    start = b.place
    goal = apply_swap(b, u, v).place

    # parents[side][state] = (previous state, swap applied *forward* along
    # the side's own growth direction)
    seen = ({start: None}, {goal: None})
    frontier: list[list[tuple[int, ...]]] = [[start], [goal]]
    explored = 2

    def rebuild(meet: tuple[int, ...]) -> list[tuple[int, int]]:
        fwd = []
        s = meet
        while seen[0][s] is not None:
            prev, swap = seen[0][s]
            fwd.append(swap)
            s = prev
        fwd.reverse()
        back = []
        s = meet
        while seen[1][s] is not None:
            prev, swap = seen[1][s]
            back.append(swap)
            s = prev
        return fwd + back

    while frontier[0] and frontier[1]:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        other = 1 - side
        nxt_level: list[tuple[int, ...]] = []
        meet = None
        for state in frontier[side]:
            for nstate, swap in _legal_neighbors(state, xedges, ybits):
                if nstate in seen[side]:
                    continue
                seen[side][nstate] = (state, swap)
                nxt_level.append(nstate)
                explored += 1
                if nstate in seen[other]:
                    meet = nstate
                    break
            if meet is not None:
                break
        if meet is not None:
            witness = rebuild(meet)
            chk = b
            for p, q in witness:
                assert swap_legal(x, y, chk, p, q)
                chk = apply_swap(chk, p, q)
            assert chk.place == goal
            return ExchangeResult("exchangeable", witness, explored)
        frontier[side] = nxt_level
        if explored > budget:
            return ExchangeResult("inconclusive", None, explored)
    return ExchangeResult("not_exchangeable", None, explored)


@dataclass
class IsolatedSearch:
    """Result of hunting for a state with no legal swap at all."""

    found: bool
    witness: Optional[Bijection]
    states_checked: int
    exhaustive: bool
    isolated_total: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "witness": None if self.witness is None else list(self.witness.place),
            "states_checked": self.states_checked,
            "exhaustive": self.exhaustive,
            "isolated_total": self.isolated_total,
        }


def count_isolated_states(
    x: BiGraph,
    y: BiGraph,
    budget: int = 200_000,
    seed=None,
    count_all: bool = False,
    cap: int = DENSE_CAP,
) -> IsolatedSearch:
    """Search for placements admitting no legal swap.

    Runs exhaustively over the permutation table when 2r <= cap (and then
    the answer is definitive; with count_all the exact number of isolated
    states is reported too).  Larger instances fall back to seeded uniform
    sampling of `budget` placements, which can only ever confirm existence.
    """
    from ._kernels import isolated_count, isolated_scan

    _check_pair(x, y)
    n = x.n
    ea, eb = _edge_arrays(x)
    yadj = y.adjacency_matrix()
    if n <= cap:
        P = perm_table(n)
        N = P.shape[0]
        hit = int(isolated_scan(P, ea, eb, yadj, 0, N))
        total = int(isolated_count(P, ea, eb, yadj)) if count_all else None
        if hit < 0:
            return IsolatedSearch(False, None, N, True, 0 if count_all else None)
        return IsolatedSearch(True, Bijection(P[hit]), N, True, total)

    # batches reuse the table-scanning kernel on freshly shuffled rows
    rng = np.random.Generator(np.random.PCG64(seed))
    checked = 0
    while checked < budget:
        take = min(4096, budget - checked)
        block = np.tile(np.arange(n, dtype=np.uint8), (take, 1))
        block = rng.permuted(block, axis=1)
        hit = int(isolated_scan(block, ea, eb, yadj, 0, take))
        if hit >= 0:
            return IsolatedSearch(True, Bijection(block[hit]), checked + hit + 1, False, None)
        checked += take
    return IsolatedSearch(False, None, budget, False, None)
