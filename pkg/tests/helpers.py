"""Independent oracles used by the property suites.

Everything here is written against the definitions directly, with no reuse
of the library's own traversal or chain-assembly code paths, so agreement
is meaningful evidence.
"""

from collections import deque

import numpy as np

from bipfs import BiGraph, Bijection, make_bigraph, swap_legal


def random_bigraph(r: int, rng: np.random.Generator, p: float = 0.5) -> BiGraph:
    edges = [(a, r + b) for a in range(r) for b in range(r) if rng.random() < p]
    return make_bigraph(r, edges)


# -- bridge oracle ---------------------------------------------------------


def _component_count(g: BiGraph, skip=None) -> int:
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.neighbors(v):
                if skip is not None and frozenset((v, w)) == skip:
                    continue
                if not seen[w]:
                    seen[w] = True
                    q.append(w)
    return count


def brute_cut_edges(g: BiGraph) -> set:
    """An edge is a cut edge iff deleting it increases the component count."""
    base = _component_count(g)
    return {
        frozenset(e)
        for e in g.edges()
        if _component_count(g, skip=frozenset(e)) > base
    }


def brute_bridges(g: BiGraph) -> tuple[list[list[int]], int]:
    """All maximal bridge paths, straight from the definition.

    A vertex path qualifies when every edge on it is a cut edge, every
    interior vertex has degree exactly 2, and neither endpoint has degree 1.
    Maximal means not a contiguous subpath of another qualifying path.
    """
    cuts = brute_cut_edges(g)
    deg = g.degrees()
    valid: set[tuple[int, ...]] = set()

    def record(path: tuple[int, ...]):
        if len(path) >= 2 and deg[path[0]] != 1 and deg[path[-1]] != 1:
            rev = path[::-1]
            valid.add(path if path <= rev else rev)

    def grow(path: tuple[int, ...]):
        record(path)
        tail = path[-1]
        # extending turns the tail into an interior vertex unless the path
        # is still a single vertex
        if len(path) >= 2 and deg[tail] != 2:
            return
        for w in g.neighbors(tail):
            if w in path:
                continue
            if frozenset((tail, w)) in cuts:
                grow(path + (w,))

    for v in range(g.n):
        grow((v,))

    def contained(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
        if len(p) >= len(q):
            return False
        for cand in (p, p[::-1]):
            if any(q[i : i + len(p)] == cand for i in range(len(q) - len(p) + 1)):
                return True
        return False

    maximal = sorted(
        list(p) for p in valid if not any(contained(p, q) for q in valid)
    )
    max_k = max((len(p) for p in maximal), default=0)
    return maximal, max_k


# -- component-count oracle --------------------------------------------------


def bfs_component_count(x: BiGraph, y: BiGraph) -> int:
    """Count components of the joint state space by plain BFS over explicit
    permutation tuples.  Exponential; keep to 2r <= 8."""
    import itertools

    n = x.n
    xedges = x.edges()
    seen: set[tuple[int, ...]] = set()
    count = 0
    for start in itertools.permutations(range(n)):
        if start in seen:
            continue
        count += 1
        seen.add(start)
        q = deque([start])
        while q:
            place = q.popleft()
            for a, b in xedges:
                u, v = place[a], place[b]
                if y.has_edge(u, v):
                    nxt = list(place)
                    nxt[a], nxt[b] = v, u
                    t = tuple(nxt)
                    if t not in seen:
                        seen.add(t)
                        q.append(t)
    return count


# -- random walk along legal swaps -------------------------------------------


def legal_swaps(x: BiGraph, y: BiGraph, b: Bijection) -> list[tuple[int, int]]:
    out = []
    for a, c in x.edges():
        u, v = b.place[a], b.place[c]
        if swap_legal(x, y, b, u, v):
            out.append((u, v))
    return out
