"""Bipartite host graphs: edge-subgraphs of the complete bipartite graph K_{r,r}.

Vertices are labeled 0..2r-1 with the A side = {0..r-1} and the B side =
{r..2r-1}; every edge joins the two sides.  Adjacency is stored as one bit row
per vertex over the *opposite* side (bit j of adj[a] means the edge {a, r+j},
bit j of adj[b] means {j, b}), which keeps neighborhood unions, connectivity
sweeps and degree counts cheap even at r in the thousands.

Besides construction and the .bg text format, this module answers the
structural questions that decide whether the friends-and-strangers graph
FS(X, K_{r,r}) collapses to its two parity classes: connectivity, being a
cycle, and the bridge structure.  A k-bridge is a path on k vertices whose
edges are all cut edges, whose interior vertices have degree exactly 2 in the
whole graph, and whose endpoints do not have degree 1.  For r >= 5 the
criterion "connected, not a cycle, no bridge on >= r vertices" is exactly
equivalent to FS(X, K_{r,r}) having two components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "BiGraph",
    "BridgeReport",
    "StructureCensus",
    "BgParseError",
    "make_bigraph",
    "complete_host",
    "cycle_host",
    "find_bridges",
    "zhu_two_components",
    "census",
    "sample_gnp",
    "parse_bg",
    "emit_bg",
    "load_bg",
]


def _bits(mask: int):
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BiGraph:
    """Immutable edge-subgraph of K_{r,r} with bitset adjacency rows."""

    __slots__ = ("r", "adj", "_degrees", "_hash")

    def __init__(self, r: int, adj: tuple[int, ...]):
        if r < 1:
            raise ValueError(f"r must be a positive integer, got {r}")
        if len(adj) != 2 * r:
            raise ValueError(f"need {2 * r} adjacency rows, got {len(adj)}")
        full = (1 << r) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency row of vertex {v} has bits beyond r={r}")
        # bit j of adj[a<r] is the edge {a, r+j}; of adj[b>=r] the edge {j, b};
        # the two triangles must mirror each other
        for a in range(r):
            for j in _bits(adj[a]):
                if not (adj[r + j] >> a) & 1:
                    raise ValueError(f"edge {{{a}, {r + j}}} present in one row only")
        for b in range(r, 2 * r):
            for j in _bits(adj[b]):
                if not (adj[j] >> (b - r)) & 1:
                    raise ValueError(f"edge {{{j}, {b}}} present in one row only")
        self.r = r
        self.adj = tuple(adj)
        self._degrees = tuple(row.bit_count() for row in adj)
        self._hash = hash((r, self.adj))

    # -- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return 2 * self.r

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def min_degree(self) -> int:
        return min(self._degrees)

    def edge_count(self) -> int:
        return sum(self._degrees) // 2

    def has_edge(self, a: int, b: int) -> bool:
        a, b = (a, b) if a < b else (b, a)
        if not (0 <= a < self.r <= b < 2 * self.r):
            return False
        return bool((self.adj[a] >> (b - self.r)) & 1)

    def neighbors(self, v: int) -> list[int]:
        off = self.r if v < self.r else 0
        return [off + j for j in _bits(self.adj[v])]

    def edges(self) -> list[tuple[int, int]]:
        r = self.r
        return [(a, r + j) for a in range(r) for j in _bits(self.adj[a])]

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 2r x 2r boolean matrix, mostly for handoff to kernels."""
        n = self.n
        m = np.zeros((n, n), dtype=np.uint8)
        for a, b in self.edges():
            m[a, b] = m[b, a] = 1
        return m

    def __eq__(self, other) -> bool:
        return isinstance(other, BiGraph) and self.r == other.r and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"BiGraph(r={self.r}, edges={self.edge_count()})"


def make_bigraph(r: int, edges) -> BiGraph:
    """Build a BiGraph from (a, b) pairs with 0 <= a < r <= b < 2r.

    Rejects out-of-range endpoints, same-side pairs and duplicate edges.
    """
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    adj = [0] * (2 * r)
    seen = set()
    for e in edges:
        a, b = e
        if not (0 <= a < 2 * r and 0 <= b < 2 * r):
            raise ValueError(f"edge {e}: vertex out of range for r={r}")
        if a > b:
            a, b = b, a
        if not (a < r <= b):
            raise ValueError(f"edge {e}: both endpoints on the same side")
        if (a, b) in seen:
            raise ValueError(f"duplicate edge {e}")
        seen.add((a, b))
        adj[a] |= 1 << (b - r)
        adj[b] |= 1 << a
    return BiGraph(r, tuple(adj))


def complete_host(r: int) -> BiGraph:
    """K_{r,r} itself."""
    full = (1 << r) - 1
    return BiGraph(r, tuple([full] * (2 * r)))


def cycle_host(r: int) -> BiGraph:
    """The spanning cycle C_{2r}: 0, r, 1, r+1, ..., r-1, 2r-1, 0 (r >= 2)."""
    if r < 2:
        raise ValueError("a cycle needs r >= 2")
    edges = []
    for i in range(r):
        edges.append((i, r + i))
        edges.append(((i + 1) % r, r + i))
    return make_bigraph(r, edges)


# -- connectivity and shape -----------------------------------------------


def is_connected(g: BiGraph) -> bool:
    """True iff every vertex is reachable from vertex 0 (isolated vertices count)."""
    r = g.r
    full = (1 << r) - 1
    seen_a, seen_b = 1, 0
    frontier_a, frontier_b = 1, 0
    while frontier_a or frontier_b:
        grow_b = 0
        for j in _bits(frontier_a):
            grow_b |= g.adj[j]
        grow_a = 0
        for j in _bits(frontier_b):
            grow_a |= g.adj[r + j]
        frontier_b = grow_b & ~seen_b
        frontier_a = grow_a & ~seen_a
        seen_b |= frontier_b
        seen_a |= frontier_a
    return seen_a == full and seen_b == full


def is_cycle(g: BiGraph) -> bool:
    """True iff the graph is a single spanning cycle (connected and 2-regular)."""
    return all(d == 2 for d in g.degrees()) and is_connected(g)


def _components(g: BiGraph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, in discovery order."""
    r = g.r
    seen = [False] * (2 * r)
    comps = []
    for s in range(2 * r):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _cut_edges(g: BiGraph) -> set[frozenset[int]]:
    """All cut edges, by iterative DFS lowlink over every component."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[frozenset[int]] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # stack holds (vertex, parent, neighbor iterator)
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], disc[w])
                # a parallel edge back to parent cannot occur in a simple graph
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        cuts.add(frozenset((p, v)))
    return cuts


@dataclass
class BridgeReport:
    """All maximal bridge paths of a graph.

    bridges: vertex paths, each maximal among paths satisfying the bridge
    definition (edges all cut, interior degrees exactly 2, endpoint degrees
    != 1), canonicalized to the lexicographically smaller orientation and
    sorted.  max_k: vertex count of the longest one, 0 if none.
    """

    bridges: list[list[int]] = field(default_factory=list)
    max_k: int = 0

    def to_dict(self) -> dict:
        return {"bridges": self.bridges, "max_k": self.max_k}


def find_bridges(g: BiGraph) -> BridgeReport:
    """Maximal k-bridges of g.

    A chain of cut edges through degree-2 interior vertices extends uniquely
    in both directions (a degree-2 vertex with one cut edge has both edges
    cut, since a cycle through it would need both).  A chain endpoint of
    degree 1 cannot belong to any bridge, so it is trimmed and its degree-2
    neighbor becomes the endpoint; this is why a graph that is itself a path
    still contains the bridge spanning its interior.
    """
    cuts = _cut_edges(g)
    if not cuts:
        return BridgeReport([], 0)
    deg = g.degrees()
    cut_adj: dict[int, list[int]] = {}
    for e in cuts:
        u, v = tuple(e)
        cut_adj.setdefault(u, []).append(v)
        cut_adj.setdefault(v, []).append(u)

    done: set[frozenset[int]] = set()
    found: list[list[int]] = []
    for e in sorted(cuts, key=sorted):
        if e in done:
            continue
        u, v = sorted(e)
        chain = [u, v]
        done.add(e)
        # grow forward from chain[-1] through degree-2 vertices, then backward
        for flip in range(2):
            while True:
                tail, prev = chain[-1], chain[-2]
                if deg[tail] != 2:
                    break
                nxt = [w for w in cut_adj.get(tail, []) if w != prev]
                if not nxt or nxt[0] in chain:
                    break
                chain.append(nxt[0])
                done.add(frozenset((tail, nxt[0])))
            chain.reverse()
        if deg[chain[0]] == 1:
            chain = chain[1:]
        if chain and deg[chain[-1]] == 1:
            chain = chain[:-1]
        if len(chain) >= 2:
            if chain[::-1] < chain:
                chain = chain[::-1]
            found.append(chain)
    found.sort()
    return BridgeReport(found, max((len(c) for c in found), default=0))


def zhu_two_components(g: BiGraph) -> bool:
    """Exact two-component criterion for FS(g, K_{r,r}) at r >= 5.

    True iff g is connected, not a cycle, and has no bridge on >= r vertices.
    """
    if g.r < 5:
        raise ValueError(f"the criterion requires r >= 5, got r={g.r}")
    if not is_connected(g):
        return False
    if is_cycle(g):
        return False
    return find_bridges(g).max_k < g.r


# -- census ----------------------------------------------------------------


@dataclass
class StructureCensus:
    """Shape summary used when classifying random hosts near the threshold."""

    in_C1: bool
    tree_component_counts: dict[int, int]
    largest_path_component: int
    largest_tree_component: int
    isolated_count: int

    def to_dict(self) -> dict:
        return {
            "in_C1": self.in_C1,
            "tree_component_counts": dict(sorted(self.tree_component_counts.items())),
            "largest_path_component": self.largest_path_component,
            "largest_tree_component": self.largest_tree_component,
            "isolated_count": self.isolated_count,
        }


def _has_interior_degree2_path(g: BiGraph) -> bool:
    """Is there a path on exactly r vertices whose interior vertices all have
    degree 2 in g?

    Interior vertices of such a path form a run inside one "corridor": a
    maximal path or cycle of degree-2 vertices.  Corridors are scanned
    directly instead of searching over paths.
    """
    r = g.r
    if r == 1:
        return True
    if r == 2:
        return g.edge_count() > 0
    need = r - 2  # interior vertices required
    deg = g.degrees()
    d2 = [v for v in range(g.n) if deg[v] == 2]
    in_d2 = set(d2)
    seen: set[int] = set()
    for start in d2:
        if start in seen:
            continue
        # walk the corridor containing start
        comp = {start}
        corridor = [start]
        is_cyc = False
        for direction in range(2):
            prev, cur = None, start
            while True:
                nxt = [w for w in g.neighbors(cur) if w in in_d2 and w != prev]
                nxt = [w for w in nxt if w not in comp]
                if not nxt:
                    # closing edge back to start means a cycle corridor
                    if direction == 0 and len(corridor) > 2 and g.has_edge(corridor[-1], start):
                        is_cyc = True
                    break
                prev, cur = cur, nxt[0]
                comp.add(cur)
                if direction == 0:
                    corridor.append(cur)
                else:
                    corridor.insert(0, cur)
            if is_cyc:
                break
        seen |= comp
        m = len(corridor)
        if is_cyc:
            # a cycle of degree-2 vertices is a whole component; any r
            # consecutive vertices of it form the path
            if m >= r:
                return True
            continue
        if m >= need + 1:
            return True
        if m == need:
            # attachments at both corridor ends must be distinct vertices
            first, last = corridor[0], corridor[-1]
            left = [w for w in g.neighbors(first) if m == 1 or w != corridor[1]]
            right = [w for w in g.neighbors(last) if m == 1 or w != corridor[-2]]
            if m == 1:
                if len(left) >= 2:
                    return True
            elif left and right and (left[0] != right[0] or len(left) > 1 or len(right) > 1):
                return True
    return False


def census(g: BiGraph) -> StructureCensus:
    comps = _components(g)
    deg = g.degrees()
    tree_counts: dict[int, int] = {}
    largest_path = 0
    largest_tree = 0
    for comp in comps:
        nv = len(comp)
        ne = sum(deg[v] for v in comp) // 2
        if ne == nv - 1:  # connected, so this means a tree (singletons included)
            tree_counts[nv] = tree_counts.get(nv, 0) + 1
            largest_tree = max(largest_tree, nv)
            if all(deg[v] <= 2 for v in comp):
                largest_path = max(largest_path, nv)
    return StructureCensus(
        in_C1=_has_interior_degree2_path(g),
        tree_component_counts=tree_counts,
        largest_path_component=largest_path,
        largest_tree_component=largest_tree,
        isolated_count=sum(1 for d in deg if d == 0),
    )


# -- random model -----------------------------------------------------------


def sample_gnp(r: int, p: float, seed) -> BiGraph:
    """One sample of G(K_{r,r}, p): each of the r^2 possible edges kept
    independently with probability p.  seed may be an int or a
    numpy SeedSequence; identical (r, p, seed) gives an identical graph.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    rng = np.random.Generator(np.random.PCG64(seed))
    m = rng.random((r, r)) < p
    return from_matrix(m)


def from_matrix(m: np.ndarray) -> BiGraph:
    """BiGraph from an r x r boolean matrix (rows = A side, columns = B side)."""
    r = m.shape[0]
    if m.shape != (r, r):
        raise ValueError(f"need a square matrix, got {m.shape}")
    mb = np.asarray(m, dtype=bool)
    row_bytes = np.packbits(mb, axis=1, bitorder="little")
    col_bytes = np.packbits(mb.T, axis=1, bitorder="little")
    adj = [int.from_bytes(row_bytes[i].tobytes(), "little") for i in range(r)]
    adj += [int.from_bytes(col_bytes[j].tobytes(), "little") for j in range(r)]
    return BiGraph(r, tuple(adj))


# -- .bg text format ---------------------------------------------------------


class BgParseError(ValueError):
    """Parse failure; carries the offending source name and line number."""

    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


def parse_bg(text: str, source: str = "<string>") -> BiGraph:
    """Parse the .bg format: first significant line "r <int>", then one
    "<a> <b>" edge per line with 0 <= a < r <= b < 2r.  '#' starts a comment;
    blank lines are ignored.
    """
    r = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if r is None:
            if len(parts) != 2 or parts[0] != "r":
                raise BgParseError(source, lineno, f"expected 'r <int>' header, got {raw.strip()!r}")
            try:
                r = int(parts[1])
            except ValueError:
                raise BgParseError(source, lineno, f"bad r value {parts[1]!r}") from None
            if r < 1:
                raise BgParseError(source, lineno, f"r must be positive, got {r}")
            continue
        if len(parts) != 2:
            raise BgParseError(source, lineno, f"expected '<a> <b>', got {raw.strip()!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise BgParseError(source, lineno, f"non-integer endpoint in {raw.strip()!r}") from None
        if not (0 <= a < r <= b < 2 * r):
            raise BgParseError(source, lineno, f"edge ({a}, {b}) out of range for r={r} (need a < r <= b < 2r)")
        if (a, b) in set(edges):
            raise BgParseError(source, lineno, f"duplicate edge ({a}, {b})")
        edges.append((a, b))
    if r is None:
        raise BgParseError(source, 1, "empty input: missing 'r <int>' header")
    return make_bigraph(r, edges)


def load_bg(path) -> BiGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_bg(fh.read(), source=str(path))


def emit_bg(g: BiGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(f"r {g.r}")
    for a, b in sorted(g.edges()):
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"
