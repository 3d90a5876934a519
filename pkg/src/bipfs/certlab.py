"""Swap-sequence certificates over hypothesized edge sets.

A GadgetCase is a small symbolic world: named tokens, a set of hypothesized
token-graph edges, a set of hypothesized position-graph edges (positions are
named by the token that starts there, so position "u" is token u's home), and
a swap sequence that claims to exchange the two target tokens while returning
everyone else home.  Nothing else is assumed: an edge not listed is an edge
that may be absent, so a verified certificate proves exchangeability for
every graph pair containing the listed edges.

Some cases leave a few adjacencies open as choice groups ("token y is
adjacent to exactly one of v, w").  verify_certificate replays the sequence
under every combination of choices, and the verdict counts the combinations.
Several shipped cases come in families whose mirror variants follow by
left-right symmetry; those variants are not auto-generated, but they can be
transcribed as .gadget files and verified the same way.

embed_case turns the symbolic world into a concrete pair of bipartite graphs
(two-coloring tokens and positions independently, padding to equal sides), so
certificates can be cross-checked against the exact engine.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Sequence

from .bigraph import BiGraph, make_bigraph
from .engine import Bijection

__all__ = [
    "GadgetCase",
    "Verdict",
    "VerdictFailure",
    "ShortestResult",
    "EmbeddedCase",
    "GadgetParseError",
    "verify_certificate",
    "sequence_product",
    "shortest_exchange",
    "parse_gadget",
    "emit_gadget",
    "load_gadget",
    "builtin_corpus",
    "embed_case",
]

Pair = tuple[str, str]
Option = tuple[str, Pair]  # ("y" | "x", (p, q))


@dataclass(frozen=True)
class GadgetCase:
    """Symbolic exchange certificate.

    tokens fixes the position order: position i is the home of tokens[i].
    x_edges name positions by their home token.  Each choice group is a
    tuple of options, exactly one of which holds; an option is ("y", (p, q))
    for a token-graph edge or ("x", (p, q)) for a position-graph edge.
    """

    name: str
    tokens: tuple[str, ...]
    y_edges: tuple[Pair, ...]
    x_edges: tuple[Pair, ...]
    choices: tuple[tuple[Option, ...], ...]
    target: Pair
    sequence: tuple[Pair, ...]

    def __post_init__(self):
        seen = set(self.tokens)
        if len(seen) != len(self.tokens):
            raise ValueError(f"{self.name}: duplicate token names")

        def chk(p: str, q: str, what: str):
            if p not in seen or q not in seen:
                raise ValueError(f"{self.name}: {what} {{{p},{q}}} names unknown token")
            if p == q:
                raise ValueError(f"{self.name}: {what} {{{p},{q}}} is a loop")

        for p, q in self.y_edges:
            chk(p, q, "yedge")
        for p, q in self.x_edges:
            chk(p, q, "xedge")
        for group in self.choices:
            if not group:
                raise ValueError(f"{self.name}: empty choice group")
            for side, (p, q) in group:
                if side not in ("y", "x"):
                    raise ValueError(f"{self.name}: bad option side {side!r}")
                chk(p, q, "choice option")
        chk(*self.target, "target")
        for p, q in self.sequence:
            chk(p, q, "swap")

    @property
    def instantiation_count(self) -> int:
        n = 1
        for g in self.choices:
            n *= len(g)
        return n

    def instantiations(self):
        """Yield (picks, y_set, x_set) over every combination of choices."""
        base_y = {frozenset(e) for e in self.y_edges}
        base_x = {frozenset(e) for e in self.x_edges}
        for picks in itertools.product(*(range(len(g)) for g in self.choices)):
            y_set = set(base_y)
            x_set = set(base_x)
            for gi, oi in enumerate(picks):
                side, pair = self.choices[gi][oi]
                (y_set if side == "y" else x_set).add(frozenset(pair))
            yield picks, y_set, x_set

    def describe_picks(self, picks: Sequence[int]) -> tuple[str, ...]:
        out = []
        for gi, oi in enumerate(picks):
            side, (p, q) = self.choices[gi][oi]
            out.append(f"{'yedge' if side == 'y' else 'xedge'} {p},{q}")
        return tuple(out)


@dataclass
class VerdictFailure:
    instantiation: tuple[str, ...]
    step: int  # 1-based index into the sequence
    reason: str


@dataclass
class Verdict:
    """accepted means every instantiation replayed to the exact target state;
    instantiations_checked counts the combinations that passed."""

    accepted: bool
    instantiations_checked: int
    failure: Optional[VerdictFailure] = None

    def to_dict(self) -> dict:
        d = {"accepted": self.accepted, "instantiations_checked": self.instantiations_checked}
        if self.failure is not None:
            d["failure"] = {
                "instantiation": list(self.failure.instantiation),
                "step": self.failure.step,
                "reason": self.failure.reason,
            }
        return d


def _replay(case: GadgetCase, y_set, x_set) -> tuple[int, str] | None:
    """Replay the sequence from the identity placement; None on success."""
    k = len(case.tokens)
    idx = {t: i for i, t in enumerate(case.tokens)}
    place = list(range(k))
    pos = list(range(k))
    for step, (p, q) in enumerate(case.sequence, start=1):
        if frozenset((p, q)) not in y_set:
            return step, f"missing Y-edge {{{p},{q}}}"
        a, b = pos[idx[p]], pos[idx[q]]
        if frozenset((case.tokens[a], case.tokens[b])) not in x_set:
            return step, f"missing X-edge {{{case.tokens[a]}',{case.tokens[b]}'}}"
        place[a], place[b] = place[b], place[a]
        pos[place[a]], pos[place[b]] = a, b
    u, v = case.target
    want = list(range(k))
    want[idx[u]], want[idx[v]] = idx[v], idx[u]
    if place != want:
        return len(case.sequence), "wrong final permutation"
    return None


def verify_certificate(case: GadgetCase) -> Verdict:
    """Replay the swap sequence under every choice combination.

    Each step must name a hypothesized token-graph edge whose tokens sit on
    positions joined by a hypothesized position-graph edge; after the last
    step every token must be home except the two targets, which must have
    traded.  Verification stops at the first failing instantiation.
    """
    checked = 0
    for picks, y_set, x_set in case.instantiations():
        fail = _replay(case, y_set, x_set)
        if fail is not None:
            step, reason = fail
            return Verdict(False, checked, VerdictFailure(case.describe_picks(picks), step, reason))
        checked += 1
    return Verdict(True, checked, None)


def sequence_product(case: GadgetCase) -> dict[str, str]:
    """The permutation of tokens obtained by composing the sequence's swaps
    in order, as a mapping.  For an accepted certificate this is exactly the
    transposition of the two target tokens."""
    perm = {t: t for t in case.tokens}
    for p, q in case.sequence:
        for t in case.tokens:
            if perm[t] == p:
                perm[t] = q
            elif perm[t] == q:
                perm[t] = p
    return perm


@dataclass
class ShortestResult:
    reachable: bool
    length: Optional[int]
    sequence: Optional[tuple[Pair, ...]]
    states_explored: int

    def to_dict(self) -> dict:
        return {
            "reachable": self.reachable,
            "length": self.length,
            "sequence": None if self.sequence is None else [list(p) for p in self.sequence],
            "states_explored": self.states_explored,
        }


def shortest_exchange(case: GadgetCase, picks: Optional[Sequence[int]] = None) -> ShortestResult:
    """Breadth-first distance from the identity placement to the target
    exchange.

    With picks, moves follow the hypothesized edges of that one choice
    combination.  Without picks, moves follow only the unconditional
    hypotheses (fixed edges plus single-option groups); a sequence that must
    work whichever way the open choices resolve can use nothing else, so
    this mode measures the shortest universally valid exchange and is what
    the published lengths claim.  The search space is all k! placements of
    the case's k tokens, so this is meant for small gadgets.
    """
    y_set: set[frozenset] = {frozenset(e) for e in case.y_edges}
    x_set: set[frozenset] = {frozenset(e) for e in case.x_edges}
    if picks is None:
        for group in case.choices:
            if len(group) == 1:
                side, pair = group[0]
                (y_set if side == "y" else x_set).add(frozenset(pair))
    else:
        picks = tuple(picks)
        if len(picks) != len(case.choices) or any(
            not 0 <= oi < len(case.choices[gi]) for gi, oi in enumerate(picks)
        ):
            raise ValueError(f"{case.name}: bad picks {picks!r}")
        for gi, oi in enumerate(picks):
            side, pair = case.choices[gi][oi]
            (y_set if side == "y" else x_set).add(frozenset(pair))

    k = len(case.tokens)
    idx = {t: i for i, t in enumerate(case.tokens)}
    ymoves = [(idx[p], idx[q]) for p, q in (tuple(e) for e in y_set)]
    xok = [[False] * k for _ in range(k)]
    for e in x_set:
        a, b = (idx[t] for t in e)
        xok[a][b] = xok[b][a] = True

    start = tuple(range(k))
    goal = list(range(k))
    goal[idx[case.target[0]]], goal[idx[case.target[1]]] = (
        idx[case.target[1]],
        idx[case.target[0]],
    )
    goal = tuple(goal)

    parents: dict[tuple[int, ...], Optional[tuple[tuple[int, ...], Pair]]] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == goal:
            seq = []
            s = state
            while parents[s] is not None:
                prev, swap = parents[s]
                seq.append(swap)
                s = prev
            seq.reverse()
            return ShortestResult(True, len(seq), tuple(seq), len(parents))
        pos = [0] * k
        for a, t in enumerate(state):
            pos[t] = a
        for tu, tv in ymoves:
            a, b = pos[tu], pos[tv]
            if not xok[a][b]:
                continue
            nxt = list(state)
            nxt[a], nxt[b] = nxt[b], nxt[a]
            nxt = tuple(nxt)
            if nxt not in parents:
                parents[nxt] = (state, (case.tokens[tu], case.tokens[tv]))
                queue.append(nxt)
    return ShortestResult(False, None, None, len(parents))


class GadgetParseError(ValueError):
    def __init__(self, message: str, source: str = "<string>", line: int = 0):
        super().__init__(f"{source}:{line}: {message}" if line else f"{source}: {message}")
        self.source = source
        self.line = line


def _parse_pair(text: str, source: str, ln: int) -> Pair:
    parts = text.split(",")
    if len(parts) != 2 or not all(p.strip() for p in parts):
        raise GadgetParseError(f"expected 'a,b' pair, got {text!r}", source, ln)
    return parts[0].strip(), parts[1].strip()


def parse_gadget(text: str, source: str = "<string>") -> GadgetCase:
    """Parse one .gadget description.

    Line oriented: 'name:', 'tokens:' (space separated), 'yedges:'/'xedges:'
    (space-separated a,b pairs, lines accumulate), 'choice:' (options joined
    by '|', each 'yedge a,b' or 'xedge a,b'; one line per group), 'target:'
    (a,b), 'seq:' (space-separated a,b pairs, lines accumulate).  '#' starts
    a comment.
    """
    name = None
    tokens: list[str] = []
    y_edges: list[Pair] = []
    x_edges: list[Pair] = []
    choices: list[tuple[Option, ...]] = []
    target = None
    sequence: list[Pair] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise GadgetParseError(f"expected 'key: value', got {raw.strip()!r}", source, ln)
        key, _, val = line.partition(":")
        key = key.strip()
        val = val.strip()
        if key == "name":
            name = val
        elif key == "tokens":
            tokens.extend(val.split())
        elif key in ("yedges", "xedges"):
            dest = y_edges if key == "yedges" else x_edges
            for item in val.split():
                dest.append(_parse_pair(item, source, ln))
        elif key == "choice":
            group = []
            for opt in val.split("|"):
                parts = opt.split()
                if len(parts) != 2 or parts[0] not in ("yedge", "xedge"):
                    raise GadgetParseError(
                        f"expected 'yedge a,b' or 'xedge a,b', got {opt.strip()!r}", source, ln
                    )
                group.append((parts[0][0], _parse_pair(parts[1], source, ln)))
            choices.append(tuple(group))
        elif key == "target":
            target = _parse_pair(val, source, ln)
        elif key == "seq":
            for item in val.split():
                sequence.append(_parse_pair(item, source, ln))
        else:
            raise GadgetParseError(f"unknown key {key!r}", source, ln)
    if name is None:
        raise GadgetParseError("missing 'name:'", source)
    if not tokens:
        raise GadgetParseError("missing 'tokens:'", source)
    if target is None:
        raise GadgetParseError("missing 'target:'", source)
    if not sequence:
        raise GadgetParseError("missing 'seq:'", source)
    try:
        return GadgetCase(
            name=name,
            tokens=tuple(tokens),
            y_edges=tuple(y_edges),
            x_edges=tuple(x_edges),
            choices=tuple(choices),
            target=target,
            sequence=tuple(sequence),
        )
    except ValueError as exc:
        raise GadgetParseError(str(exc), source) from exc


def emit_gadget(case: GadgetCase) -> str:
    """Serialize a case in the .gadget format; parse_gadget round-trips it."""
    lines = [f"name: {case.name}", f"tokens: {' '.join(case.tokens)}"]
    if case.y_edges:
        lines.append("yedges: " + " ".join(f"{p},{q}" for p, q in case.y_edges))
    if case.x_edges:
        lines.append("xedges: " + " ".join(f"{p},{q}" for p, q in case.x_edges))
    for group in case.choices:
        lines.append(
            "choice: "
            + " | ".join(f"{'yedge' if s == 'y' else 'xedge'} {p},{q}" for s, (p, q) in group)
        )
    lines.append(f"target: {case.target[0]},{case.target[1]}")
    seq = case.sequence
    for i in range(0, len(seq), 16):
        lines.append("seq: " + " ".join(f"{p},{q}" for p, q in seq[i : i + 16]))
    return "\n".join(lines) + "\n"


def load_gadget(path) -> GadgetCase:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_gadget(fh.read(), source=str(path))


def builtin_corpus() -> list[GadgetCase]:
    """All certificate cases shipped with the package, sorted by name."""
    root = resources.files("bipfs.data").joinpath("gadgets")
    cases = []
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".gadget"):
            cases.append(parse_gadget(entry.read_text(encoding="utf-8"), source=entry.name))
    return cases


def _two_color(items: tuple[str, ...], edges) -> dict[str, int]:
    """Proper 2-coloring of the graph on items; BFS per component, the
    smallest-index vertex of each component gets color 0."""
    nbrs: dict[str, list[str]] = {t: [] for t in items}
    for e in edges:
        p, q = tuple(e)
        nbrs[p].append(q)
        nbrs[q].append(p)
    color: dict[str, int] = {}
    for root in items:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            cur = queue.popleft()
            for w in nbrs[cur]:
                if w not in color:
                    color[w] = 1 - color[cur]
                    queue.append(w)
                elif color[w] == color[cur]:
                    raise ValueError(f"edge set on {cur!r},{w!r} is not bipartite")
    return color


@dataclass
class EmbeddedCase:
    """A certificate realized as a concrete pair of bipartite graphs.

    state places token_vertex[t] on position_vertex[t] for every token t;
    u and v are the target tokens' vertices in y.
    """

    x: BiGraph
    y: BiGraph
    state: Bijection
    u: int
    v: int
    r: int
    token_vertex: dict[str, int]
    position_vertex: dict[str, int]


def embed_case(case: GadgetCase, picks: Optional[Sequence[int]] = None) -> EmbeddedCase:
    """Realize one instantiation inside K_{r,r} with the smallest padding.

    Tokens and positions are two-colored independently (the token named t and
    the position named t may land on different sides: displaced tokens are
    the interesting part of half the corpus).  Unnamed padding vertices carry
    no edges, so reachability questions about the embedded pair restrict
    exactly to the symbolic ones.
    """
    if picks is None:
        picks = tuple(0 for _ in case.choices)
    picks = tuple(picks)
    y_set: set[frozenset] = {frozenset(e) for e in case.y_edges}
    x_set: set[frozenset] = {frozenset(e) for e in case.x_edges}
    for gi, oi in enumerate(picks):
        side, pair = case.choices[gi][oi]
        (y_set if side == "y" else x_set).add(frozenset(pair))

    tcol = _two_color(case.tokens, y_set)
    pcol = _two_color(case.tokens, x_set)
    r = max(
        sum(1 for t in case.tokens if tcol[t] == 0),
        sum(1 for t in case.tokens if tcol[t] == 1),
        sum(1 for t in case.tokens if pcol[t] == 0),
        sum(1 for t in case.tokens if pcol[t] == 1),
    )

    def assign(col: dict[str, int]) -> dict[str, int]:
        out = {}
        nxt = [0, r]
        for t in case.tokens:
            out[t] = nxt[col[t]]
            nxt[col[t]] += 1
        return out

    token_vertex = assign(tcol)
    position_vertex = assign(pcol)

    y = make_bigraph(r, [tuple(sorted((token_vertex[p], token_vertex[q]))) for p, q in map(tuple, y_set)])
    x = make_bigraph(r, [tuple(sorted((position_vertex[p], position_vertex[q]))) for p, q in map(tuple, x_set)])

    place = [-1] * (2 * r)
    for t in case.tokens:
        place[position_vertex[t]] = token_vertex[t]
    spare_tokens = sorted(set(range(2 * r)) - set(token_vertex.values()))
    for a in range(2 * r):
        if place[a] < 0:
            place[a] = spare_tokens.pop(0)
    state = Bijection(place)
    return EmbeddedCase(
        x=x,
        y=y,
        state=state,
        u=token_vertex[case.target[0]],
        v=token_vertex[case.target[1]],
        r=r,
        token_vertex=token_vertex,
        position_vertex=position_vertex,
    )
