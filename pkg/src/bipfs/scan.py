"""Extremal scans over edge-subgraph pairs of K_{r,r}.

The minimum-degree theorem says that once delta(X) + delta(Y) reaches
floor(3r/2) + 1, the state space FS(X, Y) collapses to its parity floor of
exactly two components (r >= 4).  This module checks that claim at desk
scale: exhaustive pair enumeration for r <= 4, seeded random sampling at
r = 5, and witness hunts one unit below the bound, where the guarantee
is tight because frozen placements start to exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .bigraph import (
    BiGraph,
    complete_host,
    cycle_host,
    emit_bg,
    is_connected,
    is_cycle,
    zhu_two_components,
)
from .engine import count_isolated_states, fs_component_count

__all__ = [
    "Counterexample",
    "Witness",
    "ScanReport",
    "CorollaryReport",
    "enumerate_subgraphs",
    "theorem_scan",
    "tightness_search",
    "corollary_check",
]

# keeps exhaustive pair scans from being requested at absurd bounds
_MAX_EXHAUSTIVE_PAIRS = 20_000_000


def enumerate_subgraphs(r: int, min_deg: int = 0) -> Iterator[BiGraph]:
    """Yield every edge-subgraph of K_{r,r} with minimum degree >= min_deg.

    The order is fixed: edge {a, r+b} is bit a*r + b of a mask counted
    upward from 0, so reruns always produce the same sequence.  Full
    enumeration walks 2^(r*r) masks and is only offered for r <= 4.
    """
    if r > 4:
        raise ValueError(
            f"full enumeration means 2^(r*r) subgraphs and r={r} is past the "
            "desk-scale cutoff of 4; use the random mode of the scans instead"
        )
    if not 0 <= min_deg <= r:
        raise ValueError(f"min_deg must lie in [0, {r}], got {min_deg}")
    full = (1 << r) - 1
    for mask in range(1 << (r * r)):
        rows = [(mask >> (a * r)) & full for a in range(r)]
        if any(m.bit_count() < min_deg for m in rows):
            continue
        cols = [0] * r
        for a, m in enumerate(rows):
            bit = 1 << a
            for b in range(r):
                if (m >> b) & 1:
                    cols[b] |= bit
        if any(c.bit_count() < min_deg for c in cols):
            continue
        yield BiGraph(r, tuple(rows + cols))


@lru_cache(maxsize=None)
def _buckets_by_min_degree(r: int, floor: int) -> dict[int, tuple[BiGraph, ...]]:
    """Subgraphs with delta >= floor, grouped by exact minimum degree."""
    groups: dict[int, list[BiGraph]] = {d: [] for d in range(floor, r + 1)}
    for g in enumerate_subgraphs(r, floor):
        groups[g.min_degree()].append(g)
    return {d: tuple(gs) for d, gs in groups.items()}


@lru_cache(maxsize=None)
def _row_masks(r: int, min_bits: int) -> tuple[int, ...]:
    return tuple(m for m in range(1 << r) if m.bit_count() >= min_bits)


def _graph_from_rows(r: int, rows: Sequence[int]) -> BiGraph:
    cols = [0] * r
    for a, m in enumerate(rows):
        bit = 1 << a
        for b in range(r):
            if (m >> b) & 1:
                cols[b] |= bit
    return BiGraph(r, tuple(list(rows) + cols))


def _sample_min_degree(r: int, d: int, rng: np.random.Generator) -> BiGraph:
    """Uniform draw from the subgraphs of K_{r,r} with delta >= d.

    Rows are sampled uniformly among masks with >= d bits and the draw is
    rejected unless the B side also clears the bound; every target graph
    has the same proposal probability, so acceptance is exactly uniform.
    """
    masks = _row_masks(r, d)
    for _ in range(100_000):
        rows = [masks[int(k)] for k in rng.integers(0, len(masks), size=r)]
        cols = [0] * r
        for a, m in enumerate(rows):
            bit = 1 << a
            for b in range(r):
                if (m >> b) & 1:
                    cols[b] |= bit
        if all(c.bit_count() >= d for c in cols):
            return BiGraph(r, tuple(rows + cols))
    raise RuntimeError(f"rejection sampling stalled for delta >= {d} at r = {r}")


def _two_block(r: int, d: int, rng: np.random.Generator) -> BiGraph:
    """Disjoint K_{d, r-d} + K_{r-d, d} on shuffled vertex labels.

    Needs d <= r // 2 and delivers delta exactly d.  Paired against K_{r,r}
    each block can hold one full token side, which freezes the placement,
    so these are natural isolated-state candidates.
    """
    pa = [int(v) for v in rng.permutation(r)]
    pb = [int(v) for v in rng.permutation(r)]
    a1, b1 = set(pa[:d]), set(pb[: r - d])
    rows = [0] * r
    for a in range(r):
        for b in range(r):
            if (a in a1) == (b in b1):
                rows[a] |= 1 << b
    return _graph_from_rows(r, rows)


def _matching_complement(r: int, rng: np.random.Generator) -> BiGraph:
    """K_{r,r} minus a random perfect matching; delta is exactly r - 1."""
    match = [int(v) for v in rng.permutation(r)]
    full = (1 << r) - 1
    rows = [full & ~(1 << match[a]) for a in range(r)]
    return _graph_from_rows(r, rows)


def _propose(r: int, d: int, rng: np.random.Generator) -> BiGraph:
    """Half structured, half uniform proposals at one degree floor."""
    structured = []
    if 1 <= d <= r // 2:
        structured.append("blocks")
    if d == r - 1:
        structured.append("matching")
    if structured and rng.random() < 0.5:
        pick = structured[int(rng.integers(0, len(structured)))]
        if pick == "blocks":
            return _two_block(r, d, rng)
        return _matching_complement(r, rng)
    return _sample_min_degree(r, d, rng)


@dataclass(frozen=True)
class Counterexample:
    """A pair meeting the degree hypothesis whose component count is not 2."""

    x: BiGraph
    y: BiGraph
    component_count: int

    def to_dict(self) -> dict:
        return {
            "profile": [self.x.min_degree(), self.y.min_degree()],
            "component_count": self.component_count,
            "x_bg": emit_bg(self.x),
            "y_bg": emit_bg(self.y),
        }


@dataclass(frozen=True)
class Witness:
    """Evidence that a boundary pair falls short of two components.

    kind is "isolated" when a frozen placement was found (isolated_state
    holds it) and "component_count" when only the full census shows the
    failure.  component_count is filled whenever a census was run.
    """

    x: BiGraph
    y: BiGraph
    kind: str
    isolated_state: Optional[tuple[int, ...]] = None
    component_count: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "profile": [self.x.min_degree(), self.y.min_degree()],
            "kind": self.kind,
            "isolated_state": None if self.isolated_state is None else list(self.isolated_state),
            "component_count": self.component_count,
            "x_bg": emit_bg(self.x),
            "y_bg": emit_bg(self.y),
        }


@dataclass(frozen=True)
class ScanReport:
    """Outcome of one pair scan, self-contained enough to replay.

    pairs_tested equals the enumerated total in exhaustive mode.  The
    counterexample list is empty exactly when the degree condition held on
    every tested pair.  profile_counts attributes the work to exact
    (delta(X), delta(Y)) profiles.
    """

    r: int
    condition: str
    mode: str
    pairs_tested: int
    counterexamples: tuple[Counterexample, ...]
    witnesses: tuple[Witness, ...]
    seed: Optional[int]
    profile_counts: dict = field(default_factory=dict)
    note: Optional[str] = None

    @property
    def theorem_held(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "condition": self.condition,
            "mode": self.mode,
            "pairs_tested": self.pairs_tested,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "witnesses": [w.to_dict() for w in self.witnesses],
            "seed": self.seed,
            "profile_counts": {
                f"{dx},{dy}": k for (dx, dy), k in sorted(self.profile_counts.items())
            },
            "note": self.note,
        }


def _profiles_at_least(r: int, bound: int) -> list[tuple[int, int]]:
    return sorted(
        ((dx, dy) for dx in range(r + 1) for dy in range(r + 1) if dx + dy >= bound),
        key=lambda p: (p[0] + p[1], p),
    )


def theorem_scan(
    r: int,
    degree_sum_bound: int,
    mode: str = "exhaustive",
    budget: Optional[int] = None,
    seed: Optional[int] = None,
) -> ScanReport:
    """Test pairs with delta(X) + delta(Y) >= degree_sum_bound for exactly
    two components.

    Exhaustive mode (r <= 4) enumerates every qualifying pair, stratified
    by exact degree profile in ascending profile order; random mode draws
    budget-many pairs by picking a qualifying profile uniformly and then a
    uniform subgraph at each degree floor.  A spent budget is a normal,
    reported completion, not an error.
    """
    if r not in (3, 4, 5):
        raise ValueError(f"scans cover r in {{3, 4, 5}}, got r={r}")
    if mode not in ("exhaustive", "random"):
        raise ValueError(f"mode must be 'exhaustive' or 'random', got {mode!r}")
    if mode == "exhaustive" and r > 4:
        raise ValueError("exhaustive pair scans stop at r = 4; use mode='random'")
    if mode == "random" and (budget is None or budget < 1):
        raise ValueError("random mode needs a positive budget of pairs")

    condition = f"delta(X) + delta(Y) >= {degree_sum_bound}"
    counterexamples: list[Counterexample] = []
    profile_counts: dict[tuple[int, int], int] = {}
    note = None

    if mode == "exhaustive":
        floor = max(0, degree_sum_bound - r)
        buckets = _buckets_by_min_degree(r, floor)
        work: list[tuple[BiGraph, BiGraph]] = []
        for dx, dy in _profiles_at_least(r, degree_sum_bound):
            xs = buckets.get(dx, ())
            ys = buckets.get(dy, ())
            if xs and ys:
                profile_counts[(dx, dy)] = len(xs) * len(ys)
                work.extend((x, y) for x in xs for y in ys)
        if len(work) > _MAX_EXHAUSTIVE_PAIRS:
            raise ValueError(
                f"bound {degree_sum_bound} admits {len(work)} pairs at r={r}; "
                "raise the bound or use mode='random'"
            )
        for x, y in work:
            count = fs_component_count(x, y).component_count
            if count != 2:
                counterexamples.append(Counterexample(x, y, count))
        pairs = len(work)
    else:
        profiles = _profiles_at_least(r, degree_sum_bound)
        if not profiles:
            raise ValueError(f"no degree profile reaches {degree_sum_bound} at r={r}")
        root = np.random.SeedSequence(seed)
        drawn: list[tuple[BiGraph, BiGraph]] = []
        for i in range(budget):
            rng = np.random.Generator(np.random.PCG64(root.spawn(1)[0]))
            dx, dy = profiles[int(rng.integers(0, len(profiles)))]
            drawn.append((_sample_min_degree(r, dx, rng), _sample_min_degree(r, dy, rng)))
        for x, y in drawn:
            prof = (x.min_degree(), y.min_degree())
            profile_counts[prof] = profile_counts.get(prof, 0) + 1
            count = fs_component_count(x, y).component_count
            if count != 2:
                counterexamples.append(Counterexample(x, y, count))
        pairs = budget
        note = f"random budget of {budget} pairs exhausted"

    return ScanReport(
        r=r,
        condition=condition,
        mode=mode,
        pairs_tested=pairs,
        counterexamples=tuple(counterexamples),
        witnesses=(),
        seed=seed,
        profile_counts=profile_counts,
        note=note,
    )


def _probe_pair(x: BiGraph, y: BiGraph) -> Optional[Witness]:
    # census first: a clean pair cannot hide an isolated state, since that
    # state would be a third component all by itself
    census = fs_component_count(x, y)
    if census.component_count == 2:
        return None
    iso = count_isolated_states(x, y)
    if iso.found:
        assert census.component_count > 2
        return Witness(
            x, y, "isolated",
            isolated_state=tuple(int(v) for v in iso.witness.place),
            component_count=census.component_count,
        )
    return Witness(x, y, "component_count", component_count=census.component_count)


def tightness_search(
    r: int,
    degree_sum: int,
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    profiles: Optional[Sequence[tuple[int, int]]] = None,
    sigma_budget: int = 20_000,
) -> ScanReport:
    """Hunt for witnesses that the degree-sum bound cannot be lowered.

    degree_sum must sit one unit below the two-component bound, at
    floor(3r/2).  For r <= 4 the search is exhaustive from that boundary
    upward (so near-boundary failures above the line are caught too), and
    every candidate gets both a frozen-placement scan and a full census.
    At r = 5 it draws budget-many random pairs on the boundary profiles,
    mixing structured block and matching proposals with uniform ones, and
    looks for frozen placements only (a census per draw is out of reach;
    the placement scan itself is still exhaustive per pair).  Finding
    nothing within the budget is inconclusive and labeled so.

    profiles restricts attention to the given exact (delta(X), delta(Y))
    pairs when supplied.
    """
    if r not in (3, 4, 5):
        raise ValueError(f"scans cover r in {{3, 4, 5}}, got r={r}")
    boundary = (3 * r) // 2
    if degree_sum != boundary:
        raise ValueError(
            f"tightness searches run one unit below the bound: degree_sum "
            f"must be {boundary} for r={r}, got {degree_sum}"
        )
    condition = f"delta(X) + delta(Y) >= {degree_sum} (one below the two-component bound)"
    witnesses: list[Witness] = []
    profile_counts: dict[tuple[int, int], int] = {}
    note = None

    if r <= 4:
        mode = "exhaustive"
        floor = max(0, degree_sum - r)
        buckets = _buckets_by_min_degree(r, floor)
        wanted = list(profiles) if profiles else _profiles_at_least(r, degree_sum)
        work: list[tuple[BiGraph, BiGraph]] = []
        for dx, dy in wanted:
            xs = buckets.get(dx, ())
            ys = buckets.get(dy, ())
            if xs and ys:
                work.extend((x, y) for x in xs for y in ys)
        total = len(work)
        if budget is not None and budget < total:
            # a capped run no longer covers the space, so it may not
            # advertise itself as exhaustive
            work = work[:budget]
            mode = "random"
            note = f"budget stopped the sweep after {budget} of {total} pairs"
        for x, y in work:
            prof = (x.min_degree(), y.min_degree())
            profile_counts[prof] = profile_counts.get(prof, 0) + 1
            w = _probe_pair(x, y)
            if w is not None:
                witnesses.append(w)
        pairs = len(work)
    else:
        mode = "random"
        if budget is None or budget < 1:
            raise ValueError("the r = 5 search is randomized and needs a budget")
        wanted = list(profiles) if profiles else sorted(
            (dx, dy)
            for dx in range(r + 1)
            for dy in range(r + 1)
            if dx + dy == degree_sum
        )
        root = np.random.SeedSequence(seed)
        for i in range(budget):
            gen_seed, sigma_seed = root.spawn(2)
            rng = np.random.Generator(np.random.PCG64(gen_seed))
            dx, dy = wanted[int(rng.integers(0, len(wanted)))]
            x = _propose(r, dx, rng)
            y = _propose(r, dy, rng)
            prof = (x.min_degree(), y.min_degree())
            profile_counts[prof] = profile_counts.get(prof, 0) + 1
            iso = count_isolated_states(x, y, budget=sigma_budget, seed=sigma_seed)
            if iso.found:
                witnesses.append(Witness(
                    x, y, "isolated",
                    isolated_state=tuple(int(v) for v in iso.witness.place),
                ))
        pairs = budget
        if not witnesses:
            note = f"no witness in {budget} draws; inconclusive at this budget"

    return ScanReport(
        r=r,
        condition=condition,
        mode=mode,
        pairs_tested=pairs,
        counterexamples=(),
        witnesses=tuple(witnesses),
        seed=seed,
        profile_counts=profile_counts,
        note=note,
    )


@dataclass(frozen=True)
class CorollaryReport:
    """Checks of the two extremal minimum-degree constants at one r.

    d_symmetric is the least d with delta(X), delta(Y) >= d forcing two
    components; d_star plays the same role when Y is K_{r,r} itself.
    part_a verifies sufficiency of d_star, part_b exhibits a witness one
    unit below it.
    """

    r: int
    d_symmetric: int
    d_star: int
    part_a: dict
    part_b: dict

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "d_symmetric": self.d_symmetric,
            "d_star": self.d_star,
            "part_a": self.part_a,
            "part_b": self.part_b,
        }


def corollary_check(r: int, seed: int = 0, spot_checks: int = 20) -> CorollaryReport:
    """Verify the claimed one-sided cutoff d* against Y = K_{r,r}.

    r <= 4 runs the full census over every X with delta(X) >= d*.  At
    r = 5 each sampled X is judged by the structural two-component
    criterion, with spot_checks of them also counted directly; any
    disagreement between the two verdicts is recorded, not raised.
    The witness below the cutoff is the spanning cycle C_{2r}, whose
    count is taken exactly in all three cases.
    """
    if r not in (3, 4, 5):
        raise ValueError(f"scans cover r in {{3, 4, 5}}, got r={r}")
    d_star = 3 if r == 3 else r // 2 + 1
    d_symmetric = (3 * r + 4) // 4
    host = complete_host(r)

    if r <= 4:
        tested = 0
        failures = []
        for x in enumerate_subgraphs(r, d_star):
            count = fs_component_count(x, host).component_count
            tested += 1
            if count != 2:
                failures.append(Counterexample(x, host, count).to_dict())
        part_a = {
            "mode": "exhaustive",
            "graphs_tested": tested,
            "all_two_components": not failures,
            "failures": failures,
        }
    else:
        criterion_draws = max(spot_checks, 200)
        root = np.random.SeedSequence(seed)
        rng = np.random.Generator(np.random.PCG64(root))
        samples = [_sample_min_degree(r, d_star, rng) for _ in range(criterion_draws)]
        criterion_ok = sum(1 for x in samples if zhu_two_components(x))
        disagreements = []
        direct_two = 0
        for i, x in enumerate(samples[:spot_checks]):
            count = fs_component_count(x, host).component_count
            if count == 2:
                direct_two += 1
            if (count == 2) != zhu_two_components(x):
                disagreements.append({
                    "sample_index": i,
                    "criterion": zhu_two_components(x),
                    "component_count": count,
                    "x_bg": emit_bg(x),
                })
        part_a = {
            "mode": "criterion+spot",
            "criterion_checked": criterion_draws,
            "criterion_all_true": criterion_ok == criterion_draws,
            "direct_spot_checks": spot_checks,
            "spot_all_two": direct_two == spot_checks,
            "disagreements": disagreements,
            "seed": seed,
        }

    witness = cycle_host(r)
    count = fs_component_count(witness, host).component_count
    part_b = {
        "witness_bg": emit_bg(witness),
        "delta": witness.min_degree(),
        "component_count": count,
        "count_is_two": count == 2,
    }
    if r >= 5:
        part_b["criterion_verdict"] = zhu_two_components(witness)
        part_b["failure_mode"] = (
            "disconnected" if not is_connected(witness)
            else "cycle" if is_cycle(witness)
            else "bridge"
        )

    return CorollaryReport(
        r=r,
        d_symmetric=d_symmetric,
        d_star=d_star,
        part_a=part_a,
        part_b=part_b,
    )
