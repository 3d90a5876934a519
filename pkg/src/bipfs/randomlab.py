"""Monte Carlo lab for the phase transition of random edge-subgraphs.

Fix the token graph at K_{r,r} and draw the position graph X from
G(K_{r,r}, p).  Around p = (log r)/r the state space flips from many
components to exactly two, and the structural criterion (connected, not a
cycle, no r-bridge) decides each sample in graph time instead of (2r)!
time.  The lab sweeps p across that window, attributes every failure to
the first criterion clause that catches it, tracks the isolated-vertex
count of X against its exact first moment 2r(1-p)^r, and can cross-check
the criterion against dense engine counts at r = 5.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .bigraph import BiGraph, complete_host, find_bridges, is_connected, is_cycle, emit_bg, sample_gnp, zhu_two_components
from .engine import fs_component_count

__all__ = [
    "SweepConfig",
    "SweepRow",
    "AgreementReport",
    "expected_isolated",
    "classify_sample",
    "sweep",
    "cross_validate",
    "emit_csv",
    "parse_csv",
    "isolated_vertex_stats",
]

_CSV_COLUMNS = (
    "p", "n", "frac_two", "frac_disc", "frac_cycle", "frac_bridge",
    "mean_X1", "expected_X1", "se_two",
)

_CLASSES = ("two", "disconnected", "cycle", "bridge")


def expected_isolated(r: int, p: float) -> float:
    """Exact expected number of isolated vertices of X in G(K_{r,r}, p).

    Each of the 2r vertices misses all of its r possible edges
    independently with probability (1-p)^r.

    >>> expected_isolated(4, 0.25)
    2.53125
    >>> expected_isolated(7, 0.0)
    14.0
    >>> expected_isolated(7, 1.0)
    0.0
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return 2.0 * r * (1.0 - p) ** r


def classify_sample(g: BiGraph) -> str:
    """First criterion clause that fails, or "two" when all three hold.

    The order is fixed: disconnected, then cycle, then a bridge on >= r
    vertices.  Exactly one label applies to every graph, so tallies over
    these labels partition any sample set.
    """
    if not is_connected(g):
        return "disconnected"
    if is_cycle(g):
        return "cycle"
    if find_bridges(g).max_k >= g.r:
        return "bridge"
    return "two"


@dataclass(frozen=True)
class SweepConfig:
    """One sweep request: a p-grid, a sample count per point, and a seed.

    The grid is given either directly (p_grid) or as offsets c with
    p = (log r + c)/r, playing the role of the theorem's diverging window
    at a finite r.  cross_validate asks the sweep to double-check the
    classifier against dense engine counts first (r = 5 only).
    """

    r: int
    p_grid: Optional[tuple[float, ...]] = None
    offsets: Optional[tuple[float, ...]] = None
    samples_per_point: int = 100
    seed: int = 0
    cross_validate: bool = False

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        if (self.p_grid is None) == (self.offsets is None):
            raise ValueError("give exactly one of p_grid or offsets")
        if self.samples_per_point < 1:
            raise ValueError("samples_per_point must be at least 1")
        if self.p_grid is not None:
            object.__setattr__(self, "p_grid", tuple(float(p) for p in self.p_grid))
        if self.offsets is not None:
            object.__setattr__(self, "offsets", tuple(float(c) for c in self.offsets))
        for p in self.grid():
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"grid point p={p} falls outside [0, 1]")

    def grid(self) -> tuple[float, ...]:
        if self.p_grid is not None:
            return self.p_grid
        return tuple((math.log(self.r) + c) / self.r for c in self.offsets)


@dataclass(frozen=True)
class SweepRow:
    """Tallies for one grid point.

    The four fractions use the classify_sample attribution, so they sum
    to 1 over any sample set.  mean_isolated is the empirical mean of the
    isolated-vertex count of X; expected_isolated is its exact first
    moment.  Standard errors are the usual binomial sqrt(f(1-f)/n).
    """

    p: float
    n_samples: int
    frac_two_components: float
    frac_disconnected: float
    frac_cycle: float
    frac_has_r_bridge: float
    mean_isolated: float
    expected_isolated: float
    se_two: float
    se_disconnected: float
    se_cycle: float
    se_bridge: float

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n_samples": self.n_samples,
            "frac_two_components": self.frac_two_components,
            "frac_disconnected": self.frac_disconnected,
            "frac_cycle": self.frac_cycle,
            "frac_has_r_bridge": self.frac_has_r_bridge,
            "mean_isolated": self.mean_isolated,
            "expected_isolated": self.expected_isolated,
            "se_two": self.se_two,
            "se_disconnected": self.se_disconnected,
            "se_cycle": self.se_cycle,
            "se_bridge": self.se_bridge,
        }


def _sample_seed(seed: int, p_index: int, sample_index: int) -> np.random.SeedSequence:
    # one root per (point, sample): reruns agree no matter how work is split
    return np.random.SeedSequence(seed, spawn_key=(p_index, sample_index))


def _classify_chunk(args) -> tuple[dict, int]:
    r, p, seed, p_index, lo, hi = args
    counts = {c: 0 for c in _CLASSES}
    isolated_sum = 0
    for si in range(lo, hi):
        g = sample_gnp(r, p, _sample_seed(seed, p_index, si))
        counts[classify_sample(g)] += 1
        isolated_sum += sum(1 for d in g.degrees() if d == 0)
    return counts, isolated_sum


def _binomial_se(successes: int, n: int) -> float:
    f = successes / n
    return math.sqrt(f * (1.0 - f) / n)


def sweep(cfg: SweepConfig, workers: int = 1) -> list[SweepRow]:
    """Classify samples_per_point draws at every grid point.

    Requires r >= 5, the hypothesis of the structural criterion.  Each
    sample's seed derives from (seed, point index, sample index), so the
    result is identical for any worker count.  When cfg.cross_validate is
    set the grid is first replayed at a small sample count against dense
    engine counts; a disagreement there aborts the sweep, since it would
    mean the classifier cannot be trusted.
    """
    if cfg.r < 5:
        raise ValueError(f"the structural criterion needs r >= 5, got r={cfg.r}")
    if cfg.cross_validate:
        if cfg.r != 5:
            raise ValueError("cross-validation against dense counts only runs at r = 5")
        pre = cross_validate(cfg.grid(), min(cfg.samples_per_point, 25), seed=cfg.seed)
        if not pre.all_agree:
            raise RuntimeError(
                f"classifier disagreed with dense counts on "
                f"{len(pre.disagreements)} of {pre.checked} samples: "
                f"{pre.disagreements[0]}"
            )

    grid = cfg.grid()
    per_point: list[tuple[dict, int]] = []
    if workers <= 1:
        for pi, p in enumerate(grid):
            per_point.append(_classify_chunk((cfg.r, p, cfg.seed, pi, 0, cfg.samples_per_point)))
    else:
        step = max(1, cfg.samples_per_point // (workers * 4))
        tasks = []
        for pi, p in enumerate(grid):
            for lo in range(0, cfg.samples_per_point, step):
                hi = min(lo + step, cfg.samples_per_point)
                tasks.append((cfg.r, p, cfg.seed, pi, lo, hi))
        with ProcessPoolExecutor(max_workers=workers) as ex:
            partials = list(ex.map(_classify_chunk, tasks))
        cursor = 0
        for pi, p in enumerate(grid):
            counts = {c: 0 for c in _CLASSES}
            isolated_sum = 0
            for lo in range(0, cfg.samples_per_point, step):
                part_counts, part_iso = partials[cursor]
                cursor += 1
                for c in _CLASSES:
                    counts[c] += part_counts[c]
                isolated_sum += part_iso
            per_point.append((counts, isolated_sum))

    rows = []
    n = cfg.samples_per_point
    for (counts, isolated_sum), p in zip(per_point, grid):
        rows.append(SweepRow(
            p=p,
            n_samples=n,
            frac_two_components=counts["two"] / n,
            frac_disconnected=counts["disconnected"] / n,
            frac_cycle=counts["cycle"] / n,
            frac_has_r_bridge=counts["bridge"] / n,
            mean_isolated=isolated_sum / n,
            expected_isolated=expected_isolated(cfg.r, p),
            se_two=_binomial_se(counts["two"], n),
            se_disconnected=_binomial_se(counts["disconnected"], n),
            se_cycle=_binomial_se(counts["cycle"], n),
            se_bridge=_binomial_se(counts["bridge"], n),
        ))
    return rows


@dataclass(frozen=True)
class AgreementReport:
    """Criterion verdicts versus dense component counts at r = 5."""

    p_list: tuple[float, ...]
    samples_per_p: int
    checked: int
    agreements: int
    disagreements: tuple[dict, ...]
    seed: int

    @property
    def all_agree(self) -> bool:
        return self.agreements == self.checked

    def to_dict(self) -> dict:
        return {
            "r": 5,
            "p_list": list(self.p_list),
            "samples_per_p": self.samples_per_p,
            "checked": self.checked,
            "agreements": self.agreements,
            "disagreements": list(self.disagreements),
            "seed": self.seed,
        }


def cross_validate(p_list: Sequence[float], n: int, seed: int = 0) -> AgreementReport:
    """Compare the structural criterion with exact counting at r = 5.

    r = 5 is the one size where the criterion applies and the dense
    engine still fits: every sample is classified both ways, and any
    split verdict is returned with the offending graph inline.
    """
    host = complete_host(5)
    checked = 0
    agreements = 0
    disagreements: list[dict] = []
    for pi, p in enumerate(p_list):
        for si in range(n):
            g = sample_gnp(5, p, _sample_seed(seed, pi, si))
            criterion = zhu_two_components(g)
            count = fs_component_count(g, host).component_count
            checked += 1
            if criterion == (count == 2):
                agreements += 1
            else:
                disagreements.append({
                    "p": p,
                    "sample_index": si,
                    "criterion": criterion,
                    "component_count": count,
                    "x_bg": emit_bg(g),
                })
    return AgreementReport(
        p_list=tuple(float(p) for p in p_list),
        samples_per_p=n,
        checked=checked,
        agreements=agreements,
        disagreements=tuple(disagreements),
        seed=seed,
    )


def emit_csv(rows: Sequence[SweepRow]) -> str:
    """Render sweep rows with a fixed header and shortest round-trip floats."""
    lines = [",".join(_CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join([
            repr(float(row.p)),
            str(row.n_samples),
            repr(float(row.frac_two_components)),
            repr(float(row.frac_disconnected)),
            repr(float(row.frac_cycle)),
            repr(float(row.frac_has_r_bridge)),
            repr(float(row.mean_isolated)),
            repr(float(row.expected_isolated)),
            repr(float(row.se_two)),
        ]))
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[dict]:
    """Inverse of emit_csv for the columns it writes; '#' lines are skipped."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != ",".join(_CSV_COLUMNS):
        raise ValueError("unrecognized header line")
    out = []
    for ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != len(_CSV_COLUMNS):
            raise ValueError(f"expected {len(_CSV_COLUMNS)} cells, got {len(cells)}")
        row = {}
        for name, cell in zip(_CSV_COLUMNS, cells):
            row[name] = int(cell) if name == "n" else float(cell)
        out.append(row)
    return out


def isolated_vertex_stats(r: int, p: float, samples: int, seed: int = 0) -> dict:
    """Empirical isolated-vertex count of X over fresh G(K_{r,r}, p) draws.

    Samples raw edge matrices without building graph objects, so large r
    stays affordable.  Returns the empirical mean, its standard error and
    the exact expectation for comparison.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    values = np.empty(samples, dtype=np.int64)
    for si in range(samples):
        rng = np.random.Generator(np.random.PCG64(_sample_seed(seed, 0, si)))
        m = rng.random((r, r)) < p
        values[si] = (~m.any(axis=1)).sum() + (~m.any(axis=0)).sum()
    mean = float(values.mean())
    se = float(values.std(ddof=1) / math.sqrt(samples)) if samples > 1 else 0.0
    return {
        "r": r,
        "p": p,
        "samples": samples,
        "mean_isolated": mean,
        "expected_isolated": expected_isolated(r, p),
        "se": se,
        "seed": seed,
    }
