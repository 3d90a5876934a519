"""Extremal scans: enumeration, degree-sum sweeps, tightness, corollary."""

import itertools

import numpy as np
import pytest

from bipfs import (
    complete_host,
    corollary_check,
    cycle_host,
    enumerate_subgraphs,
    fs_component_count,
    parse_bg,
    theorem_scan,
    tightness_search,
)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_subgraphs(2)) == 16
    assert sum(1 for _ in enumerate_subgraphs(3)) == 512
    assert sum(1 for _ in enumerate_subgraphs(3, min_deg=2)) == 34
    assert sum(1 for _ in enumerate_subgraphs(3, min_deg=3)) == 1
    assert sum(1 for _ in enumerate_subgraphs(4, min_deg=3)) == 209


def test_enumeration_yields_valid_distinct_graphs():
    seen = set()
    for g in enumerate_subgraphs(3, min_deg=2):
        assert g.r == 3
        assert g.min_degree() >= 2
        seen.add(g.adj)
    assert len(seen) == 34


def test_enumeration_refuses_large_r():
    with pytest.raises(ValueError):
        list(enumerate_subgraphs(5))


def test_scan_at_full_degree_is_trivially_clean():
    rep = theorem_scan(3, 6)
    assert rep.mode == "exhaustive"
    assert rep.pairs_tested == 1
    assert rep.theorem_held
    assert rep.profile_counts == {(3, 3): 1}
    assert rep.seed is None


def test_small_r_fails_below_the_threshold():
    # the degree-sum bound needs r >= 4: at r = 3 the sum-5 boundary still
    # holds counterexamples, the spanning cycle against the complete host
    rep = theorem_scan(3, 5)
    assert not rep.theorem_held
    assert rep.pairs_tested == 67
    cycle_adj = cycle_host(3).adj
    hits = [c for c in rep.counterexamples if cycle_adj in (c.x.adj, c.y.adj)]
    assert hits
    assert all(c.component_count != 2 for c in rep.counterexamples)
    # replay one counterexample from its serialized form
    d = hits[0].to_dict()
    x = parse_bg(d["x_bg"])
    y = parse_bg(d["y_bg"])
    assert fs_component_count(x, y).component_count == d["component_count"]


def test_scan_is_deterministic():
    a = theorem_scan(3, 5)
    b = theorem_scan(3, 5)
    assert a.to_dict() == b.to_dict()


def test_scan_counterexample_set_is_order_independent():
    rep = theorem_scan(3, 5)
    got = {(c.x.adj, c.y.adj) for c in rep.counterexamples}
    # recompute over the same profiles in reversed enumeration order
    want = set()
    pool2 = list(enumerate_subgraphs(3, min_deg=2))
    pool3 = list(enumerate_subgraphs(3, min_deg=3))
    pairs = [
        (x, y)
        for x, y in itertools.chain(
            itertools.product(pool2, pool3),
            itertools.product(pool3, pool2),
            itertools.product(pool3, pool3),
        )
        if x.min_degree() + y.min_degree() == 5 or (x.min_degree(), y.min_degree()) == (3, 3)
    ]
    for x, y in reversed(pairs):
        if fs_component_count(x, y).component_count != 2:
            want.add((x.adj, y.adj))
    assert got == want


def test_random_scan_reproducible():
    a = theorem_scan(4, 7, mode="random", budget=25, seed=5)
    b = theorem_scan(4, 7, mode="random", budget=25, seed=5)
    assert a.mode == "random"
    assert a.pairs_tested == 25
    assert a.seed == 5
    assert a.to_dict() == b.to_dict()
    assert "25" in a.note
    assert a.theorem_held


def test_random_scan_profiles_respect_bound():
    rep = theorem_scan(4, 7, mode="random", budget=30, seed=1)
    for dx, dy in rep.profile_counts:
        assert dx + dy >= 7


def test_tightness_finds_the_cycle_witness():
    rep = tightness_search(3, 4)
    assert rep.mode == "exhaustive"
    assert not rep.theorem_held or rep.witnesses  # witnesses double as counterexamples
    assert rep.witnesses
    cycle_adj = cycle_host(3).adj
    hit = [
        w
        for w in rep.witnesses
        if w.kind == "component_count" and cycle_adj in (w.x.adj, w.y.adj)
        and 3 in (w.x.min_degree(), w.y.min_degree())
    ]
    assert hit
    assert any(w.component_count == 12 for w in hit)


def test_tightness_witnesses_replay():
    rep = tightness_search(3, 4)
    for w in rep.witnesses[:6]:
        d = w.to_dict()
        x = parse_bg(d["x_bg"])
        y = parse_bg(d["y_bg"])
        if d["kind"] == "isolated":
            place = d["isolated_state"]
            for a, b in x.edges():
                assert not y.has_edge(place[a], place[b])
        else:
            assert fs_component_count(x, y).component_count == d["component_count"]
            assert d["component_count"] != 2


def test_tightness_budget_degrades_to_random_label():
    full = tightness_search(3, 4)
    capped = tightness_search(3, 4, budget=40)
    assert capped.mode == "random"
    assert capped.pairs_tested == 40
    assert "40" in capped.note
    assert full.mode == "exhaustive"
    assert full.pairs_tested > 40


def test_tightness_rejects_wrong_sum():
    with pytest.raises(ValueError):
        tightness_search(3, 5)
    with pytest.raises(ValueError):
        tightness_search(4, 7)


def test_tightness_random_r5_reproducible():
    a = tightness_search(5, 7, budget=60, seed=9)
    b = tightness_search(5, 7, budget=60, seed=9)
    assert a.mode == "random"
    assert {w.x.adj for w in a.witnesses} == {w.x.adj for w in b.witnesses}
    assert a.pairs_tested == b.pairs_tested == 60


def test_corollary_r3():
    rep = corollary_check(3)
    assert rep.d_star == 3
    assert rep.d_symmetric == 3
    assert rep.part_a["mode"] == "exhaustive"
    assert rep.part_a["graphs_tested"] == 1
    assert rep.part_a["all_two_components"]
    assert rep.part_b["delta"] == 2
    assert rep.part_b["component_count"] == 12
    assert not rep.part_b["count_is_two"]


def test_corollary_rejects_unsupported_r():
    with pytest.raises(ValueError):
        corollary_check(6)


def test_cycle_component_counts_scale():
    # FS(C_{2r}, K_{r,r}) pinned at small r; these back the part (b) witness
    assert fs_component_count(cycle_host(3), complete_host(3)).component_count == 12
    assert fs_component_count(cycle_host(4), complete_host(4)).component_count == 144
