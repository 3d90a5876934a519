"""Bipartite host graphs: construction, structure probes, bridges, parsing."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipfs import (
    BgParseError,
    BiGraph,
    census,
    complete_host,
    cycle_host,
    emit_bg,
    find_bridges,
    from_matrix,
    is_connected,
    is_cycle,
    make_bigraph,
    parse_bg,
    sample_gnp,
    zhu_two_components,
)
from helpers import brute_bridges, brute_cut_edges, random_bigraph


def test_make_bigraph_basics():
    g = make_bigraph(2, [(0, 2), (1, 3), (0, 3)])
    assert g.r == 2 and g.n == 4
    assert g.edge_count() == 3
    assert g.has_edge(0, 2) and g.has_edge(3, 0)
    assert not g.has_edge(1, 2)
    # same-side pairs are never edges
    assert not g.has_edge(0, 1)
    assert g.degrees() == (2, 1, 1, 2)
    assert g.min_degree() == 1


def test_make_bigraph_rejects_same_side_edge():
    with pytest.raises(ValueError):
        make_bigraph(2, [(0, 1)])


def test_make_bigraph_rejects_out_of_range():
    with pytest.raises(ValueError):
        make_bigraph(2, [(0, 4)])


def test_constructor_rejects_mismatched_rows():
    # bit set on one side only
    with pytest.raises(ValueError):
        BiGraph(2, (1, 0, 0, 0))


def test_hosts():
    k = complete_host(3)
    assert k.edge_count() == 9
    assert k.degrees() == (3,) * 6
    c = cycle_host(3)
    assert c.edge_count() == 6
    assert c.degrees() == (2,) * 6
    assert is_cycle(c)
    assert not is_cycle(k)
    assert is_connected(c) and is_connected(k)


def test_connectivity():
    g = make_bigraph(2, [(0, 2)])
    assert not is_connected(g)
    g2 = make_bigraph(2, [(0, 2), (0, 3), (1, 3)])
    assert is_connected(g2)


def test_spanning_path_bridge(path10):
    rep = find_bridges(path10)
    # the interior of the path is one long bridge; degree-1 tips are shaved
    assert rep.max_k == 8
    assert len(rep.bridges) == 1
    assert len(rep.bridges[0]) == 8


def test_cycle_has_no_bridges():
    assert find_bridges(cycle_host(4)).max_k == 0
    assert find_bridges(complete_host(3)).max_k == 0


def test_pendant_edge_is_not_a_bridge():
    # single pendant hanging off a 4-cycle: its cut edge dies at a degree-1
    # endpoint, so no bridge survives
    g = make_bigraph(3, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3)])
    rep = find_bridges(g)
    assert rep.max_k == 0


def test_two_cycles_joined_by_chain():
    # 4-cycle on {0,1}x{4,5}, 4-cycle on {2,3}x{6,7}, chain 4-2 joining them
    g = make_bigraph(
        4,
        [(0, 4), (0, 5), (1, 4), (1, 5), (2, 6), (2, 7), (3, 6), (3, 7), (2, 4)],
    )
    rep = find_bridges(g)
    assert rep.bridges == [[2, 4]]
    assert rep.max_k == 2


def test_bridge_oracle_agreement():
    rng = np.random.default_rng(1304)
    for i in range(300):
        r = int(rng.integers(2, 7))
        p = float(rng.uniform(0.12, 0.55))
        g = random_bigraph(r, rng, p)
        want_paths, want_k = brute_bridges(g)
        rep = find_bridges(g)
        assert rep.bridges == want_paths, f"graph {i}: {emit_bg(g)}"
        assert rep.max_k == want_k


def test_cut_edge_oracle_spotcheck():
    rng = np.random.default_rng(77)
    from bipfs.bigraph import _cut_edges

    for _ in range(120):
        r = int(rng.integers(2, 6))
        g = random_bigraph(r, rng, float(rng.uniform(0.15, 0.6)))
        assert _cut_edges(g) == brute_cut_edges(g)


def test_zhu_on_known_shapes():
    assert zhu_two_components(complete_host(5))
    assert not zhu_two_components(cycle_host(5))  # cycle
    assert not zhu_two_components(make_bigraph(5, [(0, 5)]))  # disconnected
    # spanning path on 10 vertices has an 8-bridge >= r
    order = [0, 5, 1, 6, 2, 7, 3, 8, 4, 9]
    path = make_bigraph(5, list(zip(order, order[1:])))
    assert not zhu_two_components(path)


def test_zhu_rejects_small_r():
    with pytest.raises(ValueError):
        zhu_two_components(complete_host(4))


def test_census_on_cycle_and_complete(k33, c6):
    s = census(c6)
    # a spanning cycle of degree-2 vertices puts the graph in C1
    assert s.in_C1
    assert s.tree_component_counts == {}
    assert s.largest_tree_component == 0
    assert s.isolated_count == 0
    t = census(k33)
    assert not t.in_C1  # no degree-2 vertex at all
    assert t.isolated_count == 0


def test_census_counts_trees_and_isolated():
    g = make_bigraph(3, [(0, 3), (0, 4), (1, 5)])
    s = census(g)
    assert s.in_C1  # path 3-0-4 has its interior vertex at degree 2
    assert s.tree_component_counts == {1: 1, 2: 1, 3: 1}
    assert s.largest_tree_component == 3
    assert s.largest_path_component == 3
    assert s.isolated_count == 1


def test_sample_gnp_reproducible():
    a = sample_gnp(6, 0.4, seed=9)
    b = sample_gnp(6, 0.4, seed=9)
    c = sample_gnp(6, 0.4, seed=10)
    assert a == b
    assert a != c
    assert a.r == 6


def test_sample_gnp_extremes():
    assert sample_gnp(4, 0.0, seed=0).edge_count() == 0
    assert sample_gnp(4, 1.0, seed=0) == complete_host(4)


def test_from_matrix_roundtrip():
    g = make_bigraph(3, [(0, 3), (1, 4), (2, 5), (0, 4)])
    # biadjacency block: m[a][b] set iff edge (a, r+b)
    m = np.zeros((3, 3), dtype=bool)
    for a, b in g.edges():
        m[a, b - 3] = True
    assert from_matrix(m) == g


def test_bg_roundtrip():
    rng = np.random.default_rng(5)
    for _ in range(40):
        g = random_bigraph(int(rng.integers(1, 7)), rng, 0.5)
        assert parse_bg(emit_bg(g)) == g


@given(st.integers(min_value=1, max_value=6), st.data())
@settings(max_examples=60, deadline=None)
def test_bg_roundtrip_property(r, data):
    possible = [(a, r + b) for a in range(r) for b in range(r)]
    edges = data.draw(st.lists(st.sampled_from(possible), unique=True, max_size=len(possible)))
    g = make_bigraph(r, edges)
    assert parse_bg(emit_bg(g, comment="generated")) == g
    assert g.edge_count() == len(edges)


def test_bg_comments_and_blank_lines():
    text = "# hand-written\n\nr 2\n0 2\n\n1 3\n"
    g = parse_bg(text)
    assert g == make_bigraph(2, [(0, 2), (1, 3)])


def test_bg_parse_errors_name_line():
    with pytest.raises(BgParseError) as ei:
        parse_bg("r 2\n0 1\n", source="bad.bg")
    msg = str(ei.value)
    assert "bad.bg" in msg and "2" in msg

    with pytest.raises(BgParseError):
        parse_bg("0 2\n")  # missing header

    with pytest.raises(BgParseError):
        parse_bg("r 2\n0 2\n0 2\n")  # duplicate edge
