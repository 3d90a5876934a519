"""State-space engine: swaps, parity, component census, reachability."""

import numpy as np
import pytest

from bipfs import (
    Bijection,
    apply_swap,
    complete_host,
    count_isolated_states,
    cycle_host,
    exchangeable,
    fs_component_count,
    make_bigraph,
    parity_class,
    swap_legal,
)
from helpers import bfs_component_count, legal_swaps, random_bigraph


def test_bijection_construction():
    b = Bijection([2, 0, 1, 3])
    assert b.place == (2, 0, 1, 3)
    assert b.pos == (1, 2, 0, 3)
    assert b.n == 4
    assert b == Bijection((2, 0, 1, 3))
    assert Bijection.identity(3).place == (0, 1, 2)


def test_bijection_rejects_non_permutation():
    with pytest.raises(ValueError):
        Bijection([0, 0, 1])


def test_bijection_immutable():
    b = Bijection.identity(4)
    with pytest.raises(AttributeError):
        b.place = (1, 0, 2, 3)


def test_apply_swap_moves_tokens():
    b = Bijection.identity(4)
    c = apply_swap(b, 0, 2)
    assert c.place == (2, 1, 0, 3)
    assert apply_swap(c, 0, 2) == b


def test_swap_legal_needs_both_adjacencies(k33, c6):
    b = Bijection.identity(6)
    # tokens 0,3 are c6-adjacent and sit on k33-adjacent positions
    assert swap_legal(k33, c6, b, 0, 3)
    # tokens 0,4 are not adjacent in this cycle
    assert not swap_legal(k33, c6, b, 0, 4)
    # positions matter too: under x = c6 tokens on non-adjacent positions stay
    assert not swap_legal(c6, c6, apply_swap(b, 0, 3), 0, 1)


def test_parity_class_identity_and_swap():
    b = Bijection.identity(6)
    assert parity_class(3, b) == (0 + 3) % 2
    # one swap across the sides flips inversions odd and on_a by one: the
    # class is invariant
    c = apply_swap(b, 0, 3)
    assert parity_class(3, c) == parity_class(3, b)


def test_parity_class_checks_size():
    with pytest.raises(ValueError):
        parity_class(3, Bijection.identity(4))


# -- component census --------------------------------------------------------


def test_complete_pair_r2():
    rep = fs_component_count(complete_host(2), complete_host(2))
    assert rep.component_count == 2
    assert rep.component_sizes == {12: 2}
    assert rep.parity_split == (12, 12)
    assert rep.states_explored == 24


def test_complete_pair_r3(k33):
    rep = fs_component_count(k33, k33)
    assert rep.component_count == 2
    assert rep.component_sizes == {360: 2}
    assert rep.parity_split == (360, 360)


def test_cycle_against_complete(k33, c6):
    rep = fs_component_count(k33, c6)
    assert rep.component_count == 12
    assert rep.component_sizes == {60: 12}
    assert rep.parity_split == (360, 360)
    # the two arguments play symmetric roles
    swapped = fs_component_count(c6, k33)
    assert swapped.component_count == 12
    assert swapped.component_sizes == {60: 12}


def test_census_refuses_past_cap(k33):
    with pytest.raises(ValueError):
        fs_component_count(k33, k33, cap=4)


def test_two_block_census():
    # K_{1,2} + K_{2,1} against K_{3,3} freezes 72 placements solid
    x = make_bigraph(3, [(0, 4), (0, 5), (1, 3), (2, 3)])
    rep = fs_component_count(x, complete_host(3))
    assert rep.component_count == 144
    assert sum(n * c for n, c in rep.component_sizes.items()) == 720
    assert rep.component_sizes[1] == 72


def test_component_count_symmetry():
    rng = np.random.default_rng(42)
    for _ in range(20):
        r = int(rng.integers(2, 4))
        x = random_bigraph(r, rng, 0.6)
        y = random_bigraph(r, rng, 0.6)
        a = fs_component_count(x, y)
        b = fs_component_count(y, x)
        assert a.component_count == b.component_count
        assert a.component_sizes == b.component_sizes


def test_union_find_matches_bfs_oracle():
    rng = np.random.default_rng(7)
    for _ in range(12):
        r = int(rng.integers(2, 4))
        x = random_bigraph(r, rng, 0.55)
        y = random_bigraph(r, rng, 0.55)
        assert fs_component_count(x, y).component_count == bfs_component_count(x, y)


def test_parity_constant_along_random_walk(k44):
    rng = np.random.default_rng(3)
    b = Bijection(rng.permutation(8))
    cls = parity_class(4, b)
    for _ in range(400):
        moves = legal_swaps(k44, k44, b)
        assert moves
        u, v = moves[rng.integers(len(moves))]
        b = apply_swap(b, u, v)
        assert parity_class(4, b) == cls


# -- reachability ------------------------------------------------------------


def test_exchangeable_across_sides(k33):
    b = Bijection.identity(6)
    res = exchangeable(k33, k33, b, 0, 3)
    assert res.status == "exchangeable"
    assert res.decided
    assert res.witness == [(0, 3)]


def test_same_side_trade_is_parity_blocked(k33):
    # trading two tokens of one side keeps on_a but flips the inversion
    # count, so the target lives in the other component
    res = exchangeable(k33, k33, Bijection.identity(6), 0, 1)
    assert res.status == "not_exchangeable"
    assert res.witness is None


def test_exchange_witness_replays():
    k33 = complete_host(3)
    x = make_bigraph(
        3, [(0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]
    )  # complete host minus the edge {0,3}: no single-swap shortcut
    b = Bijection.identity(6)
    res = exchangeable(x, k33, b, 0, 3)
    assert res.status == "exchangeable"
    assert len(res.witness) > 1
    cur = b
    for u, v in res.witness:
        assert swap_legal(x, k33, cur, u, v)
        cur = apply_swap(cur, u, v)
    assert cur == apply_swap(b, 0, 3)


def test_exchange_blocked_on_cycle(k33, c6):
    # FS(K33, C6) splits into 12 pieces; tokens 0 and 4 sit in different
    # orbits of the identity's piece
    res = exchangeable(k33, c6, Bijection.identity(6), 0, 4)
    assert res.status == "not_exchangeable"
    assert res.witness is None


def test_exchange_budget_exhaustion(k44):
    res = exchangeable(k44, k44, Bijection.identity(8), 0, 1, budget=3)
    assert res.status == "inconclusive"
    assert not res.decided


def test_isolated_exhaustive_two_block():
    x = make_bigraph(3, [(0, 4), (0, 5), (1, 3), (2, 3)])
    res = count_isolated_states(x, complete_host(3), count_all=True)
    assert res.found and res.exhaustive
    assert res.isolated_total == 72
    # the witness really is stuck
    w = res.witness
    for a, b in x.edges():
        assert not complete_host(3).has_edge(w.place[a], w.place[b])


def test_isolated_none_on_complete_pair(k33):
    res = count_isolated_states(k33, k33, count_all=True)
    assert not res.found
    assert res.exhaustive
    assert res.isolated_total == 0


def test_isolated_random_fallback():
    x = make_bigraph(3, [(0, 4), (0, 5), (1, 3), (2, 3)])
    res = count_isolated_states(x, complete_host(3), budget=5000, seed=11, cap=4)
    assert not res.exhaustive
    # 10% of states are frozen; 5000 draws miss with prob ~ 1e-229
    assert res.found
    w = res.witness
    for a, b in x.edges():
        assert not complete_host(3).has_edge(w.place[a], w.place[b])


def test_isolated_random_reproducible():
    x = make_bigraph(3, [(0, 4), (0, 5), (1, 3), (2, 3)])
    a = count_isolated_states(x, complete_host(3), budget=5000, seed=4, cap=4)
    b = count_isolated_states(x, complete_host(3), budget=5000, seed=4, cap=4)
    assert a.witness == b.witness
    assert a.states_checked == b.states_checked
