"""Exact oracles cross-checked against the naive reference implementations."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from naive import (
    naive_alpha,
    naive_hamilton_cycle,
    naive_hamilton_path,
    naive_toughness,
)
from toughgraph import (
    BlockKind,
    SizeLimitError,
    block,
    complete_bipartite,
    complete_graph,
    cutset_witness,
    disjoint_union,
    has_hamilton_path,
    independence_number,
    inflate_triangles,
    is_hamiltonian,
    make_graph,
    petersen,
    toughness_exact,
    toughness_upper_search,
    unit_toughness_graph,
)
from toughgraph.oracles import _kth_combination


def _random_graph(rng: random.Random, n: int, p: float):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return make_graph(n, edges)


def _cycle(n: int):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- toughness -------------------------------------------------------------


def test_toughness_known_values():
    assert toughness_exact(complete_bipartite(2, 3)).value == Fraction(2, 3)
    assert toughness_exact(_cycle(5)).value == 1
    assert toughness_exact(petersen()).value == Fraction(4, 3)
    assert toughness_exact(unit_toughness_graph()).value == 1
    inf = toughness_exact(complete_graph(4))
    assert inf.is_infinite and inf.value is None and inf.witness is None


def test_toughness_disconnected_is_zero():
    r = toughness_exact(make_graph(4, [(0, 1), (2, 3)]))
    assert r.value == 0
    assert r.witness.cutset == frozenset()
    assert r.witness.component_count == 2


def test_toughness_witness_is_self_consistent():
    r = toughness_exact(complete_bipartite(2, 3))
    w = r.witness
    assert w.cutset == frozenset({0, 1})
    assert w.component_count == 3
    assert w.ratio == r.value
    assert cutset_witness(complete_bipartite(2, 3), w.cutset).ratio == r.value


def test_toughness_matches_naive_random():
    rng = random.Random(4242)
    checked = 0
    for trial in range(40):
        n = rng.randrange(1, 9)
        g = _random_graph(rng, n, rng.uniform(0.2, 0.9))
        expect = naive_toughness(g)
        got = toughness_exact(g)
        if expect is None:
            assert got.is_infinite
        else:
            assert got.value == expect
            checked += 1
    assert checked >= 20  # the corpus was not all complete graphs


def test_toughness_parallel_agrees_with_serial():
    gs = [
        complete_bipartite(3, 5),
        petersen(),
        _random_graph(random.Random(5), 14, 0.3),
    ]
    for g in gs:
        a = toughness_exact(g, workers=1)
        b = toughness_exact(g, workers=2)
        assert a.value == b.value
        if a.witness is not None:
            assert a.witness.cutset == b.witness.cutset


def test_toughness_size_cap():
    star = make_graph(30, [(0, v) for v in range(1, 30)])
    with pytest.raises(SizeLimitError):
        toughness_exact(star)
    # raising the cap runs fine: the hub cut is found at k=1 and the
    # size-class bound stops the enumeration right there
    assert toughness_exact(star, max_n=30).value == Fraction(1, 29)


def test_cutset_witness_validates():
    with pytest.raises(ValueError):
        cutset_witness(complete_graph(4), frozenset({0}))
    with pytest.raises(ValueError):
        cutset_witness(complete_graph(4), frozenset({7}))


def test_upper_search_finds_good_cuts():
    w = toughness_upper_search(complete_bipartite(2, 3), seed=3)
    assert w is not None
    assert w.ratio >= Fraction(2, 3)  # any witness upper-bounds tau
    # on this graph the optimum is easy to hit
    assert w.ratio == Fraction(2, 3)
    w6 = toughness_upper_search(_cycle(6), seed=1)
    assert w6.ratio == 1


def test_upper_search_disconnected_and_complete():
    w = toughness_upper_search(make_graph(3, [(0, 1)]))
    assert w.cutset == frozenset() and w.ratio == 0
    with pytest.raises(ValueError):
        toughness_upper_search(complete_graph(5))


def test_upper_search_never_beats_exact():
    rng = random.Random(99)
    for trial in range(15):
        g = _random_graph(rng, rng.randrange(5, 12), 0.5)
        if g.is_complete():
            continue
        exact = toughness_exact(g).value
        w = toughness_upper_search(g, budget=500, seed=trial)
        assert w.ratio >= exact


def test_kth_combination_unranks_lexicographically():
    from itertools import combinations
    from math import comb

    for n, k in ((5, 3), (8, 1), (8, 8), (9, 4)):
        expect = [list(c) for c in combinations(range(n), k)]
        got = [_kth_combination(i, n, k) for i in range(comb(n, k))]
        assert got == expect


# -- hamiltonicity -----------------------------------------------------------


def test_hamilton_known_values():
    assert is_hamiltonian(complete_graph(3)).verdict is True
    assert is_hamiltonian(_cycle(8)).verdict is True
    assert is_hamiltonian(petersen()).verdict is False
    assert is_hamiltonian(unit_toughness_graph()).verdict is False
    assert is_hamiltonian(complete_bipartite(2, 3)).verdict is False
    assert is_hamiltonian(complete_graph(2)).verdict is False
    assert is_hamiltonian(make_graph(1, [])).verdict is False


def test_hamilton_cycle_witness_is_a_cycle():
    g = petersen()
    g2 = make_graph(10, g.edges() + [(0, 2), (5, 6)])
    res = is_hamiltonian(g2)
    if res.verdict:
        walk = res.witness
        assert sorted(walk) == list(range(10))
        for u, v in zip(walk, walk[1:]):
            assert g2.has_edge(u, v)
        assert g2.has_edge(walk[-1], walk[0])


def test_hamilton_matches_naive_random():
    rng = random.Random(321)
    for trial in range(60):
        n = rng.randrange(3, 8)
        g = _random_graph(rng, n, rng.uniform(0.3, 0.9))
        assert is_hamiltonian(g).verdict is naive_hamilton_cycle(g)


def test_hamilton_dp_and_backtracking_agree():
    rng = random.Random(7171)
    for trial in range(25):
        n = rng.randrange(6, 13)
        g = _random_graph(rng, n, 0.7)
        a = is_hamiltonian(g, dp_limit=n)  # offer the subset DP
        b = is_hamiltonian(g, dp_limit=0)  # force backtracking
        assert a.verdict is b.verdict
        assert a.method in ("subset-dp", "trivial") or not _dense(g)
        assert b.method in ("backtracking", "trivial")


def _dense(g) -> bool:
    return 4 * g.edge_count >= g.n * (g.n - 1)


def test_path_matches_naive_random():
    rng = random.Random(11)
    for trial in range(50):
        n = rng.randrange(2, 8)
        g = _random_graph(rng, n, rng.uniform(0.3, 0.9))
        x, y = rng.sample(range(n), 2)
        assert has_hamilton_path(g, x, y).verdict is naive_hamilton_path(g, x, y)


def test_path_endpoint_validation():
    with pytest.raises(ValueError):
        has_hamilton_path(complete_graph(3), 0, 0)
    with pytest.raises(ValueError):
        has_hamilton_path(complete_graph(3), 0, 3)


def test_path_witness_endpoints():
    res = has_hamilton_path(complete_graph(5), 2, 4)
    assert res.verdict is True
    walk = res.witness
    assert walk[0] == 2 and walk[-1] == 4
    assert sorted(walk) == list(range(5))


def test_block_terminal_paths():
    # the composed graphs are nonhamiltonian precisely because the first
    # three kinds refuse a spanning terminal path and the fourth accepts
    for kind, expect in (
        (BlockKind.L1, False),
        (BlockKind.L2, False),
        (BlockKind.L3, False),
        (BlockKind.L4, True),
    ):
        b = block(kind)
        res = has_hamilton_path(b.graph, b.x, b.y)
        assert res.verdict is expect


def test_budget_exhaustion_returns_unknown():
    g = inflate_triangles(petersen())
    res = is_hamiltonian(g, node_limit=10)
    assert res.verdict is None
    assert res.method == "backtracking"
    assert res.nodes > 10


def test_inflated_petersen_not_hamiltonian():
    res = is_hamiltonian(inflate_triangles(petersen()))
    assert res.verdict is False
    assert res.nodes < 100_000


def test_disconnected_short_circuits():
    g = disjoint_union([complete_graph(3), complete_graph(3)])
    res = is_hamiltonian(g)
    assert res.verdict is False and res.method == "trivial"
    assert has_hamilton_path(g, 0, 5).verdict is False


# -- independence -------------------------------------------------------------


def test_alpha_known_values():
    assert independence_number(complete_graph(6)) == 1
    assert independence_number(complete_bipartite(2, 3)) == 3
    assert independence_number(petersen()) == 4
    assert independence_number(_cycle(7)) == 3
    assert independence_number(make_graph(4, [])) == 4


def test_alpha_matches_naive_random():
    rng = random.Random(2024)
    for trial in range(40):
        n = rng.randrange(1, 12)
        g = _random_graph(rng, n, rng.uniform(0.1, 0.9))
        assert independence_number(g) == naive_alpha(g)


def test_alpha_size_cap():
    big = make_graph(49, [])
    with pytest.raises(SizeLimitError):
        independence_number(big)
    assert independence_number(big, max_n=49) == 49
