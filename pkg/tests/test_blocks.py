"""Building blocks, composition operators, and the special families."""

from __future__ import annotations

import pytest

from toughgraph import (
    Block,
    BlockKind,
    block,
    complete_bipartite,
    complete_graph,
    components,
    disjoint_union,
    f_m,
    g_construct,
    inflate_triangles,
    inflation_cutset,
    make_graph,
    matched_layers,
    petersen,
)

# kind -> (order, size, x, y, cut core)
BLOCK_SHAPE = {
    BlockKind.L1: (8, 12, 0, 4, {1, 3, 5, 7}),
    BlockKind.L2: (7, 10, 0, 4, {1, 3, 5}),
    BlockKind.L3: (9, 14, 0, 4, {1, 3, 5, 7}),
    BlockKind.L4: (5, 5, 3, 4, {0, 2}),
}


def test_block_shapes_frozen():
    for kind, (n, m, x, y, core) in BLOCK_SHAPE.items():
        b = block(kind)
        assert b.n == n
        assert b.graph.edge_count == m
        assert (b.x, b.y) == (x, y)
        assert b.cut_core == frozenset(core)
        assert len(b.labels) == n


def test_block_is_cached_and_frozen():
    assert block(BlockKind.L1) is block(BlockKind.L1)
    with pytest.raises(Exception):
        block(BlockKind.L1).x = 1


def test_block_edge_sets_frozen():
    assert block(BlockKind.L2).graph.edges() == [
        (0, 1), (1, 2), (1, 3), (1, 5), (1, 6),
        (2, 3), (3, 4), (3, 5), (4, 5), (5, 6),
    ]
    assert block(BlockKind.L4).graph.edges() == [
        (0, 1), (0, 2), (0, 3), (1, 2), (2, 4),
    ]
    # the 9-vertex kind is the 8-vertex kind plus one degree-2 vertex
    l1 = set(block(BlockKind.L1).graph.edges())
    l3 = set(block(BlockKind.L3).graph.edges())
    assert l3 - l1 == {(3, 8), (5, 8)}


def test_blocks_are_connected():
    for kind in BlockKind:
        assert block(kind).graph.is_connected()


def test_cut_core_isolates_interior():
    # removing core + terminals must shatter the rest into singletons;
    # the composed witness ratio counts on one component per leftover
    for kind in BlockKind:
        b = block(kind)
        removed = set(b.cut_core) | {b.x, b.y}
        parts = components(b.graph, removed)
        assert len(parts) == b.n - len(removed)
        assert all(len(p) == 1 for p in parts)


def test_terminals_are_not_adjacent():
    for kind in BlockKind:
        b = block(kind)
        assert not b.graph.has_edge(b.x, b.y)


# -- composition -----------------------------------------------------------


def test_f_m_single_block():
    b = block(BlockKind.L2)
    g, pairs = f_m([b])
    assert g.n == 7
    assert pairs == ((0, 4),)
    # one terminal pair: the clique step adds just the xy edge
    assert g.edge_count == b.graph.edge_count + 1
    assert g.has_edge(0, 4)


def test_f_m_terminal_clique():
    blocks = [block(BlockKind.L1), block(BlockKind.L2), block(BlockKind.L4)]
    g, pairs = f_m(blocks)
    assert g.n == 8 + 7 + 5
    assert pairs == ((0, 4), (8, 12), (18, 19))
    flat = [v for pair in pairs for v in pair]
    assert all(
        g.has_edge(u, v) for i, u in enumerate(flat) for v in flat[i + 1 :]
    )
    base_m = sum(b.graph.edge_count for b in blocks)
    assert g.edge_count == base_m + 15  # C(6, 2) new terminal edges


def test_f_m_rejects_empty():
    with pytest.raises(ValueError):
        f_m([])


def test_g_construct_degenerate_cases():
    assert g_construct(3, []) == complete_graph(3)
    with pytest.raises(ValueError):
        g_construct(0, [])
    with pytest.raises(ValueError):
        g_construct(-1, [block(BlockKind.L1)])
    fm, _ = f_m([block(BlockKind.L1)])
    assert g_construct(0, [block(BlockKind.L1)]) == fm


def test_g_construct_join_layout():
    blocks = [block(BlockKind.L2), block(BlockKind.L2)]
    g = g_construct(3, blocks)
    assert g.n == 3 + 14
    # join vertices form a clique and see everything
    assert all(g.degree(v) == g.n - 1 for v in range(3))
    # block interiors keep their local degrees plus the join edges
    fm, _ = f_m(blocks)
    assert all(
        g.degree(3 + v) == fm.degree(v) + 3 for v in range(fm.n)
    )


# -- special families --------------------------------------------------------


def test_complete_bipartite_layout():
    g = complete_bipartite(2, 3)
    assert g.n == 5 and g.edge_count == 6
    assert not g.has_edge(0, 1) and not g.has_edge(2, 3)
    assert all(g.has_edge(i, 2 + j) for i in range(2) for j in range(3))


def test_matched_layers_structure():
    a, b = 7, 5
    g = matched_layers(a, b)
    n1 = a - b + 1
    assert g.n == n1 + 2 * b
    # universal layer
    assert all(g.degree(v) == g.n - 1 for v in range(n1))
    # middle layer independent, matched to the clique layer
    for i in range(b):
        yi, zi = n1 + i, n1 + b + i
        assert g.degree(yi) == n1 + 1
        assert g.has_edge(yi, zi)
        for j in range(i + 1, b):
            assert not g.has_edge(yi, n1 + j)
            assert g.has_edge(zi, n1 + b + j)


def test_matched_layers_rejects_bad_parameters():
    with pytest.raises(ValueError):
        matched_layers(3, 3)
    with pytest.raises(ValueError):
        matched_layers(5, 1)


def test_petersen_is_moore(petersen_graph):
    g = petersen_graph
    assert g.n == 10 and g.edge_count == 15
    assert all(g.degree(v) == 3 for v in range(10))
    # adjacent pairs share no neighbor, nonadjacent pairs exactly one
    for u in range(10):
        for v in range(u + 1, 10):
            common = bin(g.neighbor_masks[u] & g.neighbor_masks[v]).count("1")
            assert common == (0 if g.has_edge(u, v) else 1)


def test_inflate_triangles_k4():
    g = inflate_triangles(complete_graph(4))
    assert g.n == 12 and g.edge_count == 18
    assert all(g.degree(v) == 3 for v in range(12))
    # triangle at each original vertex
    for v in range(4):
        b = 3 * v
        assert g.has_edge(b, b + 1) and g.has_edge(b, b + 2) and g.has_edge(b + 1, b + 2)


def test_inflate_triangles_petersen(petersen_graph):
    g = inflate_triangles(petersen_graph)
    assert g.n == 30 and g.edge_count == 45
    assert all(g.degree(v) == 3 for v in range(30))
    assert g.is_connected()


def test_inflate_rejects_noncubic():
    with pytest.raises(ValueError):
        inflate_triangles(complete_bipartite(2, 3))
    with pytest.raises(ValueError):
        inflate_triangles(make_graph(0, []))


def test_inflation_cutset_ratio():
    for base in (complete_graph(4), petersen()):
        inflated = inflate_triangles(base)
        cut = inflation_cutset(base)
        assert len(cut) == base.edge_count
        parts = components(inflated, cut)
        assert len(parts) == base.n
        # nothing bigger than a triangle survives
        assert all(1 <= len(p) <= 3 for p in parts)


def test_inflation_cutset_needs_connected():
    two = disjoint_union([complete_graph(4), complete_graph(4)])
    with pytest.raises(ValueError):
        inflation_cutset(two)
