"""Building blocks and composed families for toughness witnesses.

A block is a small two-terminal graph.  The first three kinds admit no
Hamilton path between their terminals, which is what makes the composed
graphs nonhamiltonian; the fourth kind does admit one and is used to fix
parity.  Blocks compose by taking a disjoint union, turning the terminal
pairs into one clique (f_m), and joining a complete graph onto the
result (g_construct).

Also here: the exceptional small graphs used for toughness exactly 1 and
3/2, the layered family covering 1 < t < 3/2, and triangle inflation of
cubic graphs together with a cutset that shatters the inflation into one
component per triangle.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .graphs import Graph, disjoint_union, join, make_graph

__all__ = [
    "BlockKind",
    "Block",
    "block",
    "f_m",
    "g_construct",
    "complete_graph",
    "complete_bipartite",
    "unit_toughness_graph",
    "matched_layers",
    "petersen",
    "inflate_triangles",
    "inflation_cutset",
]


class BlockKind(str, Enum):
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"


@dataclass(frozen=True)
class Block:
    """A two-terminal building block.

    labels gives the human-readable name of each vertex.  cut_core lists
    the interior hub vertices: removing them (with the terminals absorbed
    elsewhere) breaks the block into isolated vertices, which is how the
    composed witness cutsets reach their exact ratios.
    """

    kind: BlockKind
    graph: Graph
    x: int
    y: int
    labels: tuple[str, ...]
    cut_core: frozenset[int]

    @property
    def n(self) -> int:
        return self.graph.n


# Vertex data per kind.  L1 is an 8-cycle w1..w8 with chords between the
# even-position vertices; terminals are the opposite vertices w1, w5.
_L1_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7),
    (1, 3), (3, 5), (5, 7), (1, 7),
]

# L2 contracts one chord of L1: the hub u sits in the w2 position and is
# adjacent to w1, w3, w4, w6, w7.
_L2_EDGES = [
    (0, 1), (1, 2), (1, 3), (1, 5), (1, 6),
    (2, 3), (3, 4), (4, 5), (5, 6), (3, 5),
]

# L3 is L1 plus a ninth vertex w9 adjacent to w4 and w6.
_L3_EDGES = _L1_EDGES + [(3, 8), (5, 8)]

# L4 is a triangle w1w2w3 with pendant terminals w4 (at w1) and w5 (at w3);
# it is the one kind whose terminals are joined by a spanning path.
_L4_EDGES = [(0, 1), (1, 2), (0, 2), (0, 3), (2, 4)]

_BLOCK_DATA = {
    BlockKind.L1: (
        8, _L1_EDGES, 0, 4,
        ("w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8"),
        (1, 3, 5, 7),
    ),
    BlockKind.L2: (
        7, _L2_EDGES, 0, 4,
        ("w1", "u", "w3", "w4", "w5", "w6", "w7"),
        (1, 3, 5),
    ),
    BlockKind.L3: (
        9, _L3_EDGES, 0, 4,
        ("w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8", "w9"),
        (1, 3, 5, 7),
    ),
    BlockKind.L4: (
        5, _L4_EDGES, 3, 4,
        ("w1", "w2", "w3", "w4", "w5"),
        (0, 2),
    ),
}


@functools.lru_cache(maxsize=None)
def block(kind: BlockKind) -> Block:
    """The canonical copy of a block kind, always numbered the same way."""
    n, edges, x, y, labels, core = _BLOCK_DATA[BlockKind(kind)]
    return Block(
        kind=BlockKind(kind),
        graph=make_graph(n, edges),
        x=x,
        y=y,
        labels=labels,
        cut_core=frozenset(core),
    )


def f_m(blocks: Sequence[Block]) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Disjoint union of blocks with all 2m terminals turned into a clique.

    Block i occupies the contiguous id range starting at the sum of the
    orders before it.  Returns the graph and the global (x_i, y_i) pairs.
    """
    if not blocks:
        raise ValueError("f_m needs at least one block")
    base = disjoint_union([b.graph for b in blocks])
    terminals = []
    offset = 0
    for b in blocks:
        terminals.append((offset + b.x, offset + b.y))
        offset += b.n
    flat = [v for pair in terminals for v in pair]
    edges = list(base.edges())
    edges.extend(
        (flat[i], flat[j]) for i in range(len(flat)) for j in range(i + 1, len(flat))
    )
    return make_graph(base.n, edges), tuple(terminals)


def g_construct(l: int, blocks: Sequence[Block]) -> Graph:
    """Join a complete graph on l vertices onto f_m of the blocks.

    The l join vertices come first, then the blocks in order.  With no
    blocks this degenerates to the complete graph, so l = 0 with an empty
    block list is rejected.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    if not blocks:
        if l == 0:
            raise ValueError("need l > 0 or at least one block")
        return complete_graph(l)
    fm, _ = f_m(blocks)
    if l == 0:
        return fm
    return join(complete_graph(l), fm)


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side on 0..a-1."""
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def unit_toughness_graph() -> Graph:
    """The 7-vertex graph with toughness exactly 1 that is not hamiltonian:
    a 6-cycle x1..x6 with the chord x2x6, plus x7 adjacent to x1 and x4."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 5), (0, 6), (3, 6)]
    return make_graph(7, edges)


def matched_layers(a: int, b: int) -> Graph:
    """Three layers: a-b+1 universal vertices, an independent set of b
    vertices, and a clique of b vertices matched to the independent set.

    Has toughness exactly a/b; it stops being hamiltonian once the
    independent layer outweighs the rest, i.e. when 3b > 2a + 2.
    Layout: 0..a-b universal, then the independent y_i, then the z_i.
    """
    if not a > b >= 2:
        raise ValueError(f"need a > b >= 2, got a={a}, b={b}")
    n1 = a - b + 1
    n = n1 + 2 * b
    edges = [(i, j) for i in range(n1) for j in range(i + 1, n)]
    edges.extend((n1 + b + i, n1 + b + j) for i in range(b) for j in range(i + 1, b))
    edges.extend((n1 + i, n1 + b + i) for i in range(b))
    return make_graph(n, edges)


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes to 5..9, inner 5-cycle in pentagram order."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, edges)


def _require_cubic(g: Graph) -> None:
    if g.n == 0 or any(g.degree(v) != 3 for v in range(g.n)):
        raise ValueError("triangle inflation needs a cubic graph")


def inflate_triangles(g: Graph) -> Graph:
    """Replace every vertex of a cubic graph by a triangle.

    Vertex v becomes 3v, 3v+1, 3v+2, where 3v+i pairs with v's i-th
    neighbor in ascending order; each original edge becomes the edge
    between its two dedicated triangle vertices.  The result is cubic on
    3n vertices with 3n + m edges.
    """
    _require_cubic(g)
    edges = []
    for v in range(g.n):
        base = 3 * v
        edges += [(base, base + 1), (base, base + 2), (base + 1, base + 2)]
    for u, v in g.edges():
        i = g.neighbors(u).index(v)
        j = g.neighbors(v).index(u)
        edges.append((3 * u + i, 3 * v + j))
    return make_graph(3 * g.n, edges)


def inflation_cutset(g: Graph) -> frozenset[int]:
    """A cutset of inflate_triangles(g) that isolates every triangle.

    Picks one endpoint of each cross edge so that no triangle loses more
    than two vertices: orient the edges with indegree at most 2 per
    vertex (walk an Euler circuit after tying all odd-degree vertices to
    one auxiliary vertex) and take the head-side triangle vertex of each
    edge.  Removing the returned |E(g)| vertices leaves exactly n(g)
    components, one per triangle, for a ratio of |E|/n = 3/2 on any
    connected cubic graph.
    """
    _require_cubic(g)
    if not g.is_connected():
        raise ValueError("inflation cutset needs a connected graph")
    n = g.n
    aux = n
    adj: dict[int, list[int]] = {v: list(g.neighbors(v)) + [aux] for v in range(n)}
    adj[aux] = list(range(n))
    used: set[tuple[int, int]] = set()
    ptr = {v: 0 for v in adj}
    stack = [0]
    walk: list[int] = []
    while stack:
        v = stack[-1]
        lst = adj[v]
        i = ptr[v]
        while i < len(lst) and (min(v, lst[i]), max(v, lst[i])) in used:
            i += 1
        ptr[v] = i
        if i < len(lst):
            u = lst[i]
            used.add((min(v, u), max(v, u)))
            stack.append(u)
        else:
            walk.append(stack.pop())
    indeg = [0] * n
    picked = []
    for w1, w2 in zip(walk, walk[1:]):
        if w1 == aux or w2 == aux:
            continue
        indeg[w2] += 1
        j = g.neighbors(w2).index(w1)
        picked.append(3 * w2 + j)
    assert len(picked) == g.edge_count and len(set(picked)) == len(picked)
    assert all(d <= 2 for d in indeg)
    return frozenset(picked)
