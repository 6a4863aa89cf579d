"""Immutable simple graphs on dense integer vertices.

Vertices are always 0..n-1.  Adjacency is kept as one bitmask per vertex
(bit u of row v set iff uv is an edge), so the exponential oracles can
sweep components with a handful of big-int operations per candidate
cutset instead of touching Python-level adjacency structures.

Besides construction and the union/join combinators this module owns the
interchange formats: graph6, DOT, and a small JSON edge-list schema.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphFormatError",
    "make_graph",
    "components",
    "disjoint_union",
    "join",
    "encode_graph6",
    "decode_graph6",
    "to_dot",
    "to_edge_json",
    "from_edge_json",
]

# graph6 cannot address more vertices than this (36-bit size field)
GRAPH6_MAX_N = 2**36 - 1

_G6_HEADER = b">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph6 or JSON graph input."""


class Graph:
    """An immutable simple undirected graph on vertices 0..n-1.

    Construct through make_graph (or the combinators); the constructor
    trusts its arguments.  Equality and hashing are labeled: two graphs
    compare equal only when they have the same vertex count and the same
    edge set on the same labels.
    """

    __slots__ = ("n", "_nbr", "_m")

    def __init__(self, n: int, neighbor_masks: tuple[int, ...], edge_count: int):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_nbr", neighbor_masks)
        object.__setattr__(self, "_m", edge_count)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries -------------------------------------------------

    @property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency rows as bitmasks; row v has bit u set iff uv is an edge."""
        return self._nbr

    @property
    def edge_count(self) -> int:
        return self._m

    def degree(self, v: int) -> int:
        return self._nbr[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._nbr[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._nbr[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for v in range(self.n):
            row = self._nbr[v] >> (v + 1)
            u = v + 1
            while row:
                if row & 1:
                    out.append((v, u))
                row >>= 1
                u += 1
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        full = (1 << self.n) - 1
        return _reach(self._nbr, 1, full) == full

    def is_complete(self) -> bool:
        return self._m == self.n * (self.n - 1) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbr == other._nbr

    def __hash__(self) -> int:
        return hash((self.n, self._nbr))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def _bits(mask: int):
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach(nbr: Sequence[int], seed: int, alive: int) -> int:
    """Vertices reachable from the seed bits inside the alive mask."""
    comp = seed & alive
    frontier = comp
    while frontier:
        acc = 0
        for v in _bits(frontier):
            acc |= nbr[v]
        frontier = acc & alive & ~comp
        comp |= frontier
    return comp


def count_components_masked(nbr: Sequence[int], alive: int) -> int:
    """Number of connected components induced on the alive bitmask."""
    count = 0
    rem = alive
    while rem:
        count += 1
        comp = _reach(nbr, rem & -rem, rem)
        rem &= ~comp
    return count


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from a vertex count and an edge list.

    Loops are rejected; duplicate edges (in either order) collapse.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(n, tuple(rows), m)


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of g minus the removed vertices.

    Returns sorted vertex lists, ordered by smallest member.  The count
    is just len() of the result.
    """
    rm = 0
    for v in removed:
        if not (0 <= v < g.n):
            raise ValueError(f"removed vertex {v} out of range for n={g.n}")
        rm |= 1 << v
    alive = ((1 << g.n) - 1) & ~rm
    nbr = g.neighbor_masks
    parts = []
    rem = alive
    while rem:
        comp = _reach(nbr, rem & -rem, rem)
        parts.append(list(_bits(comp)))
        rem &= ~comp
    return parts


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union; graph i occupies ids starting at sum of earlier orders."""
    if not graphs:
        raise ValueError("disjoint_union needs at least one graph")
    n = 0
    edges = []
    for g in graphs:
        edges.extend((n + u, n + v) for u, v in g.edges())
        n += g.n
    return make_graph(n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Join: g, then h shifted by g.n, plus all edges between the two."""
    edges = list(g.edges())
    edges.extend((g.n + u, g.n + v) for u, v in h.edges())
    edges.extend((u, g.n + v) for u in range(g.n) for v in range(h.n))
    return make_graph(g.n + h.n, edges)


# -- graph6 ------------------------------------------------------------


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    return bytes(
        [126, 126]
        + [((n >> sh) & 63) + 63 for sh in (30, 24, 18, 12, 6, 0)]
    )


def encode_graph6(g: Graph) -> bytes:
    """Encode in graph6: size field, then the upper triangle column by
    column ((0,1),(0,2),(1,2),(0,3),...), six bits per byte, offset 63."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 cannot encode n={n}")
    out = bytearray(_g6_size_bytes(n))
    nbr = g.neighbor_masks
    val = 0
    nbits = 0
    for j in range(1, n):
        row = nbr[j]
        for i in range(j):
            val = (val << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(val + 63)
                val = 0
                nbits = 0
    if nbits:
        out.append((val << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 string; the optional >>graph6<< header is allowed."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise GraphFormatError("empty graph6 input")
    for b in data:
        if not (63 <= b <= 126):
            raise GraphFormatError(f"invalid graph6 byte {b}")
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise GraphFormatError("truncated graph6 size field")
            n = 0
            for b in data[2:8]:
                n = (n << 6) | (b - 63)
            pos = 8
        else:
            if len(data) < 4:
                raise GraphFormatError("truncated graph6 size field")
            n = 0
            for b in data[1:4]:
                n = (n << 6) | (b - 63)
            pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphFormatError(
            f"truncated graph6 body: need {need} bytes for n={n}, got {len(body)}"
        )
    if len(body) > need:
        raise GraphFormatError("trailing bytes after graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero
    if nbits % 6:
        last = body[-1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise GraphFormatError("nonzero padding bits in graph6 body")
    return make_graph(n, edges)


# -- DOT and JSON ------------------------------------------------------


def to_dot(g: Graph, highlight: Iterable[int] = ()) -> str:
    """Render as undirected DOT; highlighted vertices are drawn filled."""
    hi = set(highlight)
    for v in hi:
        if not (0 <= v < g.n):
            raise ValueError(f"highlight vertex {v} out of range")
    lines = ["graph {", "  node [shape=circle];"]
    for v in range(g.n):
        if v in hi:
            lines.append(f"  {v} [style=filled, fillcolor=gold];")
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_json(g: Graph) -> str:
    """Serialize as {"n": ..., "edges": [[u, v], ...]} with sorted edges."""
    payload = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    return json.dumps(payload, sort_keys=True)


def from_edge_json(text: str) -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"bad JSON: {exc}") from None
    if not isinstance(payload, dict) or set(payload) != {"n", "edges"}:
        raise GraphFormatError('JSON graph must have exactly the keys "n" and "edges"')
    n = payload["n"]
    edges = payload["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFormatError('"n" must be an integer')
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be a list')
    pairs = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphFormatError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return make_graph(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
