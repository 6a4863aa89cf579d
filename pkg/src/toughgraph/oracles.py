"""Exact brute-force oracles with explicit resource limits.

Everything here returns exact answers or refuses loudly: toughness and
independence raise SizeLimitError beyond their vertex ceilings, and the
Hamilton deciders report an unknown verdict when they exhaust their node
budget instead of guessing.  All rational arithmetic is exact integer
cross-multiplication; no verdict ever passes through a float.
"""

from __future__ import annotations

import random
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .graphs import Graph, _bits, _reach, count_components_masked

__all__ = [
    "SizeLimitError",
    "CutsetWitness",
    "ToughnessResult",
    "HamiltonResult",
    "cutset_witness",
    "toughness_exact",
    "toughness_upper_search",
    "is_hamiltonian",
    "has_hamilton_path",
    "independence_number",
]

DEFAULT_TOUGHNESS_LIMIT = 24
DEFAULT_ALPHA_LIMIT = 48
DEFAULT_NODE_LIMIT = 10_000_000
DEFAULT_DP_LIMIT = 22

# a size class is split into chunks for worker processes only past this
_PARALLEL_THRESHOLD = 50_000


class SizeLimitError(ValueError):
    """Instance too large for an exact oracle; use the heuristic search or
    structural verification instead."""


@dataclass(frozen=True)
class CutsetWitness:
    """A vertex cut together with the component count it achieves."""

    cutset: frozenset[int]
    component_count: int
    ratio: Fraction


@dataclass(frozen=True)
class ToughnessResult:
    """Exact toughness; value None means infinite (complete graph)."""

    value: Optional[Fraction]
    witness: Optional[CutsetWitness]

    @property
    def is_infinite(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class HamiltonResult:
    """verdict True/False is exact; None means the node budget ran out."""

    verdict: Optional[bool]
    witness: Optional[tuple[int, ...]]
    method: str
    nodes: int


def cutset_witness(g: Graph, cutset: frozenset[int]) -> CutsetWitness:
    """Re-verify a cutset by counting components; rejects non-cuts."""
    mask = 0
    for v in cutset:
        if not (0 <= v < g.n):
            raise ValueError(f"cutset vertex {v} out of range")
        mask |= 1 << v
    if mask.bit_count() != len(cutset):
        raise ValueError("cutset has repeated vertices")
    alive = ((1 << g.n) - 1) & ~mask
    c = count_components_masked(g.neighbor_masks, alive)
    if c < 2:
        raise ValueError(f"not a cutset: leaves {c} component(s)")
    return CutsetWitness(frozenset(cutset), c, Fraction(len(cutset), c))


# -- exact toughness ---------------------------------------------------


def _kth_combination(idx: int, n: int, k: int) -> list[int]:
    """Lexicographic unranking of k-subsets of range(n)."""
    out = []
    x = 0
    while k > 0:
        c = comb(n - x - 1, k - 1)
        if idx < c:
            out.append(x)
            k -= 1
        else:
            idx -= c
        x += 1
    return out


def _scan_chunk(args: tuple) -> tuple[int, int]:
    """Scan one lexicographic run of k-subsets; return the best (component
    count, cutset mask) found, preferring earlier subsets on ties."""
    nbr, n, k, start, count = args
    full = (1 << n) - 1
    lst = _kth_combination(start, n, k)
    best_c = 0
    best_mask = 0
    for _ in range(count):
        mask = 0
        for v in lst:
            mask |= 1 << v
        c = count_components_masked(nbr, full ^ mask)
        if c >= 2 and c > best_c:
            best_c = c
            best_mask = mask
        i = k - 1
        while i >= 0 and lst[i] == n - k + i:
            i -= 1
        if i < 0:
            break
        lst[i] += 1
        for j in range(i + 1, k):
            lst[j] = lst[j - 1] + 1
    return best_c, best_mask


def toughness_exact(
    g: Graph,
    max_n: int = DEFAULT_TOUGHNESS_LIMIT,
    workers: int = 1,
) -> ToughnessResult:
    """Exact toughness: min |S| / omega(G - S) over all cutsets S.

    Enumerates candidate cutsets by increasing size and stops as soon as
    |S| / (n - |S|) can no longer beat the best ratio, which is sound
    because a deleted set of size s leaves at most n - s components.
    The witness is the first optimal cutset in (size, lexicographic)
    order, independent of the worker count.
    """
    n = g.n
    if n > max_n:
        raise SizeLimitError(
            f"toughness enumeration capped at n={max_n}, got n={n}; "
            "raise max_n, or fall back to toughness_upper_search"
        )
    if workers < 1:
        raise ValueError("workers must be positive")
    if g.is_complete():
        return ToughnessResult(None, None)
    nbr = g.neighbor_masks
    full = (1 << n) - 1
    found = False
    best_s = best_c = best_mask = 0
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for k in range(n - 1):
            if found and k * best_c >= best_s * (n - k):
                break
            total = comb(n, k)
            if pool is not None and total >= _PARALLEL_THRESHOLD:
                nchunks = workers * 4
                step, extra = divmod(total, nchunks)
                tasks = []
                start = 0
                for i in range(nchunks):
                    size = step + (1 if i < extra else 0)
                    if size:
                        tasks.append((nbr, n, k, start, size))
                        start += size
                results = pool.map(_scan_chunk, tasks)
            else:
                results = [_scan_chunk((nbr, n, k, 0, total))]
            for c, mask in results:
                # accept iff k/c strictly beats the best ratio so far
                if c >= 2 and (not found or k * best_c < best_s * c):
                    found = True
                    best_s, best_c, best_mask = k, c, mask
    finally:
        if pool is not None:
            pool.shutdown()
    assert found, "non-complete graph must have a cutset"
    witness = cutset_witness(g, frozenset(_bits(best_mask)))
    assert witness.component_count == best_c
    return ToughnessResult(Fraction(best_s, best_c), witness)


def toughness_upper_search(
    g: Graph, budget: int = 2000, seed: int = 0
) -> Optional[CutsetWitness]:
    """Heuristic upper bound on toughness: the best cutset found within a
    budget of component evaluations.

    Seeds with every closed-out neighborhood N(v), hill-climbs by single
    vertex additions/removals, then spends the rest of the budget on
    seeded random restarts.  Deterministic for a fixed seed.  Returns
    None when no cutset at all is found in budget (e.g. complete graphs
    are rejected up front).
    """
    if g.is_complete():
        raise ValueError("complete graph has no cutset")
    if not g.is_connected():
        return cutset_witness(g, frozenset())
    n = g.n
    nbr = g.neighbor_masks
    full = (1 << n) - 1
    rng = random.Random(seed)
    evals = 0
    best: Optional[tuple[int, int, int]] = None  # (size, comps, mask)

    def consider(mask: int) -> None:
        nonlocal evals, best
        if mask == 0 or mask & ~full or mask == full:
            return
        evals += 1
        c = count_components_masked(nbr, full ^ mask)
        if c >= 2:
            s = mask.bit_count()
            if best is None or s * best[1] < best[0] * c:
                best = (s, c, mask)

    for v in range(n):
        if evals >= budget:
            break
        consider(nbr[v])

    improved = True
    while improved and best is not None and evals < budget:
        improved = False
        base = best[2]
        for v in range(n):
            if evals >= budget:
                break
            consider(base ^ (1 << v))
            if best[2] != base:
                improved = True
                break

    while evals < budget:
        size = rng.randint(1, max(1, n - 2))
        mask = 0
        for v in rng.sample(range(n), size):
            mask |= 1 << v
        consider(mask)

    if best is None:
        return None
    return cutset_witness(g, frozenset(_bits(best[2])))


# -- Hamilton cycle / path ---------------------------------------------


class _BudgetExhausted(Exception):
    pass


def _dense(g: Graph) -> bool:
    return 4 * g.edge_count >= g.n * (g.n - 1)


def is_hamiltonian(
    g: Graph,
    node_limit: int = DEFAULT_NODE_LIMIT,
    dp_limit: int = DEFAULT_DP_LIMIT,
) -> HamiltonResult:
    """Decide Hamiltonicity exactly, or return verdict None on budget.

    Dense graphs up to dp_limit vertices go through the subset dynamic
    program (exact, no budget); everything else through pruned
    backtracking under node_limit.
    """
    n = g.n
    if n < 3:
        return HamiltonResult(False, None, "trivial", 0)
    if not g.is_connected() or any(g.degree(v) < 2 for v in range(n)):
        return HamiltonResult(False, None, "trivial", 0)
    if n <= dp_limit and _dense(g):
        return _cycle_dp(g)
    return _cycle_backtrack(g, node_limit)


def has_hamilton_path(
    g: Graph,
    x: int,
    y: int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    dp_limit: int = DEFAULT_DP_LIMIT,
) -> HamiltonResult:
    """Decide whether a spanning x-y path exists; None verdict on budget."""
    n = g.n
    if not (0 <= x < n and 0 <= y < n):
        raise ValueError("path endpoints out of range")
    if x == y:
        raise ValueError("path endpoints must differ")
    if not g.is_connected():
        return HamiltonResult(False, None, "trivial", 0)
    if any(g.degree(v) < 2 for v in range(n) if v != x and v != y):
        return HamiltonResult(False, None, "trivial", 0)
    if n <= dp_limit and _dense(g):
        return _path_dp(g, x, y)
    return _path_backtrack(g, x, y, node_limit)


def _cycle_backtrack(g: Graph, node_limit: int) -> HamiltonResult:
    n = g.n
    nbr = g.neighbor_masks
    full = (1 << n) - 1
    root = min(range(n), key=lambda v: (nbr[v].bit_count(), v))
    rbit = 1 << root
    nodes = 0
    path = [root]

    def extend(cur: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise _BudgetExhausted
        if visited == full:
            return bool(nbr[cur] & rbit)
        unvisited = full ^ visited
        alive = unvisited | (1 << cur) | rbit
        u = unvisited
        while u:
            b = u & -u
            u ^= b
            t = nbr[b.bit_length() - 1] & alive
            if t & (t - 1) == 0:  # vertex has < 2 usable neighbors left
                return False
        reach = _reach(nbr, 1 << cur, alive)
        if (reach & unvisited) != unvisited or not (reach & rbit):
            return False
        cand = nbr[cur] & unvisited
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            path.append(v)
            if extend(v, visited | b):
                return True
            path.pop()
        return False

    try:
        found = extend(root, rbit)
    except _BudgetExhausted:
        return HamiltonResult(None, None, "backtracking", nodes)
    return HamiltonResult(found, tuple(path) if found else None, "backtracking", nodes)


def _path_backtrack(g: Graph, x: int, y: int, node_limit: int) -> HamiltonResult:
    n = g.n
    nbr = g.neighbor_masks
    full = (1 << n) - 1
    ybit = 1 << y
    nodes = 0
    path = [x]

    def extend(cur: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise _BudgetExhausted
        if visited == full:
            return True  # y admission is gated below, so cur == y here
        unvisited = full ^ visited
        alive = unvisited | (1 << cur)
        u = unvisited
        while u:
            b = u & -u
            u ^= b
            t = nbr[b.bit_length() - 1] & alive
            if b == ybit:
                if not t:
                    return False
            elif t & (t - 1) == 0:
                return False
        reach = _reach(nbr, 1 << cur, alive)
        if (reach & unvisited) != unvisited:
            return False
        cand = nbr[cur] & unvisited
        if unvisited != ybit:
            cand &= ~ybit  # enter the far endpoint only as the last step
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            path.append(v)
            if extend(v, visited | b):
                return True
            path.pop()
        return False

    try:
        found = extend(x, 1 << x)
    except _BudgetExhausted:
        return HamiltonResult(None, None, "backtracking", nodes)
    return HamiltonResult(found, tuple(path) if found else None, "backtracking", nodes)


def _endpoint_dp(nbr: tuple[int, ...], n: int, start: int):
    """dp[mask] = bitmask of vertices that can end a path over mask that
    starts at start; mask always contains start."""
    full = (1 << n) - 1
    dp = array("q", bytes(8 * (full + 1)))
    dp[1 << start] = 1 << start
    for mask in range(1 << start, full + 1):
        ends = dp[mask]
        if not ends:
            continue
        r = full ^ mask
        while r:
            b = r & -r
            r ^= b
            if nbr[b.bit_length() - 1] & ends:
                dp[mask | b] |= b
    return dp


def _dp_walk_back(nbr, dp, full: int, last: int, start: int) -> tuple[int, ...]:
    order = [last]
    mask = full
    cur = last
    while mask != (1 << start):
        mask ^= 1 << cur
        prevs = dp[mask] & nbr[cur]
        assert prevs, "dp table must chain back to the start"
        cur = (prevs & -prevs).bit_length() - 1
        order.append(cur)
    order.reverse()
    return tuple(order)


def _cycle_dp(g: Graph) -> HamiltonResult:
    n = g.n
    nbr = g.neighbor_masks
    full = (1 << n) - 1
    dp = _endpoint_dp(nbr, n, 0)
    closing = dp[full] & nbr[0]
    if not closing:
        return HamiltonResult(False, None, "subset-dp", 0)
    last = (closing & -closing).bit_length() - 1
    return HamiltonResult(True, _dp_walk_back(nbr, dp, full, last, 0), "subset-dp", 0)


def _path_dp(g: Graph, x: int, y: int) -> HamiltonResult:
    n = g.n
    nbr = g.neighbor_masks
    full = (1 << n) - 1
    dp = _endpoint_dp(nbr, n, x)
    if not (dp[full] >> y) & 1:
        return HamiltonResult(False, None, "subset-dp", 0)
    return HamiltonResult(True, _dp_walk_back(nbr, dp, full, y, x), "subset-dp", 0)


# -- independence number -----------------------------------------------


def independence_number(g: Graph, max_n: int = DEFAULT_ALPHA_LIMIT) -> int:
    """Exact independence number by branch and bound on bitmasks."""
    n = g.n
    if n > max_n:
        raise SizeLimitError(f"independence oracle capped at n={max_n}, got n={n}")
    if n == 0:
        return 0
    nbr = g.neighbor_masks
    taken = 0
    count = 0
    for v in sorted(range(n), key=lambda v: (nbr[v].bit_count(), v)):
        if not (nbr[v] & taken):
            taken |= 1 << v
            count += 1
    best = count

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        # branch on the vertex with most candidate neighbors
        pivot = -1
        pivot_deg = -1
        c = cand
        while c:
            b = c & -c
            c ^= b
            v = b.bit_length() - 1
            d = (nbr[v] & cand).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        pb = 1 << pivot
        grow(cand & ~(nbr[pivot] | pb), size + 1)
        grow(cand ^ pb, size)

    grow((1 << n) - 1, 0)
    return best
