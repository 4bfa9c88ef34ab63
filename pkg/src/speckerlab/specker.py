"""Graphs on the n-element subsets of a finite universe, with edges exactly
the disjoint pairs realizing a fixed interleaving type in either orientation.

Vertices are indexed colexicographically, so growing the universe extends the
numbering without renumbering.  Explicit construction is guarded by a vertex
budget; adjacency and neighbor queries work lazily at any size.
"""

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .disjoint_types import DisjointType, as_ordinal_set, tp
from .graphs import Graph


class SpeckerError(ValueError):
    pass


class WrongSizeError(SpeckerError):
    pass


class ElementOutOfUniverseError(SpeckerError):
    pass


class RankOutOfRangeError(SpeckerError):
    pass


class TooLargeError(SpeckerError):
    pass


def subset_rank(a, n: int | None = None) -> int:
    """Colexicographic rank of a subset; independent of the universe size."""
    a = as_ordinal_set(a)
    if n is not None and len(a) != n:
        raise WrongSizeError(f"expected {n} elements, got {len(a)}")
    return sum(math.comb(x, j + 1) for j, x in enumerate(a))


def subset_unrank(r: int, n: int, alpha: int | None = None) -> tuple[int, ...]:
    """The n-subset with colexicographic rank r (inverse of subset_rank)."""
    if r < 0:
        raise RankOutOfRangeError(f"rank {r} is negative")
    if alpha is not None and r >= math.comb(alpha, n):
        raise RankOutOfRangeError(f"rank {r} >= C({alpha}, {n})")
    out = [0] * n
    k = n
    while k > 0:
        # binary search for the largest m with comb(m, k) <= r
        lo, hi = k - 1, k - 1
        while math.comb(hi + 1, k) <= r:
            hi = 2 * hi + 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if math.comb(mid, k) <= r:
                lo = mid
            else:
                hi = mid - 1
        r -= math.comb(lo, k)
        k -= 1
        out[k] = lo
    return tuple(out)


@dataclass(frozen=True)
class SpeckerSpec:
    """Universe size together with the interleaving type defining adjacency."""

    alpha: int
    t: DisjointType

    def __post_init__(self):
        if self.alpha < 0:
            raise SpeckerError("universe size must be non-negative")

    @property
    def n(self) -> int:
        return self.t.n

    @property
    def n_vertices(self) -> int:
        return math.comb(self.alpha, self.n)


def _check_vertex(spec: SpeckerSpec, a) -> tuple[int, ...]:
    a = as_ordinal_set(a)
    if len(a) != spec.n:
        raise WrongSizeError(f"expected {spec.n} elements, got {len(a)}")
    if a and a[-1] >= spec.alpha:
        raise ElementOutOfUniverseError(f"element {a[-1]} >= alpha {spec.alpha}")
    return a


def specker_adjacent(spec: SpeckerSpec, a, b) -> bool:
    """True iff a and b are disjoint and one orientation realizes the type."""
    a = _check_vertex(spec, a)
    b = _check_vertex(spec, b)
    if set(a).intersection(b):
        return False
    if spec.n == 0:
        return False  # the single empty-set vertex has no self-edge
    word = tp(a, b)
    return word == spec.t or word == spec.t.complement()


def _gap_counts(t: DisjointType) -> list[int]:
    # counts[g] = number of 1-bits falling after exactly g of the 0-bits
    counts = [0] * (t.n + 1)
    zeros = 0
    for bit in t.bits:
        if bit == "0":
            zeros += 1
        else:
            counts[zeros] += 1
    return counts


def _partners(spec: SpeckerSpec, a, t: DisjointType) -> Iterator[tuple[int, ...]]:
    # All b with tp(a, b) == t: the type fixes how many elements of b land in
    # each gap of a, and any choice of that many integers per gap works.
    n = spec.n
    counts = _gap_counts(t)
    pools = []
    for g in range(n + 1):
        lo = 0 if g == 0 else a[g - 1] + 1
        hi = spec.alpha if g == n else a[g]
        need = counts[g]
        room = [x for x in range(lo, hi)]
        if need > len(room):
            return
        pools.append(list(combinations(room, need)))
    for pick in product(*pools):
        yield tuple(x for chunk in pick for x in chunk)


def specker_neighbors(spec: SpeckerSpec, a) -> list[tuple[int, ...]]:
    """All neighbors of `a`, sorted by colexicographic rank."""
    a = _check_vertex(spec, a)
    if spec.n == 0:
        return []
    found = list(_partners(spec, a, spec.t))
    found.extend(_partners(spec, a, spec.t.complement()))
    return sorted(found, key=subset_rank)


def specker_edges(spec: SpeckerSpec) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every edge once, as a pair of subsets: each 2n-subset of the universe
    splits uniquely along the type into the two endpoints."""
    n = spec.n
    if n == 0:
        return
    zero_pos = [i for i, bit in enumerate(spec.t.bits) if bit == "0"]
    one_pos = [i for i, bit in enumerate(spec.t.bits) if bit == "1"]
    for merged in combinations(range(spec.alpha), 2 * n):
        a = tuple(merged[i] for i in zero_pos)
        b = tuple(merged[i] for i in one_pos)
        yield a, b


def build_specker(spec: SpeckerSpec, max_vertices: int = 200_000) -> Graph:
    """Explicit graph with vertices indexed by subset_rank.

    Refuses universes with more than max_vertices subsets; use the lazy
    adjacency or neighbor oracles for those.
    """
    if spec.n_vertices > max_vertices:
        raise TooLargeError(
            f"C({spec.alpha}, {spec.n}) = {spec.n_vertices} exceeds budget {max_vertices}"
        )
    edges = [(subset_rank(a), subset_rank(b)) for a, b in specker_edges(spec)]
    return Graph(spec.n_vertices, edges)


def bounded_odd_cycle_search(
    spec: SpeckerSpec, max_length: int, max_edge_enum: int = 5_000_000
) -> tuple[int, list[tuple[int, ...]]] | None:
    """Shortest odd cycle of length <= max_length, or None, without building
    the full graph.

    Only vertices incident to an edge can lie on a cycle, and there are just
    C(alpha, 2n) edges, so roots come from edge enumeration; each root runs a
    depth-truncated BFS on the parity double cover with lazy neighbor lists.
    """
    if spec.n == 0:
        return None
    if math.comb(spec.alpha, 2 * spec.n) > max_edge_enum:
        raise TooLargeError("edge enumeration exceeds budget; reduce alpha")
    roots = sorted(
        {a for e in specker_edges(spec) for a in e}, key=subset_rank
    )
    neighbor_cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}

    def nbrs(v):
        if v not in neighbor_cache:
            neighbor_cache[v] = specker_neighbors(spec, v)
        return neighbor_cache[v]

    best = None
    for root in roots:
        cap = max_length if best is None else min(max_length, best[0] - 1)
        start, target = (root, 0), (root, 1)
        parent = {start: None}
        dist = {start: 0}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            d = dist[node]
            if d >= cap:
                continue
            u, par = node
            for w in nbrs(u):
                nxt = (w, par ^ 1)
                if nxt in dist:
                    continue
                dist[nxt] = d + 1
                parent[nxt] = node
                if nxt == target:
                    walk = []
                    cur = nxt
                    while cur is not None:
                        walk.append(cur[0])
                        cur = parent[cur]
                    walk.reverse()
                    if best is None or d + 1 < best[0]:
                        best = (d + 1, walk)
                    queue.clear()
                    break
                queue.append(nxt)
    if best is None:
        return None
    length, walk = best
    cycle = _extract_cycle_subsets(spec, walk)
    return len(cycle) - 1, cycle


def _extract_cycle_subsets(spec, walk):
    # same split-at-repeat reduction as graphs.extract_odd_cycle, on subset ids
    w = list(walk)
    while True:
        last = len(w) - 1
        split = None
        seen = {}
        for idx, vert in enumerate(w):
            if vert in seen:
                if seen[vert] == 0 and idx == last:
                    continue
                split = (seen[vert], idx)
                break
            seen[vert] = idx
        if split is None:
            return w
        i, j = split
        inner = w[i : j + 1]
        outer = w[: i + 1] + w[j + 1 :]
        w = inner if (len(inner) - 1) % 2 == 1 else outer
