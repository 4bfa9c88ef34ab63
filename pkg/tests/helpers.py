"""Shared oracles for the test suite; all are independent brute-force paths."""

import random
from itertools import combinations

from speckerlab.graphs import Graph


def random_graph(seed, n, p=0.5):
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def bf_k_colorable(g, k):
    """Plain backtracking in vertex-id order: no heuristics, no symmetry tricks."""
    colors = {}

    def rec(v):
        if v == g.n_vertices:
            return True
        for c in range(k):
            if any(colors.get(u) == c for u in g.neighbors(v)):
                continue
            colors[v] = c
            if rec(v + 1):
                return True
            del colors[v]
        return False

    return rec(0)


def bf_chromatic(g):
    if g.n_vertices == 0:
        return 0
    for k in range(1, g.n_vertices + 1):
        if bf_k_colorable(g, k):
            return k
    raise AssertionError("unreachable")


def is_bipartite(g):
    colors = {}
    for root in range(g.n_vertices):
        if root in colors:
            continue
        colors[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in colors:
                    colors[w] = colors[u] ^ 1
                    stack.append(w)
                elif colors[w] == colors[u]:
                    return False
    return True


def induces_cycle(g, subset):
    """True iff the induced subgraph is a single cycle (connected, 2-regular)."""
    members = set(subset)
    degs = [sum(1 for u in g.neighbors(v) if u in members) for v in subset]
    if any(d != 2 for d in degs):
        return False
    # connectivity
    start = subset[0]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(subset)


def bf_odd_girth(g):
    """Minimum odd cycle length by enumerating vertex subsets, or None."""
    for size in range(3, g.n_vertices + 1, 2):
        for subset in combinations(range(g.n_vertices), size):
            if induces_cycle(g, subset):
                return size
    return None


def bf_min_nonbipartite_order(g):
    """Least subset size whose induced subgraph is non-bipartite, or None."""
    from speckerlab.graphs import induced_subgraph

    for size in range(3, g.n_vertices + 1):
        for subset in combinations(range(g.n_vertices), size):
            sub, _ = induced_subgraph(g, subset)
            if not is_bipartite(sub):
                return size
    return None


def random_nonbipartite(seed, max_n=12):
    """Deterministic non-bipartite graph with at most max_n vertices."""
    attempt = 0
    while True:
        n = 5 + (seed + attempt) % (max_n - 4)
        g = random_graph(seed * 1000 + attempt, n, 0.35)
        if not is_bipartite(g):
            return g
        attempt += 1


def random_odd_closed_walk(seed, detours=3):
    """A graph with a planted odd cycle plus a random odd closed walk in it.

    The walk starts at a cycle vertex, wanders in out-and-back pairs (even
    length), then traverses the cycle once (odd), so it is closed and odd.
    """
    rng = random.Random(seed)
    cyc_len = rng.choice([3, 5, 7])
    n = cyc_len + rng.randrange(0, 5)
    edges = {(i, (i + 1) % cyc_len) for i in range(cyc_len)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.4:
                edges.add((u, v))
    g = Graph(n, {(min(u, v), max(u, v)) for u, v in edges})
    walk = [0]
    for _ in range(rng.randrange(0, detours + 1)):
        here = walk[-1]
        out = rng.choice(g.neighbors(here))
        walk.extend([out, here])
    start = walk[-1]
    # splice in a closed cycle traversal from vertex 0; walk currently ends at 0
    assert start == 0
    walk.extend([(i + 1) % cyc_len for i in range(cyc_len)])
    return g, walk
