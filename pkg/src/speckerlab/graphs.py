"""Finite simple undirected graphs: walks, cycles, odd girth, homomorphisms."""

from collections import deque
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    pass


class UnknownVertexError(GraphError):
    pass


class NotClosedWalkError(GraphError):
    pass


class EvenLengthError(GraphError):
    pass


class Graph:
    """Immutable simple graph on vertex ids 0..n_vertices-1."""

    __slots__ = ("n_vertices", "_adj", "_edge_set")

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int]] = ()):
        if n_vertices < 0:
            raise GraphError("vertex count must be non-negative")
        self.n_vertices = n_vertices
        adj = [set() for _ in range(n_vertices)]
        for u, v in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise UnknownVertexError(f"edge ({u}, {v}) outside 0..{n_vertices - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._edge_set = frozenset(
            (u, v) for u in range(n_vertices) for v in adj[u] if u < v
        )

    @property
    def n_edges(self) -> int:
        return len(self._edge_set)

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self._adj[v]
        except IndexError:
            raise UnknownVertexError(f"vertex {v} out of range") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def adjacent(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
            raise UnknownVertexError(f"pair ({u}, {v}) out of range")
        return (min(u, v), max(u, v)) in self._edge_set

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self._edge_set)

    def __repr__(self) -> str:
        return f"Graph({self.n_vertices}, {self.n_edges} edges)"

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])


def walk_length(walk) -> int:
    return len(walk) - 1


def is_walk(g: Graph, walk) -> bool:
    if not walk:
        return False
    if any(not 0 <= v < g.n_vertices for v in walk):
        return False
    return all(g.adjacent(u, v) for u, v in zip(walk, walk[1:]))


def is_closed_walk(g: Graph, walk) -> bool:
    return is_walk(g, walk) and walk[0] == walk[-1]


def is_cycle(g: Graph, walk) -> bool:
    if not is_closed_walk(g, walk) or walk_length(walk) < 3:
        return False
    interior = list(walk[:-1])
    return len(set(interior)) == len(interior)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on `vertices`, re-indexed; also returns the old ids.

    New vertex i corresponds to the i-th smallest old id in the returned map.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n_vertices:
            raise UnknownVertexError(f"vertex {v} not in graph")
    index = {old: new for new, old in enumerate(keep)}
    keep_set = set(keep)
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in keep_set and v in keep_set
    ]
    return Graph(len(keep), edges), tuple(keep)


def is_forest(g: Graph) -> tuple[bool, list[int] | None]:
    """Return (True, None) for acyclic graphs, else (False, cycle as closed walk)."""
    parent: dict[int, int | None] = {}
    for root in range(g.n_vertices):
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    return False, _cycle_witness(parent, u, w)
    return True, None


def _cycle_witness(parent, u, w):
    # Join the two tree paths at their lowest common ancestor, close with (w, u).
    def chain(x):
        out = [x]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    cu, cw = chain(u), chain(w)
    in_cw = set(cw)
    lca = next(x for x in cu if x in in_cw)
    iu, iw = cu.index(lca), cw.index(lca)
    return cu[: iu + 1] + list(reversed(cw[:iw])) + [u]


def shortest_odd_cycle(
    g: Graph, max_length: int | None = None
) -> tuple[int, list[int]] | None:
    """Shortest odd cycle as (length, closed walk), or None if there is none.

    Runs a BFS on the parity double cover from every vertex: the shortest odd
    closed walk through r is the cover distance from (r, even) to (r, odd),
    and the overall minimum is attained by a genuine cycle, recovered by
    extract_odd_cycle.  With max_length set, the search is truncated at that
    depth and only cycles of length <= max_length are reported.
    """
    best: tuple[int, list[int]] | None = None
    for root in range(g.n_vertices):
        if not g.neighbors(root):
            continue
        cap = max_length
        if best is not None:
            cap = best[0] - 1 if cap is None else min(cap, best[0] - 1)
        found = _odd_closed_walk_from(g, root, cap)
        if found is not None and (best is None or found[0] < best[0]):
            best = found
    if best is None:
        return None
    cycle = extract_odd_cycle(g, best[1])
    return walk_length(cycle), cycle


def _odd_closed_walk_from(g, root, cap):
    start, target = (root, 0), (root, 1)
    parent = {start: None}
    dist = {start: 0}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        d = dist[node]
        if cap is not None and d >= cap:
            continue
        u, par = node
        for w in g.neighbors(u):
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
                return d + 1, walk
            queue.append(nxt)
    return None


def extract_odd_cycle(g: Graph, walk) -> list[int]:
    """Reduce a closed odd walk to an odd cycle no longer than the walk.

    If the walk repeats a vertex, split there into two closed walks; exactly
    one of them has odd length (and it cannot have length 1, since there are
    no loops), so recurse on that half.  A repeat-free closed odd walk is
    already a cycle.
    """
    w = list(walk)
    if len(w) < 2 or w[0] != w[-1]:
        raise NotClosedWalkError(f"walk of length {len(w) - 1} is not closed")
    for u, v in zip(w, w[1:]):
        if not (0 <= u < g.n_vertices and 0 <= v < g.n_vertices) or not g.adjacent(u, v):
            raise NotClosedWalkError(f"({u}, {v}) is not an edge")
    if walk_length(w) % 2 == 0:
        raise EvenLengthError(f"walk length {walk_length(w)} is even")
    while True:
        last = len(w) - 1
        split = None
        first_seen: dict[int, int] = {}
        for idx, vert in enumerate(w):
            if vert in first_seen:
                if first_seen[vert] == 0 and idx == last:
                    continue  # the trivial closing repeat
                split = (first_seen[vert], idx)
                break
            first_seen[vert] = idx
        if split is None:
            return w
        i, j = split
        inner = w[i : j + 1]
        outer = w[: i + 1] + w[j + 1 :]
        w = inner if walk_length(inner) % 2 == 1 else outer


def check_homomorphism_by(g: Graph, adjacent, phi: Mapping) -> tuple[bool, tuple | None]:
    """Edge preservation under `phi`, with adjacency given as a predicate."""
    for v in range(g.n_vertices):
        if v not in phi:
            raise UnknownVertexError(f"map not defined on vertex {v}")
    for u, v in g.edges():
        if not adjacent(phi[u], phi[v]):
            return False, (u, v)
    return True, None


def check_homomorphism(g: Graph, h: Graph, phi: Mapping) -> tuple[bool, tuple | None]:
    """True iff phi maps every edge of g onto an edge of h; else a violating edge."""
    for v in range(g.n_vertices):
        img = phi.get(v)
        if img is None or not 0 <= img < h.n_vertices:
            raise UnknownVertexError(f"vertex {v} maps to {img!r}, not a vertex of h")
    return check_homomorphism_by(g, h.adjacent, phi)


def connected_induced_subsets(g: Graph, size: int) -> Iterator[tuple[int, ...]]:
    """Yield each vertex set inducing a connected size-`size` subgraph once."""
    if size <= 0:
        return
    if size == 1:
        for v in range(g.n_vertices):
            yield (v,)
        return
    for root in range(g.n_vertices):
        ext = [u for u in g.neighbors(root) if u > root]
        yield from _grow_connected(g, root, [root], ext, size)


def _grow_connected(g, root, sub, ext, size):
    # Candidates not adjacent to the current set enter ext exactly once, so
    # every connected set with minimum vertex `root` is produced exactly once.
    if len(sub) == size:
        yield tuple(sorted(sub))
        return
    ext = list(ext)
    while ext:
        w = ext.pop(0)
        fresh = [
            u
            for u in g.neighbors(w)
            if u > root and all(not g.adjacent(u, s) for s in sub)
        ]
        yield from _grow_connected(g, root, sub + [w], ext + fresh, size)
