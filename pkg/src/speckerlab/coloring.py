"""Proper colorings and an exact chromatic-number solver with certificates.

The solver is deliberately boring: greedy clique for the lower bound, DSATUR
greedy for the upper bound, then k-colorability searches with the clique
precolored and a fresh-color cap for symmetry breaking.  Every tie breaks to
the lowest vertex id, so results are reproducible run to run.
"""

from collections import deque
from dataclasses import dataclass, field

from .graphs import (
    Graph,
    connected_induced_subsets,
    induced_subgraph,
    shortest_odd_cycle,
)


class ColoringError(ValueError):
    pass


class PartialColoringError(ColoringError):
    pass


class NotACoverError(ColoringError):
    pass


class ImproperInputError(ColoringError):
    pass


class BudgetExhausted(RuntimeError):
    """Search stopped early; callers get flagged bounds instead of exact values."""


@dataclass
class Coloring:
    colors: dict[int, int]
    palette_size: int


@dataclass
class ChromaticResult:
    chi: int
    coloring: Coloring
    clique: tuple[int, ...]
    certificate: dict
    exact: bool
    nodes: int


def verify_coloring(g: Graph, coloring: Coloring) -> tuple[bool, tuple | None]:
    """(True, None) when proper; otherwise (False, a monochromatic edge)."""
    cols = coloring.colors
    for v in range(g.n_vertices):
        if v not in cols:
            raise PartialColoringError(f"vertex {v} is uncolored")
        if not 0 <= cols[v] < coloring.palette_size:
            raise ColoringError(
                f"color {cols[v]} at vertex {v} outside palette {coloring.palette_size}"
            )
    for u, v in g.edges():
        if cols[u] == cols[v]:
            return False, (u, v)
    return True, None


def greedy_clique(g: Graph) -> tuple[int, ...]:
    """A clique found greedily by degree; a quick chromatic lower bound."""
    order = sorted(range(g.n_vertices), key=lambda v: (-g.degree(v), v))
    clique: list[int] = []
    for v in order:
        if all(g.adjacent(v, u) for u in clique):
            clique.append(v)
    return tuple(sorted(clique))


def dsatur_coloring(g: Graph) -> Coloring:
    """Greedy saturation-order coloring; an upper bound, not exact."""
    colors: dict[int, int] = {}
    for _ in range(g.n_vertices):
        pick, pick_key = None, None
        for v in range(g.n_vertices):
            if v in colors:
                continue
            sat = len({colors[u] for u in g.neighbors(v) if u in colors})
            key = (sat, g.degree(v), -v)
            if pick_key is None or key > pick_key:
                pick, pick_key = v, key
        used = {colors[u] for u in g.neighbors(pick) if u in colors}
        c = 0
        while c in used:
            c += 1
        colors[pick] = c
    palette = max(colors.values()) + 1 if colors else 0
    return Coloring(colors, palette)


class _NodeBudget:
    __slots__ = ("remaining", "used")

    def __init__(self, limit: int | None):
        self.remaining = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.remaining is not None:
            if self.remaining <= 0:
                raise BudgetExhausted(f"node budget exhausted after {self.used - 1}")
            self.remaining -= 1


def find_k_coloring(
    g: Graph, k: int, node_budget: int | None = None, _budget: _NodeBudget | None = None
) -> Coloring | None:
    """Exact k-colorability: a proper coloring with palette k, or None."""
    n = g.n_vertices
    if n == 0:
        return Coloring({}, 0)
    if k <= 0:
        return None
    budget = _budget if _budget is not None else _NodeBudget(node_budget)
    clique = greedy_clique(g)
    if len(clique) > k:
        return None
    colors: list[int | None] = [None] * n
    for i, v in enumerate(clique):
        colors[v] = i

    def pick():
        best_v, best_key = None, None
        for v in range(n):
            if colors[v] is not None:
                continue
            sat = len({colors[u] for u in g.neighbors(v) if colors[u] is not None})
            key = (sat, g.degree(v), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def assign(remaining, max_used):
        if remaining == 0:
            return True
        v = pick()
        forbidden = {colors[u] for u in g.neighbors(v)}
        # colors above max_used+1 are interchangeable with max_used+1
        cap = min(k - 1, max_used + 1)
        for c in range(cap + 1):
            if c in forbidden:
                continue
            budget.spend()
            colors[v] = c
            if assign(remaining - 1, max(max_used, c)):
                return True
            colors[v] = None
        return False

    if not assign(n - len(clique), len(clique) - 1):
        return None
    return Coloring({v: colors[v] for v in range(n)}, k)


def chromatic_number(g: Graph, node_budget: int | None = None) -> ChromaticResult:
    """Exact chromatic number, a proper coloring, and a checkable certificate.

    On budget exhaustion the best known bounds are returned with exact=False;
    nothing is silently approximated.
    """
    if g.n_vertices == 0:
        return ChromaticResult(0, Coloring({}, 0), (), {"kind": "empty"}, True, 0)
    clique = greedy_clique(g)
    greedy = dsatur_coloring(g)
    lb, ub = len(clique), greedy.palette_size
    budget = _NodeBudget(node_budget)
    chi, best = ub, greedy
    for k in range(lb, ub):
        try:
            sol = find_k_coloring(g, k, _budget=budget)
        except BudgetExhausted:
            certificate = {
                "kind": "budget_exceeded",
                "lower_bound": k,
                "upper_bound": ub,
            }
            return ChromaticResult(ub, best, clique, certificate, False, budget.used)
        if sol is not None:
            chi, best = k, sol
            break
    if chi == len(clique):
        certificate = {"kind": "clique", "vertices": list(clique)}
    else:
        certificate = {
            "kind": "exhausted_search",
            "colors": chi - 1,
            "nodes": budget.used,
        }
    return ChromaticResult(chi, best, clique, certificate, True, budget.used)


def product_coloring(g: Graph, parts, colorings) -> Coloring:
    """Combine per-part proper colorings into one coloring of g.

    The parts must jointly cover g's edge set and coloring j must be proper
    on (V, parts[j]).  The result encodes the tuple of part colors in mixed
    radix; its palette size is the product of the part palette sizes.
    """
    if len(parts) != len(colorings):
        raise ColoringError(f"{len(parts)} parts but {len(colorings)} colorings")
    edge_set = set(g.edges())
    norm_parts = []
    for part in parts:
        cur = set()
        for u, v in part:
            e = (min(u, v), max(u, v))
            if e not in edge_set:
                raise NotACoverError(f"part edge {e} is not an edge of the graph")
            cur.add(e)
        norm_parts.append(cur)
    covered = set().union(*norm_parts) if norm_parts else set()
    if covered != edge_set:
        missing = sorted(edge_set - covered)
        raise NotACoverError(f"{len(missing)} edges uncovered, e.g. {missing[:3]}")
    if not norm_parts:
        return Coloring({v: 0 for v in range(g.n_vertices)}, 1)
    for j, (part, col) in enumerate(zip(norm_parts, colorings)):
        ok, bad = verify_coloring(Graph(g.n_vertices, part), col)
        if not ok:
            raise ImproperInputError(f"coloring {j} improper on its part at edge {bad}")
    palette = 1
    for col in colorings:
        palette *= col.palette_size
    codes = {}
    for v in range(g.n_vertices):
        code, weight = 0, 1
        for col in colorings:
            code += col.colors[v] * weight
            weight *= col.palette_size
        codes[v] = code
    return Coloring(codes, palette)


def two_coloring_or_odd_cycle(g: Graph) -> tuple[Coloring | None, list[int] | None]:
    """A proper 2-coloring when g has no odd cycle, else the shortest odd cycle.

    Edgeless graphs get palette size 1.
    """
    colors: dict[int, int] = {}
    for root in range(g.n_vertices):
        if root in colors:
            continue
        colors[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in colors:
                    colors[w] = colors[u] ^ 1
                    queue.append(w)
                elif colors[w] == colors[u]:
                    _, cycle = shortest_odd_cycle(g)
                    return None, cycle
    if g.n_vertices == 0:
        return Coloring({}, 0), None
    return Coloring(colors, 2 if g.n_edges else 1), None


@dataclass
class ProfileEntry:
    m: int
    witness: tuple[int, ...]
    exact: bool


@dataclass
class ChromaticSizeProfile:
    entries: dict[int, ProfileEntry] = field(default_factory=dict)
    complete: bool = True
    tests: int = 0


def _min_induced_degree_ok(g, subset, d):
    members = set(subset)
    return all(sum(1 for u in g.neighbors(v) if u in members) >= d for v in subset)


def subgraph_chromatic_profile(
    g: Graph, k_max: int, test_budget: int | None = None
) -> ChromaticSizeProfile:
    """For each 2 <= k <= k_max with chi(g) >= k: the least number of vertices
    of a subgraph with chromatic number >= k, plus a witness vertex set.

    Searching induced subgraphs suffices (restoring induced edges never
    lowers chi), minimal witnesses are connected, and at the minimal size
    every witness has induced degree >= k-1, which prunes the enumeration.
    On budget exhaustion the profile is truncated and flagged incomplete.
    """
    profile = ChromaticSizeProfile()
    chi = chromatic_number(g).chi
    prev = 2
    for k in range(2, min(k_max, chi) + 1):
        found = None
        m = max(prev, k)
        while m <= g.n_vertices and found is None:
            exhausted = False
            for subset in connected_induced_subsets(g, m):
                if not _min_induced_degree_ok(g, subset, k - 1):
                    continue
                if test_budget is not None and profile.tests >= test_budget:
                    exhausted = True
                    break
                profile.tests += 1
                sub, _ = induced_subgraph(g, subset)
                if find_k_coloring(sub, k - 1) is None:
                    found = subset
                    break
            if exhausted:
                profile.complete = False
                return profile
            if found is None:
                m += 1
        if found is None:
            break
        profile.entries[k] = ProfileEntry(m, tuple(found), True)
        prev = m
    return profile
