"""Seeded desk-scale simulator of anchored, label-decomposed sparse graphs.

Vertices are tagged with an anchor and carry a color table.  In mode A a
vertex is a restriction of a full generator function to the anchors below
its tag; in mode B each anchor is itself a vertex carrying a guess table
over the anchors below it.  For each vertex and each label k up to a cap,
a "question" scans the lower anchors for one whose table value is k and
whose ladder blocks interleave canonically with the vertex's ladder on
every block up to k; the least such anchor contributes one back-edge with
label k.  This yields a graph whose label classes are forests and whose
high-label classes avoid short odd cycles, which the audits here verify
edge by edge, together with the product-coloring bound on small subgraphs
and the back-neighborhood growth property.  A diagonalization driver checks
that whenever an adversary coloring is guessed by the tables and its color
classes realize the concatenated block type, a monochromatic edge appears.
"""

import functools
from dataclasses import dataclass, field, replace
from random import Random

from .coloring import (
    chromatic_number,
    product_coloring,
    two_coloring_or_odd_cycle,
    verify_coloring,
)
from .disjoint_types import (
    DisjointType,
    EMPTY_TYPE,
    canonical_type,
    concat,
    end_extends,
    tp,
)
from .graphs import Graph, check_homomorphism_by, connected_induced_subsets, is_forest, shortest_odd_cycle
from .ladders import LadderSystem, ladders_from_json_dict, ladders_to_json_dict, realize_type
from .specker import SpeckerSpec, specker_adjacent


class ConstructionError(ValueError):
    pass


class LadderTooShortError(ConstructionError):
    pass


class EmptyAnchorsError(ConstructionError):
    pass


class ModeMismatchError(ConstructionError):
    pass


MAX_STORED_FAILURES = 25


@dataclass(frozen=True)
class IntervalPlan:
    """Per-label parameters: target f, span width s, block length n = 2s^2+1,
    and the adjacent index intervals carved out of the ladder positions."""

    f_values: tuple[int, ...]
    s_values: tuple[int, ...]
    n_values: tuple[int, ...]
    starts: tuple[int, ...]

    @property
    def k_max(self) -> int:
        return len(self.f_values) - 1

    @property
    def total_len(self) -> int:
        return self.starts[-1] + self.n_values[-1]

    def interval(self, k: int) -> range:
        return range(self.starts[k], self.starts[k] + self.n_values[k])

    def block_type(self, k: int) -> DisjointType:
        return canonical_type(self.n_values[k], self.s_values[k])

    def concat_type(self, k: int) -> DisjointType:
        return functools.reduce(
            concat, (self.block_type(j) for j in range(k + 1)), EMPTY_TYPE
        )

    def to_json_dict(self) -> dict:
        return {
            "f": list(self.f_values),
            "s": list(self.s_values),
            "n": list(self.n_values),
            "starts": list(self.starts),
        }


def make_plan(f_values) -> IntervalPlan:
    """Width s(k) is the least s >= 1 with 2s+1 >= f(k); block length 2s^2+1."""
    f_values = tuple(int(x) for x in f_values)
    if not f_values:
        raise ConstructionError("need at least one f value")
    if any(x < 0 for x in f_values):
        raise ConstructionError("f values must be non-negative")
    s_values = tuple(max(1, f // 2) for f in f_values)
    n_values = tuple(2 * s * s + 1 for s in s_values)
    starts = []
    pos = 0
    for n in n_values:
        starts.append(pos)
        pos += n
    return IntervalPlan(f_values, s_values, n_values, tuple(starts))


def plan_from_json_dict(data: dict) -> IntervalPlan:
    plan = make_plan(data["f"])
    if (
        list(plan.s_values) != list(data["s"])
        or list(plan.n_values) != list(data["n"])
        or list(plan.starts) != list(data["starts"])
    ):
        raise ConstructionError("plan fields inconsistent with f table")
    return plan


@dataclass(frozen=True)
class SimVertex:
    id: int
    anchor: int
    table: tuple[int, ...]


@dataclass
class SimGraph:
    mode: str
    seed: int
    plan: IntervalPlan
    ladders: LadderSystem
    color_count: int
    generator_count: int
    planted_p: float
    vertices: list[SimVertex]
    edges: list[tuple[int, int, int]]  # (u, v, h); u is the lower-anchor endpoint

    def __post_init__(self):
        self._down = {}
        for u, v, h in self.edges:
            self._down[(v, h)] = u

    @property
    def anchors(self) -> tuple[int, ...]:
        return self.ladders.anchors

    def anchor_pos(self, alpha: int) -> int:
        return self.anchors.index(alpha)

    def down_edge(self, v_id: int, k: int) -> int | None:
        return self._down.get((v_id, k))

    def edges_with_label(self, k: int) -> list[tuple[int, int]]:
        return [(u, v) for u, v, h in self.edges if h == k]

    def edges_at_least(self, k: int) -> list[tuple[int, int]]:
        return [(u, v) for u, v, h in self.edges if h >= k]

    def edge_labels(self) -> dict[tuple[int, int], int]:
        return {(u, v): h for u, v, h in self.edges}

    def to_graph(self) -> Graph:
        return Graph(len(self.vertices), [(u, v) for u, v, _ in self.edges])

    def replace_edges(self, edges) -> "SimGraph":
        """Copy with a different edge list; used by fault-injection tests."""
        return replace(self, edges=list(edges))

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "seed": self.seed,
            "plan": self.plan.to_json_dict(),
            "anchors": list(self.anchors),
            "ladders": ladders_to_json_dict(self.ladders),
            "color_count": self.color_count,
            "generator_count": self.generator_count,
            "planted_p": self.planted_p,
            "vertices": [
                {"id": v.id, "anchor": v.anchor, "table": list(v.table)}
                for v in self.vertices
            ],
            "edges": [{"u": u, "v": v, "h": h} for u, v, h in self.edges],
        }


def sim_from_json_dict(data: dict) -> SimGraph:
    ladders = ladders_from_json_dict(data["ladders"])
    if list(ladders.anchors) != list(data["anchors"]):
        raise ConstructionError("anchor list inconsistent with ladder system")
    vertices = [
        SimVertex(entry["id"], entry["anchor"], tuple(entry["table"]))
        for entry in data["vertices"]
    ]
    for i, v in enumerate(vertices):
        if v.id != i:
            raise ConstructionError(f"vertex ids must be dense, got {v.id} at {i}")
    return SimGraph(
        mode=data["mode"],
        seed=data["seed"],
        plan=plan_from_json_dict(data["plan"]),
        ladders=ladders,
        color_count=data["color_count"],
        generator_count=data["generator_count"],
        planted_p=data["planted_p"],
        vertices=vertices,
        edges=[(e["u"], e["v"], e["h"]) for e in data["edges"]],
    )


def _pair_candidates(ladders: LadderSystem, plan: IntervalPlan):
    """For each anchor beta, the lower anchors alpha whose ladder blocks match
    beta's canonically from block 0 up to some level, with that level."""
    anchors = ladders.anchors
    blocks = [(plan.starts[k], plan.starts[k] + plan.n_values[k]) for k in range(plan.k_max + 1)]
    words = [plan.block_type(k).bits for k in range(plan.k_max + 1)]
    out = {beta: [] for beta in anchors}
    for j, beta in enumerate(anchors):
        lad_b = ladders.ladders[beta]
        for i in range(j):
            alpha = anchors[i]
            lad_a = ladders.ladders[alpha]
            level = -1
            for k, (st, sp) in enumerate(blocks):
                a_blk = lad_a[st:sp]
                b_blk = lad_b[st:sp]
                if set(a_blk).intersection(b_blk):
                    break
                if tp(a_blk, b_blk).bits != words[k]:
                    break
                level = k
            if level >= 0:
                out[beta].append((alpha, level))
    return out


def _assemble(mode, plan, ladders, seed, color_count, generator_count, planted_p, tables_by_anchor):
    anchors = ladders.anchors
    pos = {alpha: i for i, alpha in enumerate(anchors)}
    vertices: list[SimVertex] = []
    ids: dict[tuple[int, tuple[int, ...]], int] = {}
    for beta in anchors:
        for table in tables_by_anchor[beta]:
            key = (beta, table)
            if key not in ids:
                ids[key] = len(vertices)
                vertices.append(SimVertex(ids[key], beta, table))
    candidates = _pair_candidates(ladders, plan)
    edges: list[tuple[int, int, int]] = []
    taken: set[tuple[int, int]] = set()
    for tau in vertices:
        for alpha, level in candidates[tau.anchor]:
            k = tau.table[pos[alpha]]
            if k > level or (tau.id, k) in taken:
                continue
            if mode == "A":
                sigma_id = ids[(alpha, tau.table[: pos[alpha]])]
            else:
                sigma_id = pos[alpha]
            taken.add((tau.id, k))
            edges.append((sigma_id, tau.id, k))
    return SimGraph(
        mode=mode,
        seed=seed,
        plan=plan,
        ladders=ladders,
        color_count=color_count,
        generator_count=generator_count,
        planted_p=planted_p,
        vertices=vertices,
        edges=edges,
    )


def build_sim(
    mode: str,
    plan: IntervalPlan,
    ladders: LadderSystem,
    seed: int,
    *,
    color_count: int,
    generator_count: int = 8,
    planted: dict[int, int] | None = None,
    planted_p: float = 0.25,
) -> SimGraph:
    """Deterministic construction for the given mode.

    Mode A: vertices are the restrictions of generator_count seeded functions
    (plus the planted one, when given) to the anchors below each anchor,
    deduplicated per anchor.  Mode B: one vertex per anchor, with a seeded
    guess table that is overwritten by the planted coloring's restriction
    with probability planted_p.
    """
    if mode not in ("A", "B"):
        raise ConstructionError(f"unknown mode {mode!r}")
    anchors = ladders.anchors
    if not anchors:
        raise EmptyAnchorsError("no anchors")
    if ladders.ladder_len < plan.total_len:
        raise LadderTooShortError(
            f"ladders of length {ladders.ladder_len} cannot host "
            f"{plan.total_len} interval positions"
        )
    if color_count < 1:
        raise ConstructionError("color_count must be at least 1")
    if planted is not None:
        for alpha in anchors:
            if alpha not in planted:
                raise ConstructionError(f"planted coloring missing anchor {alpha}")
            if not 0 <= planted[alpha] < color_count:
                raise ConstructionError(f"planted color at {alpha} out of range")
    tables_by_anchor: dict[int, list[tuple[int, ...]]] = {}
    if mode == "A":
        if generator_count < 1:
            raise ConstructionError("mode A needs at least one generator")
        rows = []
        for i in range(generator_count):
            rng = Random(f"{seed}:gen:{i}")
            rows.append(tuple(rng.randrange(color_count) for _ in anchors))
        if planted is not None:
            rows.append(tuple(planted[alpha] for alpha in anchors))
        for j, beta in enumerate(anchors):
            tables_by_anchor[beta] = [row[:j] for row in rows]
    else:
        for j, beta in enumerate(anchors):
            rng = Random(f"{seed}:guess:{beta}")
            table = tuple(rng.randrange(color_count) for _ in range(j))
            if planted is not None:
                if Random(f"{seed}:plant:{beta}").random() < planted_p:
                    table = tuple(planted[alpha] for alpha in anchors[:j])
            tables_by_anchor[beta] = [table]
    return _assemble(
        mode, plan, ladders, seed, color_count, generator_count, planted_p, tables_by_anchor
    )


@dataclass
class AuditReport:
    name: str
    passed: bool
    failures: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def add_failure(self, item: dict):
        self.passed = False
        self.stats["failure_count"] = self.stats.get("failure_count", 0) + 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append(item)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failures": self.failures,
            "stats": self.stats,
        }


def audit_requirements(sim: SimGraph) -> AuditReport:
    """Edge-by-edge check of the construction contract: ordering/end-extension,
    label equals the upper table's value at the lower anchor, canonical block
    interleavings up to the label, and one back-edge per (vertex, label)."""
    report = AuditReport("requirements", True)
    anchors = sim.anchors
    pos = {alpha: i for i, alpha in enumerate(anchors)}
    seen: dict[tuple[int, int], int] = {}
    for u, v, h in sim.edges:
        sigma, tau = sim.vertices[u], sim.vertices[v]
        edge_desc = [u, v, h]
        if not 0 <= h <= sim.plan.k_max:
            report.add_failure({"check": "label_range", "edge": edge_desc})
            continue
        if sigma.anchor >= tau.anchor:
            report.add_failure({"check": "anchor_order", "edge": edge_desc})
            continue
        if sim.mode == "A":
            dom_sigma = anchors[: pos[sigma.anchor]]
            dom_tau = anchors[: pos[tau.anchor]]
            if not end_extends(dom_sigma, dom_tau) or tau.table[: len(sigma.table)] != sigma.table:
                report.add_failure({"check": "end_extension", "edge": edge_desc})
        if tau.table[pos[sigma.anchor]] != h:
            report.add_failure(
                {
                    "check": "label_value",
                    "edge": edge_desc,
                    "expected": tau.table[pos[sigma.anchor]],
                }
            )
        lad_a = sim.ladders.ladders[sigma.anchor]
        lad_b = sim.ladders.ladders[tau.anchor]
        for j in range(h + 1):
            block = sim.plan.interval(j)
            a_blk = lad_a[block.start : block.stop]
            b_blk = lad_b[block.start : block.stop]
            expected = sim.plan.block_type(j).bits
            if set(a_blk).intersection(b_blk):
                report.add_failure(
                    {"check": "block_disjoint", "edge": edge_desc, "block": j}
                )
            elif tp(a_blk, b_blk).bits != expected:
                report.add_failure(
                    {
                        "check": "block_type",
                        "edge": edge_desc,
                        "block": j,
                        "expected": expected,
                        "got": tp(a_blk, b_blk).bits,
                    }
                )
        seen[(v, h)] = seen.get((v, h), 0) + 1
    for (v, h), count in seen.items():
        if count > 1:
            report.add_failure(
                {"check": "uniqueness", "vertex": v, "label": h, "count": count}
            )
    report.stats["n_edges"] = len(sim.edges)
    return report


def audit_decomposition(sim: SimGraph, k: int) -> AuditReport:
    """Label class k must be a forest; classes >= k must map homomorphically
    into the block-k interleaving graph and contain no odd cycle of length
    <= f(k)."""
    if not 0 <= k <= sim.plan.k_max:
        raise ConstructionError(f"label {k} out of range")
    report = AuditReport(f"decomposition_k{k}", True)
    n = len(sim.vertices)
    g_k = Graph(n, sim.edges_with_label(k))
    forest_ok, cycle = is_forest(g_k)
    report.stats["label_edges"] = g_k.n_edges
    if not forest_ok:
        interior = cycle[:-1]
        apex = max(interior, key=lambda v: (sim.vertices[v].anchor, v))
        i = interior.index(apex)
        below = [interior[i - 1], cycle[i + 1]]
        report.add_failure(
            {
                "check": "forest",
                "cycle": cycle,
                "apex": apex,
                "apex_anchor": sim.vertices[apex].anchor,
                "apex_cycle_neighbors": below,
                "note": "the max-anchor cycle vertex would need two back-edges with one label",
            }
        )
    ge_edges = sim.edges_at_least(k)
    g_ge = Graph(n, ge_edges)
    block = sim.plan.interval(k)
    phi = {
        v.id: sim.ladders.ladders[v.anchor][block.start : block.stop]
        for v in sim.vertices
    }
    universe = max(lad[-1] for lad in sim.ladders.ladders.values()) + 1
    spec = SpeckerSpec(universe, sim.plan.block_type(k))
    hom_ok, bad = check_homomorphism_by(
        g_ge, lambda x, y: specker_adjacent(spec, x, y), phi
    )
    report.stats["ge_edges"] = g_ge.n_edges
    if not hom_ok:
        u, v = bad
        report.add_failure(
            {
                "check": "homomorphism",
                "edge": [u, v],
                "image_u": list(phi[u]),
                "image_v": list(phi[v]),
            }
        )
    bound = sim.plan.f_values[k]
    found = shortest_odd_cycle(g_ge, max_length=bound)
    if found is not None:
        report.add_failure(
            {"check": "bounded_odd_cycle", "length": found[0], "cycle": found[1], "bound": bound}
        )
    return report


def audit_subgraph_chromatic(
    sim: SimGraph, k: int, budget: int | None = None
) -> AuditReport:
    """Every connected induced subgraph on at most f(k) vertices must accept
    the explicit product coloring: 2-color each single-label class below k
    (forests) and the classes >= k together (odd-cycle-free at this size),
    combine, and stay within palette 2^(k+1); the exact solver cross-checks
    the bound.  With a budget, only a deterministic prefix of the enumeration
    is checked and the report is flagged as sampled."""
    if not 0 <= k <= sim.plan.k_max:
        raise ConstructionError(f"label {k} out of range")
    report = AuditReport(f"subgraph_chromatic_k{k}", True)
    g = sim.to_graph()
    labels = sim.edge_labels()
    size_cap = sim.plan.f_values[k]
    palette_cap = 2 ** (k + 1)
    checked = 0
    sampled = False
    for size in range(1, size_cap + 1):
        if sampled:
            break
        for subset in connected_induced_subsets(g, size):
            if budget is not None and checked >= budget:
                sampled = True
                break
            checked += 1
            sub, old_ids = _induced_with_labels(g, subset, labels)
            parts = [
                [e for e, lab in sub.items() if lab == j] for j in range(k)
            ]
            parts.append([e for e, lab in sub.items() if lab >= k])
            h_graph = Graph(len(old_ids), list(sub.keys()))
            colorings = []
            bad_part = None
            for j, part in enumerate(parts):
                col, odd = two_coloring_or_odd_cycle(Graph(len(old_ids), part))
                if odd is not None:
                    bad_part = (j, odd)
                    break
                colorings.append(col)
            if bad_part is not None:
                report.add_failure(
                    {
                        "check": "part_two_colorable",
                        "subset": list(subset),
                        "part": bad_part[0],
                        "odd_cycle": bad_part[1],
                    }
                )
                continue
            combined = product_coloring(h_graph, parts, colorings)
            ok, bad_edge = verify_coloring(h_graph, combined)
            if not ok:
                report.add_failure(
                    {"check": "product_proper", "subset": list(subset), "edge": list(bad_edge)}
                )
            if combined.palette_size > palette_cap:
                report.add_failure(
                    {
                        "check": "palette_bound",
                        "subset": list(subset),
                        "palette": combined.palette_size,
                        "bound": palette_cap,
                    }
                )
            exact = chromatic_number(h_graph)
            if exact.chi > palette_cap:
                report.add_failure(
                    {
                        "check": "exact_bound",
                        "subset": list(subset),
                        "chi": exact.chi,
                        "bound": palette_cap,
                    }
                )
    report.stats["checked"] = checked
    report.stats["sampled"] = sampled
    report.stats["size_cap"] = size_cap
    return report


def _induced_with_labels(g, subset, labels):
    keep = sorted(subset)
    out = {}
    for i, u in enumerate(keep):
        for j in range(i + 1, len(keep)):
            v = keep[j]
            if g.adjacent(u, v):
                out[(i, j)] = labels[(u, v)]
    return out, keep


def audit_back_neighborhoods(sim: SimGraph) -> AuditReport:
    """Mode B growth property: at most one lower neighbor per label, and the
    label-k lower neighbor (k >= 1) lies above the ladder element of the
    upper vertex at the last position of block k-1."""
    if sim.mode != "B":
        raise ModeMismatchError("back-neighborhood audit applies to mode B only")
    report = AuditReport("back_neighborhoods", True)
    down_by_vertex: dict[int, list[tuple[int, int]]] = {}
    for u, v, h in sim.edges:
        down_by_vertex.setdefault(v, []).append((h, u))
    cap = sim.plan.k_max + 1
    for v, entries in sorted(down_by_vertex.items()):
        if len(entries) > cap:
            report.add_failure(
                {"check": "neighborhood_size", "vertex": v, "size": len(entries), "cap": cap}
            )
        beta = sim.vertices[v].anchor
        lad_beta = sim.ladders.ladders[beta]
        for h, u in sorted(entries):
            if h < 1:
                continue
            floor_pos = sim.plan.interval(h - 1).stop - 1
            floor_value = lad_beta[floor_pos]
            alpha = sim.vertices[u].anchor
            if alpha <= floor_value:
                report.add_failure(
                    {
                        "check": "back_edge_floor",
                        "vertex": v,
                        "label": h,
                        "lower_anchor": alpha,
                        "floor": floor_value,
                    }
                )
    report.stats["vertices_with_back_edges"] = len(down_by_vertex)
    return report


def run_all_audits(sim: SimGraph, subgraph_budget: int | None = None) -> dict[str, AuditReport]:
    reports = {"requirements": audit_requirements(sim)}
    for k in range(sim.plan.k_max + 1):
        rep = audit_decomposition(sim, k)
        reports[rep.name] = rep
        rep = audit_subgraph_chromatic(sim, k, budget=subgraph_budget)
        reports[rep.name] = rep
    if sim.mode == "B":
        rep = audit_back_neighborhoods(sim)
        reports[rep.name] = rep
    return reports


@dataclass
class DiagOutcome:
    mode: str
    hypothesis_met: bool
    realized_color: int | None
    realized_pair: tuple[int, int] | None
    witness: dict | None
    class_sizes: dict[int, int]
    sim: SimGraph

    @property
    def kind(self) -> str:
        return "witness" if self.witness is not None else "guess_failed"

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "kind": self.kind,
            "hypothesis_met": self.hypothesis_met,
            "realized_color": self.realized_color,
            "realized_pair": list(self.realized_pair) if self.realized_pair else None,
            "witness": self.witness,
            "class_sizes": {str(k): n for k, n in sorted(self.class_sizes.items())},
        }


def seeded_anchor_adversary(seed: int, color_count: int):
    """Deterministic coloring of anchors, one stream per anchor."""

    def color(anchor: int) -> int:
        return Random(f"{seed}:adv:{anchor}").randrange(color_count)

    return color


def seeded_table_adversary(seed: int, color_count: int):
    """Deterministic coloring of (anchor, table) vertex descriptions."""

    def color(key) -> int:
        anchor, table = key
        text = ",".join(str(x) for x in table)
        return Random(f"{seed}:adv:{anchor}:{text}").randrange(color_count)

    return color


def diagonalize(sim: SimGraph, adversary) -> DiagOutcome:
    """Play an adversary coloring against the construction.

    Mode A: build the self-referential function rho over the anchors (each
    value is the adversary's color of rho's own restriction), rebuild the
    graph with rho's restrictions added, and search for a monochromatic edge
    among the rho vertices.  Mode B: collect the anchors whose guess tables
    equal the adversary's restriction, and per adversary color class try to
    realize the concatenated block type; a realized pair forces a recorded
    back-edge that is monochromatic.  Whenever some class realizes its
    concatenated type, a witness is guaranteed; otherwise the guess may
    simply fail at finite scale.
    """
    if sim.mode == "B":
        return _diagonalize_mode_b(sim, adversary)
    return _diagonalize_mode_a(sim, adversary)


def _class_realization(sim, class_members):
    for k in sorted(class_members):
        if k > sim.plan.k_max:
            continue  # the question loop is capped at k_max; higher colors are unreachable
        pair = realize_type(sim.ladders, sim.plan.concat_type(k), class_members[k])
        if pair is not None:
            return k, pair
    return None, None


def _diagonalize_mode_b(sim, adversary):
    anchors = sim.anchors
    pos = {alpha: i for i, alpha in enumerate(anchors)}
    adv_colors = {alpha: adversary(alpha) for alpha in anchors}
    for alpha, c in adv_colors.items():
        if not 0 <= c < sim.color_count:
            raise ConstructionError(f"adversary color {c} at {alpha} out of range")
    s_star = [
        alpha
        for j, alpha in enumerate(anchors)
        if sim.vertices[j].table == tuple(adv_colors[a] for a in anchors[:j])
    ]
    classes: dict[int, list[int]] = {}
    for alpha in s_star:
        classes.setdefault(adv_colors[alpha], []).append(alpha)
    class_sizes = {k: len(v) for k, v in classes.items()}
    k, pair = _class_realization(sim, classes)
    if pair is None:
        return DiagOutcome(sim.mode, False, None, None, None, class_sizes, sim)
    gamma, delta = pair
    u = sim.down_edge(pos[delta], k)
    if u is None:
        raise RuntimeError(
            f"question at anchor {delta} label {k} must have answered yes"
        )
    lower_anchor = sim.vertices[u].anchor
    if adv_colors[lower_anchor] != k or adv_colors[delta] != k:
        raise RuntimeError("witness edge is not monochromatic; construction broken")
    witness = {
        "u": u,
        "v": pos[delta],
        "h": k,
        "color": k,
        "u_anchor": lower_anchor,
        "v_anchor": delta,
    }
    return DiagOutcome(sim.mode, True, k, pair, witness, class_sizes, sim)


def _diagonalize_mode_a(sim, adversary):
    anchors = sim.anchors
    rho: dict[int, int] = {}
    rho_tables: dict[int, tuple[int, ...]] = {}
    for j, alpha in enumerate(anchors):
        table = tuple(rho[a] for a in anchors[:j])
        rho_tables[alpha] = table
        c = adversary((alpha, table))
        if not 0 <= c < sim.color_count:
            raise ConstructionError(f"adversary color {c} at {alpha} out of range")
        rho[alpha] = c
    tables_by_anchor: dict[int, list[tuple[int, ...]]] = {a: [] for a in anchors}
    for v in sim.vertices:
        tables_by_anchor[v.anchor].append(v.table)
    for alpha in anchors:
        tables_by_anchor[alpha].append(rho_tables[alpha])
    rebuilt = _assemble(
        "A",
        sim.plan,
        sim.ladders,
        sim.seed,
        sim.color_count,
        sim.generator_count,
        sim.planted_p,
        tables_by_anchor,
    )
    classes: dict[int, list[int]] = {}
    for alpha in anchors:
        classes.setdefault(rho[alpha], []).append(alpha)
    class_sizes = {k: len(v) for k, v in classes.items()}
    k, pair = _class_realization(rebuilt, classes)
    rho_ids = {
        v.id for v in rebuilt.vertices if v.table == rho_tables[v.anchor]
    }
    witness = None
    for u, v, h in rebuilt.edges:
        if u not in rho_ids or v not in rho_ids:
            continue
        cu = adversary((rebuilt.vertices[u].anchor, rebuilt.vertices[u].table))
        cv = adversary((rebuilt.vertices[v].anchor, rebuilt.vertices[v].table))
        if cu == cv:
            witness = {
                "u": u,
                "v": v,
                "h": h,
                "color": cu,
                "u_anchor": rebuilt.vertices[u].anchor,
                "v_anchor": rebuilt.vertices[v].anchor,
            }
            break
    if pair is not None and witness is None:
        raise RuntimeError("realized class without a monochromatic edge; construction broken")
    return DiagOutcome(sim.mode, pair is not None, k if pair else None, pair, witness, class_sizes, rebuilt)
