"""Command line: generation, exact solving, simulation, audits, reports.

Every report embeds the tool version and the full normalized config; JSON is
dumped with sorted keys so identical configs reproduce identical bytes.
Exit codes: 0 success, 1 audit failure, 2 usage error, 3 budget-exceeded
with flagged output.
"""

import argparse
import json
import os
import sys

from . import __version__
from .coloring import chromatic_number, subgraph_chromatic_profile
from .construction import (
    build_sim,
    diagonalize,
    make_plan,
    run_all_audits,
    seeded_anchor_adversary,
    seeded_table_adversary,
    sim_from_json_dict,
)
from .disjoint_types import (
    DisjointType,
    canonical_type,
    concat,
    format_ordinal_set,
    parse_ordinal_set,
    tp,
    validate_type,
)
from .graphio import read_graph, write_graph, write_vertex_map
from .ladders import generate_ladders, ladders_to_json_dict, realization_census
from .specker import SpeckerSpec, build_specker, subset_unrank

EXIT_OK = 0
EXIT_AUDIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

AUDIT_NAMES = ("requirements", "decomposition", "subgraph", "back_neighborhoods")


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _base_report(config: dict, body: dict) -> dict:
    report = {
        "tool": "speckerlab",
        "version": __version__,
        "config": config,
        "seed": config.get("seed"),
    }
    report.update(body)
    return report


def parse_anchor_spec(text: str) -> tuple[int, ...]:
    """Either `count:lo-hi` (count evenly spaced values) or a comma list."""
    if ":" in text:
        count_part, range_part = text.split(":", 1)
        count = int(count_part)
        lo_part, hi_part = range_part.split("-", 1)
        lo, hi = int(lo_part), int(hi_part)
        if count < 1 or hi < lo:
            raise ValueError(f"bad anchor spec {text!r}")
        if count == 1:
            return (lo,)
        values = tuple(lo + (i * (hi - lo)) // (count - 1) for i in range(count))
        if len(set(values)) != count:
            raise ValueError(f"range {lo}-{hi} too narrow for {count} anchors")
        return values
    return parse_ordinal_set(text)


def _parse_f(value) -> tuple[int, ...]:
    if isinstance(value, str):
        return tuple(int(x) for x in value.split(","))
    return tuple(int(x) for x in value)


def _resolve_audit_list(spec: str) -> tuple[str, ...]:
    if spec == "all":
        return AUDIT_NAMES
    if spec == "none":
        return ()
    names = tuple(part.strip() for part in spec.split(",") if part.strip())
    for name in names:
        if name not in AUDIT_NAMES:
            raise ValueError(f"unknown audit {name!r}; choose from {AUDIT_NAMES}")
    return names


def run_simulate(config: dict):
    """Build a sim from a config dict and run the requested audits.

    Returns (report, sim); the report embeds a normalized copy of the config
    and is byte-stable for a fixed config.
    """
    normalized = {
        "command": "simulate",
        "mode": config["mode"],
        "seed": int(config["seed"]),
        "anchors": config.get("anchors", "200:1000-50000"),
        "f": config.get("f", "3,3,3,3"),
        "color_count": int(config.get("color_count", 4)),
        "generator_count": int(config.get("generator_count", 8)),
        "planted_seed": config.get("planted_seed"),
        "planted_p": float(config.get("planted_p", 0.25)),
        "ladder_len": config.get("ladder_len"),
        "audit": config.get("audit", "all"),
        "subgraph_budget": config.get("subgraph_budget", 20000),
    }
    anchors = parse_anchor_spec(normalized["anchors"])
    plan = make_plan(_parse_f(normalized["f"]))
    ladder_len = normalized["ladder_len"] or plan.total_len
    ladders = generate_ladders(normalized["seed"], anchors, ladder_len)
    planted = None
    if normalized["planted_seed"] is not None:
        oracle = seeded_anchor_adversary(
            int(normalized["planted_seed"]), normalized["color_count"]
        )
        planted = {alpha: oracle(alpha) for alpha in anchors}
    sim = build_sim(
        normalized["mode"],
        plan,
        ladders,
        normalized["seed"],
        color_count=normalized["color_count"],
        generator_count=normalized["generator_count"],
        planted=planted,
        planted_p=normalized["planted_p"],
    )
    wanted = _resolve_audit_list(normalized["audit"])
    audits = {}
    if "requirements" in wanted:
        from .construction import audit_requirements

        rep = audit_requirements(sim)
        audits[rep.name] = rep
    if "decomposition" in wanted:
        from .construction import audit_decomposition

        for k in range(plan.k_max + 1):
            rep = audit_decomposition(sim, k)
            audits[rep.name] = rep
    if "subgraph" in wanted:
        from .construction import audit_subgraph_chromatic

        for k in range(plan.k_max + 1):
            rep = audit_subgraph_chromatic(sim, k, budget=normalized["subgraph_budget"])
            audits[rep.name] = rep
    if "back_neighborhoods" in wanted and sim.mode == "B":
        from .construction import audit_back_neighborhoods

        rep = audit_back_neighborhoods(sim)
        audits[rep.name] = rep
    by_label = {}
    for _, _, h in sim.edges:
        by_label[str(h)] = by_label.get(str(h), 0) + 1
    report = _base_report(
        normalized,
        {
            "sim": {
                "n_vertices": len(sim.vertices),
                "n_edges": len(sim.edges),
                "edges_by_label": by_label,
            },
            "audits": {name: rep.to_json_dict() for name, rep in audits.items()},
        },
    )
    return report, sim


def _audit_exit(audits: dict) -> int:
    if any(not rep["passed"] for rep in audits.values()):
        return EXIT_AUDIT_FAIL
    if any(rep["stats"].get("sampled") for rep in audits.values()):
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_type(args) -> int:
    if args.type_cmd == "canonical":
        print(canonical_type(args.n, args.s).bits)
    elif args.type_cmd == "tp":
        a = parse_ordinal_set(args.a)
        b = parse_ordinal_set(args.b)
        print(tp(a, b).bits)
    elif args.type_cmd == "concat":
        print(concat(validate_type(args.bits0), validate_type(args.bits1)).bits)
    else:
        t = validate_type(args.bits)
        print(f"valid type of length {t.n}")
    return EXIT_OK


def _cmd_specker(args) -> int:
    if args.specker_cmd == "gen":
        t = _type_from_args(args)
        spec = SpeckerSpec(args.alpha, t)
        g = build_specker(spec, max_vertices=args.max_vertices)
        write_graph(g, args.out)
        if args.map_out:
            pairs = [
                (rank, subset_unrank(rank, spec.n))
                for rank in range(spec.n_vertices)
            ]
            write_vertex_map(pairs, args.map_out)
        print(f"wrote {g.n_vertices} vertices, {g.n_edges} edges to {args.out}")
        return EXIT_OK
    # trend: informative chromatic growth report, no asserted rate
    t = canonical_type(args.n, args.s)
    rows = []
    budget_hit = False
    for alpha in range(2 * args.n, args.alpha_max + 1):
        g = build_specker(SpeckerSpec(alpha, t), max_vertices=args.max_vertices)
        result = chromatic_number(g, node_budget=args.node_budget)
        rows.append(
            {
                "alpha": alpha,
                "n_vertices": g.n_vertices,
                "n_edges": g.n_edges,
                "chi": result.chi,
                "exact": result.exact,
            }
        )
        budget_hit = budget_hit or not result.exact
    config = {
        "command": "specker",
        "action": "trend",
        "n": args.n,
        "s": args.s,
        "alpha_max": args.alpha_max,
        "seed": None,
    }
    report = _base_report(config, {"trend": rows, "note": "measured values only"})
    _emit(dump_report(report), args.out)
    return EXIT_BUDGET if budget_hit else EXIT_OK


def _type_from_args(args) -> DisjointType:
    if args.type:
        return validate_type(args.type)
    return canonical_type(args.canonical[0], args.canonical[1])


def _cmd_chroma(args) -> int:
    g = read_graph(args.graph)
    node_budget = args.budget_ms * 1000 if args.budget_ms is not None else None
    result = chromatic_number(g, node_budget=node_budget)
    config = {
        "command": "chroma",
        "in": args.graph,
        "budget_ms": args.budget_ms,
        "seed": None,
    }
    report = _base_report(
        config,
        {
            "chi": result.chi,
            "exact": result.exact,
            "certificate": result.certificate,
            "nodes": result.nodes,
            "palette_size": result.coloring.palette_size,
        },
    )
    _emit(dump_report(report), args.out)
    if args.coloring_out:
        lines = [
            f"c {v} {result.coloring.colors[v]}" for v in range(g.n_vertices)
        ]
        with open(args.coloring_out, "w", encoding="ascii", newline="\n") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    return EXIT_OK if result.exact else EXIT_BUDGET


def _cmd_fg(args) -> int:
    g = read_graph(args.graph)
    profile = subgraph_chromatic_profile(g, args.k_max, test_budget=args.budget)
    config = {
        "command": "fg",
        "in": args.graph,
        "k_max": args.k_max,
        "budget": args.budget,
        "seed": None,
    }
    entries = {
        str(k): {"k": k, "m": e.m, "witness": list(e.witness), "exact": e.exact}
        for k, e in profile.entries.items()
    }
    report = _base_report(
        config,
        {"profile": entries, "complete": profile.complete, "tests": profile.tests},
    )
    _emit(dump_report(report), args.out)
    return EXIT_OK if profile.complete else EXIT_BUDGET


def _cmd_ladder(args) -> int:
    anchors = parse_anchor_spec(args.anchors)
    system = generate_ladders(args.seed, anchors, args.ladder_len)
    if args.ladder_cmd == "gen":
        config = {
            "command": "ladder",
            "action": "gen",
            "seed": args.seed,
            "anchors": args.anchors,
            "ladder_len": args.ladder_len,
        }
        report = _base_report(config, {"system": ladders_to_json_dict(system)})
        _emit(dump_report(report), args.out)
        return EXIT_OK
    partition = None
    if args.classes_mod > 1:
        partition = {a: i % args.classes_mod for i, a in enumerate(system.anchors)}
    census = realization_census(system, args.n, partition)
    _emit(census.to_csv(), args.out)
    return EXIT_OK


def _cmd_simulate(args) -> int:
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            loaded = json.load(fh)
        config = loaded.get("config", loaded)
    else:
        if args.mode is None or args.seed is None:
            raise ValueError("simulate needs --mode and --seed (or --config)")
        config = {
            "command": "simulate",
            "mode": args.mode,
            "seed": args.seed,
            "anchors": args.anchors,
            "f": args.f,
            "color_count": args.color_count,
            "generator_count": args.generators,
            "planted_seed": args.planted_seed,
            "planted_p": args.planted_p,
            "ladder_len": args.ladder_len,
            "audit": args.audit,
            "subgraph_budget": args.subgraph_budget,
        }
    report, sim = run_simulate(config)
    _emit(dump_report(report), args.out)
    if args.sim_out:
        _emit(dump_report(sim.to_json_dict()), args.sim_out)
    return _audit_exit(report["audits"])


def _cmd_audit(args) -> int:
    with open(args.sim, encoding="utf-8") as fh:
        sim = sim_from_json_dict(json.load(fh))
    wanted = _resolve_audit_list(args.checks)
    from .construction import (
        audit_back_neighborhoods,
        audit_decomposition,
        audit_requirements,
        audit_subgraph_chromatic,
    )

    audits = {}
    if "requirements" in wanted:
        rep = audit_requirements(sim)
        audits[rep.name] = rep
    if "decomposition" in wanted:
        for k in range(sim.plan.k_max + 1):
            rep = audit_decomposition(sim, k)
            audits[rep.name] = rep
    if "subgraph" in wanted:
        for k in range(sim.plan.k_max + 1):
            rep = audit_subgraph_chromatic(sim, k, budget=args.subgraph_budget)
            audits[rep.name] = rep
    if "back_neighborhoods" in wanted and sim.mode == "B":
        rep = audit_back_neighborhoods(sim)
        audits[rep.name] = rep
    config = {
        "command": "audit",
        "in": args.sim,
        "checks": args.checks,
        "subgraph_budget": args.subgraph_budget,
        "seed": sim.seed,
    }
    report = _base_report(
        config, {"audits": {name: rep.to_json_dict() for name, rep in audits.items()}}
    )
    _emit(dump_report(report), args.out)
    return _audit_exit(report["audits"])


def _cmd_diagonalize(args) -> int:
    with open(args.sim, encoding="utf-8") as fh:
        sim = sim_from_json_dict(json.load(fh))
    if sim.mode == "B":
        adversary = seeded_anchor_adversary(args.adversary_seed, sim.color_count)
    else:
        adversary = seeded_table_adversary(args.adversary_seed, sim.color_count)
    outcome = diagonalize(sim, adversary)
    config = {
        "command": "diagonalize",
        "in": args.sim,
        "adversary_seed": args.adversary_seed,
        "seed": sim.seed,
    }
    report = _base_report(config, {"diagonalization": outcome.to_json_dict()})
    _emit(dump_report(report), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="speckerlab",
        description="Interleaving-type graphs, exact coloring, ladder systems, "
        "and audited seeded constructions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    default_threads = int(os.environ.get("SPECKERLAB_THREADS", "1"))
    parser.add_argument(
        "--threads",
        type=int,
        default=default_threads,
        help="worker count; the default (1) is the deterministic reference mode",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_type = sub.add_parser("type", help="disjoint-type algebra")
    type_sub = p_type.add_subparsers(dest="type_cmd", required=True)
    p_can = type_sub.add_parser("canonical")
    p_can.add_argument("n", type=int)
    p_can.add_argument("s", type=int)
    p_tp = type_sub.add_parser("tp")
    p_tp.add_argument("a")
    p_tp.add_argument("b")
    p_cc = type_sub.add_parser("concat")
    p_cc.add_argument("bits0")
    p_cc.add_argument("bits1")
    p_val = type_sub.add_parser("validate")
    p_val.add_argument("bits")
    p_type.set_defaults(func=_cmd_type)

    p_spk = sub.add_parser("specker", help="interleaving-type graph generation")
    spk_sub = p_spk.add_subparsers(dest="specker_cmd", required=True)
    p_gen = spk_sub.add_parser("gen")
    p_gen.add_argument("--alpha", type=int, required=True)
    group = p_gen.add_mutually_exclusive_group(required=True)
    group.add_argument("--type", help="explicit 0/1 word")
    group.add_argument(
        "--canonical", nargs=2, type=int, metavar=("N", "S"), default=None
    )
    p_gen.add_argument("--max-vertices", type=int, default=200_000)
    p_gen.add_argument("--out", required=True)
    p_gen.add_argument("--map-out")
    p_trend = spk_sub.add_parser("trend")
    p_trend.add_argument("--n", type=int, required=True)
    p_trend.add_argument("--s", type=int, required=True)
    p_trend.add_argument("--alpha-max", type=int, required=True)
    p_trend.add_argument("--max-vertices", type=int, default=5000)
    p_trend.add_argument("--node-budget", type=int, default=None)
    p_trend.add_argument("--out")
    p_spk.set_defaults(func=_cmd_specker)

    p_chr = sub.add_parser("chroma", help="exact chromatic number of a graph file")
    p_chr.add_argument("--in", dest="graph", required=True)
    p_chr.add_argument("--budget-ms", type=int, default=None)
    p_chr.add_argument("--out")
    p_chr.add_argument("--coloring-out")
    p_chr.set_defaults(func=_cmd_chroma)

    p_fg = sub.add_parser("fg", help="least subgraph sizes forcing chi >= k")
    p_fg.add_argument("--in", dest="graph", required=True)
    p_fg.add_argument("--k-max", type=int, required=True)
    p_fg.add_argument("--budget", type=int, default=None)
    p_fg.add_argument("--out")
    p_fg.set_defaults(func=_cmd_fg)

    p_lad = sub.add_parser("ladder", help="ladder systems and realization census")
    lad_sub = p_lad.add_subparsers(dest="ladder_cmd", required=True)
    for name in ("gen", "census"):
        p = lad_sub.add_parser(name)
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--anchors", required=True)
        p.add_argument("--ladder-len", type=int, required=True)
        p.add_argument("--out")
        if name == "census":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--classes-mod", type=int, default=1)
    p_lad.set_defaults(func=_cmd_ladder)

    p_sim = sub.add_parser("simulate", help="build a seeded construction and audit it")
    p_sim.add_argument("--mode", choices=("A", "B"))
    p_sim.add_argument("--seed", type=int)
    p_sim.add_argument("--anchors", default="200:1000-50000")
    p_sim.add_argument("--f", default="3,3,3,3")
    p_sim.add_argument("--color-count", type=int, default=4)
    p_sim.add_argument("--generators", type=int, default=8)
    p_sim.add_argument("--planted-seed", type=int, default=None)
    p_sim.add_argument("--planted-p", type=float, default=0.25)
    p_sim.add_argument("--ladder-len", type=int, default=None)
    p_sim.add_argument("--audit", default="all")
    p_sim.add_argument("--subgraph-budget", type=int, default=20000)
    p_sim.add_argument("--config", help="re-run from a report's embedded config")
    p_sim.add_argument("--out")
    p_sim.add_argument("--sim-out")
    p_sim.set_defaults(func=_cmd_simulate)

    p_aud = sub.add_parser("audit", help="re-audit a serialized construction")
    p_aud.add_argument("--in", dest="sim", required=True)
    p_aud.add_argument("--checks", default="all")
    p_aud.add_argument("--subgraph-budget", type=int, default=20000)
    p_aud.add_argument("--out")
    p_aud.set_defaults(func=_cmd_audit)

    p_diag = sub.add_parser("diagonalize", help="play an adversary coloring")
    p_diag.add_argument("--in", dest="sim", required=True)
    p_diag.add_argument("--adversary-seed", type=int, required=True)
    p_diag.add_argument("--out")
    p_diag.set_defaults(func=_cmd_diagonalize)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
