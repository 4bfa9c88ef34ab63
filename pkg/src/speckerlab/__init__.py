"""Finite-scale laboratory for interleaving-type graphs: disjoint-type
algebra, exact coloring with certificates, ladder systems, and seeded
anchored constructions with audits."""

__version__ = "0.1.0"

from .disjoint_types import (
    DisjointType,
    EMPTY_TYPE,
    all_types,
    canonical_type,
    concat,
    end_extends,
    ones_before_zeros,
    select_indices,
    ssup,
    tp,
    validate_type,
)
from .graphs import (
    Graph,
    check_homomorphism,
    connected_induced_subsets,
    extract_odd_cycle,
    induced_subgraph,
    is_forest,
    shortest_odd_cycle,
)
from .specker import (
    SpeckerSpec,
    bounded_odd_cycle_search,
    build_specker,
    specker_adjacent,
    specker_neighbors,
    subset_rank,
    subset_unrank,
)
from .coloring import (
    Coloring,
    chromatic_number,
    find_k_coloring,
    product_coloring,
    subgraph_chromatic_profile,
    two_coloring_or_odd_cycle,
    verify_coloring,
)
from .ladders import (
    LadderSystem,
    generate_ladders,
    realization_census,
    realize_type,
)
from .construction import (
    IntervalPlan,
    SimGraph,
    audit_back_neighborhoods,
    audit_decomposition,
    audit_requirements,
    audit_subgraph_chromatic,
    build_sim,
    diagonalize,
    make_plan,
    run_all_audits,
    sim_from_json_dict,
)
