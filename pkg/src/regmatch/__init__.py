"""Regular saturation and regular Turan numbers of matchings.

Closed forms, extremal constructions, certification, and an exhaustive
small-order oracle, all built on an exact general-graph matching engine.
"""
from .certify import (
    Certificate,
    certify_rex_extremal,
    certify_rsat_extremal,
    is_matching_free,
    is_saturated_matching,
)
from .constructions import (
    HamiltonDecomposition,
    factor_critical_regular,
    odd_partition,
    rex_extremal_clique_form,
    rex_extremal_cycles,
    rsat_extremal,
    walecki_hamilton_decomposition,
)
from .formats import parse_graph6, to_dot, to_graph6
from .formulas import ExtremalAnswer, NotExistReason, rex_degree, rex_matching, rsat_matching
from .graph import (
    Graph,
    GraphError,
    circulant_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    non_edges,
    path_graph,
    petersen_graph,
    regular_degree,
    star_graph,
    with_edge,
)
from .matching import (
    GallaiEdmondsDecomposition,
    Matching,
    decompose,
    factor_critical_witness,
    gallai_edmonds,
    has_perfect_matching,
    is_factor_critical,
    matching_number,
    maximum_matching,
    tutte_berge_oracle,
    verify_witness,
)
from .oracle import (
    SearchOutcome,
    check_structure_claims,
    count_regular,
    enumerate_regular,
    oracle_rex,
    oracle_rsat,
)

__version__ = "0.1.0"
