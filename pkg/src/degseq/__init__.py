"""Degree-sequence realizability and majorization toolkit."""

from .constructions import (
    HubFillSplit,
    build_clique_fill,
    build_hub_fill,
    clique_fill_sequence,
    hub_fill_sequence,
    hub_fill_split,
    incomplete_star,
    max_added_edges,
)
from .errors import DegseqError
from .graphs import (
    SimpleGraph,
    add_edge,
    degree_sequence,
    find_path,
    from_edge_list_text,
    is_connected,
    remove_edge,
    to_dot,
    to_edge_list_text,
    two_swap,
)
from .maximal import (
    MaximalSetReport,
    enumerate_connected_sequences,
    is_c_graphical_poset,
    maximal_elements,
    maximal_heads_full,
    verify_maximal_catalog,
)
from .orders import (
    BasicTransfer,
    Comparison,
    DegreeSequence,
    LorenzCurve,
    TransferChain,
    apply_basic_transfer,
    compare,
    convex_sum,
    decompose_into_basic_transfers,
    format_sequence,
    lorenz_curve,
    lorenz_majorized,
    majorized,
    min_tail_sum,
    nonnormalized_lorenz_points,
    parse_sequence,
)
from .realizability import (
    NonGraphicalWitness,
    ReductionTrace,
    Verdict,
    apply_inverse_transfer,
    erdos_gallai,
    generalized_reduce,
    havel_hakimi,
    havel_hakimi_trace,
    hh_reduce,
    is_c_graphical,
    non_graphical_certificate,
    realize,
    realize_connected,
    realize_via_domination,
    reduce_to_constant,
)

__version__ = "0.1.0"
