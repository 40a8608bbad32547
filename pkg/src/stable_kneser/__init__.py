"""Chromatic numbers of stable Kneser hypergraphs.

Vertices are the s-stable k-subsets of [n] (cyclic gap at least s_i between
consecutive elements); hyperedges join r pairwise disjoint such sets.  The
package builds these hypergraphs, colors them with the closed-form schemes,
decides chromatic numbers exactly, and machine-checks the combinatorial
structures behind the closed forms: star/triangle edge partitions of the
window graph and the signed-set labeling argument.
"""

from .colorings import (
    Coloring,
    ColoringValidation,
    afl_min_block_coloring,
    block_coloring,
    coloring_from_json,
    coloring_to_json,
    interval_coloring,
    reindex_homomorphism,
    validate_coloring,
)
from .errors import (
    CapacityError,
    InternalContractError,
    StableKneserError,
    StateError,
)
from .hypergraph import (
    Graph,
    Hypergraph,
    build_stable_kneser,
    class_has_r_disjoint,
    enumerate_hyperedges,
    hypergraph_from_json,
    hypergraph_to_json,
    to_graph,
)
from .solver import (
    INDETERMINATE,
    NEG_INFINITY,
    AlphaResult,
    ChiResult,
    PackingResult,
    chromatic_number,
    independence_number,
    is_t_colorable,
    max_disjoint_packing,
)
from .subsets import (
    KSubset,
    are_pairwise_disjoint,
    enumerate_k_subsets,
    is_s_stable,
    is_vec_stable,
    validate_svec,
)
from .tucker import (
    AltResult,
    LabelFunction,
    SignedSet,
    TuckerReport,
    alt_set,
    build_lambda,
    f_sets,
    tucker_lower_bound,
    verify_tucker_conditions,
)
from .harness import (
    CLAIM_DOUBLED_VECTOR,
    CLAIM_RESIDUE_WINDOW,
    CLAIM_SANDWICH_UNIFORM,
    CLAIM_TWO_GAP_WINDOW,
    CLAIM_UNIFORM_GAP,
    CLAIM_VECTOR_GAP,
    CLAIM_VECTOR_GAP_CONJECTURE,
    CLAIM_WINDOW_INDEPENDENCE,
    NOT_APPLICABLE,
    InstanceSpec,
    ResidueCheck,
    VerdictRecord,
    aggregate,
    expected_value,
    formula_doubled_vector,
    formula_two_gap_window,
    formula_uniform_gap,
    formula_vector_gap,
    record_to_json,
    residue_window_condition,
    residue_window_value,
    run_instance,
    spec_hash,
    stretched_vector,
    sweep,
    translated_hyperedge_witness,
    write_summary_csv,
)
from .wgraph import (
    STAR,
    TRIANGLE,
    EdgeBijection,
    STPart,
    STPartition,
    STPropertyReport,
    build_w_graph,
    check_st_properties,
    coloring_to_st_partition,
    is_butterfly_free,
    kneser_edge_bijection,
    st_partition_from_json,
    st_partition_to_coloring,
    st_partition_to_json,
    w_edges,
)

__version__ = "0.1.0"
