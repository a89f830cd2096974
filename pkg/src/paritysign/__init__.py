"""Parity signed graphs: constructions, rna/adhika numbers, balance and
realizability tests, and desk-scale theorem verification."""

from .errors import (
    CapacityError,
    InvalidInputError,
    MalformedRecordError,
    ParitySignError,
    UnsupportedSizeError,
)
from .graphs import (
    ENUMERATION_MAX_N,
    FamilySpec,
    Graph,
    bridge_join,
    build_family,
    complete,
    complete_bipartite,
    corona,
    cycle,
    disjoint_union,
    enumerate_connected,
    is_bipartite,
    is_connected,
    parse_family,
    parse_graph6,
    path,
    star,
    write_graph6,
)
from .rna import (
    DEFAULT_EXACT_LIMIT,
    RnaResult,
    SpectrumReport,
    adhika,
    closed_form_rna,
    proof_labeling,
    rna_exact,
    rna_heuristic,
    sigma_spectrum,
)
from .signs import (
    Bipartition,
    Homogeneity,
    SignedGraph,
    all_negative,
    all_negative_realizable,
    all_positive,
    bipartition_to_labeling,
    homogeneity,
    induce_signs,
    is_balanced,
    is_parity_realizable,
    labeling_to_bipartition,
    negative_edge_count,
)
from .verify import (
    ConjectureRecord,
    TheoremCheck,
    conjecture_scan,
    enumerate_trees,
    tree_filter,
    verify_theorems,
)

__version__ = "0.1.0"
