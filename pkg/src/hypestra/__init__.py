"""Adjacency spectra, Estrada index and spectral bound checking for
k-uniform hypergraphs."""

from .hypercore import (
    DisconnectedError,
    DuplicateEdgeError,
    FamilyLabeling,
    Hypergraph,
    HypergraphError,
    ParseError,
    VACUOUS,
    add_edge,
    coalesce,
    complement_uniform,
    degrees,
    diameter,
    distance_matrix,
    edge_swap,
    extend_edge,
    from_json,
    from_text,
    is_connected,
    is_k_uniform,
    is_regular,
    read_file,
    shrink,
    to_json,
    to_text,
    uniformity,
    write_file,
)
from .spectral import (
    ConvergenceError,
    DenseSymmetricMatrix,
    Spectrum,
    SpectralSummary,
    adjacency,
    adjacency_int,
    closed_walk_counts,
    distinct_eigenvalues,
    eigendecompose,
    energy,
    estrada_index,
    jacobi_eigh,
    negative_count,
    positive_count,
    spectral_moment,
    spectrum_of,
    summarize,
    trace_power,
    walk_count,
    walk_dominance,
)
from .families import (
    BIBDCertificate,
    CatalogEntry,
    FamilyGrammarError,
    FamilySpec,
    PathLabeling,
    bibd_validate,
    build_family,
    complete_uniform,
    compositions,
    cycle,
    edgeless,
    fano_plane,
    g_star_star,
    hyperstar,
    parse_family,
    path_p3,
    random_uniform,
    unicyclic_catalog,
    unicyclic_cm,
    x_n,
)
from .theorems import (
    AS_WRITTEN,
    BoundReport,
    CharacterizationMismatchError,
    ExtremalReport,
    OrderingInstance,
    OrderingReport,
    THETA_PLUS_ONE,
    check_all_bounds,
    check_ee_lower_edges,
    check_ee_lower_spectral,
    check_ee_upper_edges,
    check_ee_upper_energy,
    check_moment2_bounds,
    check_nordhaus_gaddum,
    check_sum_t_largest_hypergraph,
    check_sum_t_largest_matrix,
    classify_two_eigenvalue,
    ring_reduction,
    verify_extremal,
    verify_ordering_lemmas,
)

__version__ = "0.1.0"
