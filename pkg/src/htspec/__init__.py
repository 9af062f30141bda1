"""htspec: set spectra of k-uniform hypertrees via matching polynomials
of connected induced subtrees, with structural and spectral power-tree
recognition."""

from .core import (
    UniformHypergraph,
    VertexSet,
    build,
    comb,
    disjoint_union,
    induced,
    is_connected,
    is_hyperforest,
    is_hypertree,
    is_power_tree,
    loose_path,
    pendant_edges,
    power,
    random_hypertree,
    star,
)
from .matching import (
    AlphaPolynomial,
    MatchingCounts,
    alpha_poly,
    alpha_str,
    comb_formula,
    count_real_comb_roots,
    expand_to_x,
    matching_counts_bruteforce,
    matching_counts_tree,
    matching_polynomial,
    poly_mul,
    to_alpha_poly,
    x_str,
)
from .spectra import (
    Eigenpair,
    SpectrumSet,
    alpha_roots,
    eigen_residual,
    find_totally_nonzero_eigenvector,
    is_cyclotomic_spectrum,
    lift_to_x,
    set_spectrum,
    spectral_radius,
)
from .subtrees import (
    EdgeSubset,
    SubtreeCatalog,
    connected_edge_subsets,
    distinct_matching_polynomials,
    induced_closure_holds,
    subtree_hypergraph,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaPolynomial",
    "Eigenpair",
    "EdgeSubset",
    "MatchingCounts",
    "SpectrumSet",
    "SubtreeCatalog",
    "UniformHypergraph",
    "VertexSet",
    "alpha_poly",
    "alpha_roots",
    "alpha_str",
    "build",
    "comb",
    "comb_formula",
    "connected_edge_subsets",
    "count_real_comb_roots",
    "disjoint_union",
    "distinct_matching_polynomials",
    "eigen_residual",
    "expand_to_x",
    "find_totally_nonzero_eigenvector",
    "induced",
    "induced_closure_holds",
    "is_connected",
    "is_cyclotomic_spectrum",
    "is_hyperforest",
    "is_hypertree",
    "is_power_tree",
    "lift_to_x",
    "loose_path",
    "matching_counts_bruteforce",
    "matching_counts_tree",
    "matching_polynomial",
    "pendant_edges",
    "poly_mul",
    "power",
    "random_hypertree",
    "set_spectrum",
    "spectral_radius",
    "star",
    "subtree_hypergraph",
    "to_alpha_poly",
    "x_str",
]
