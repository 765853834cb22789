"""Closed neighborhood corona product of graphs.

Builds ``G1 [x] G2`` and computes its adjacency, Laplacian and signless
Laplacian spectra, Kirchhoff index, spanning-tree count, energy and
integrality, each by a closed form over the factors and by a direct
computation on the product.
"""

from .graph import (
    Graph,
    MatrixKind,
    build_graph,
    make_family,
    matrix_of,
    parse_family,
    parse_graph6,
    regularity_and_components,
    serialize_graph,
)
from .invariants import (
    EquienergeticPair,
    check_cospectral,
    check_integral,
    coronals_equal,
    equienergetic_product_pair,
    graph_energy,
    kirchhoff_direct,
    kirchhoff_formula,
    spanning_trees_direct,
    spanning_trees_formula,
)
from .poly import (
    CoronalDecomposition,
    IntPoly,
    RationalFn,
    charpoly_and_adjugate_sum,
    coronal_of,
    integer_roots,
    real_poly_roots,
    reduce_rational_fn,
)
from .product import ProductCounts, closed_neighborhood_corona, product_counts
from .spectra import (
    Spectrum,
    adjacency_spectrum_formula,
    laplacian_spectrum_formula,
    signless_spectrum_formula,
    symmetric_eigenvalues,
)
from .suite import SuiteReport, run_verify_suite

__all__ = [
    "Graph",
    "MatrixKind",
    "build_graph",
    "make_family",
    "matrix_of",
    "parse_family",
    "parse_graph6",
    "regularity_and_components",
    "serialize_graph",
    "EquienergeticPair",
    "check_cospectral",
    "check_integral",
    "coronals_equal",
    "equienergetic_product_pair",
    "graph_energy",
    "kirchhoff_direct",
    "kirchhoff_formula",
    "spanning_trees_direct",
    "spanning_trees_formula",
    "CoronalDecomposition",
    "IntPoly",
    "RationalFn",
    "charpoly_and_adjugate_sum",
    "coronal_of",
    "integer_roots",
    "real_poly_roots",
    "reduce_rational_fn",
    "ProductCounts",
    "closed_neighborhood_corona",
    "product_counts",
    "Spectrum",
    "adjacency_spectrum_formula",
    "laplacian_spectrum_formula",
    "signless_spectrum_formula",
    "symmetric_eigenvalues",
    "SuiteReport",
    "run_verify_suite",
]

__version__ = "0.1.0"
