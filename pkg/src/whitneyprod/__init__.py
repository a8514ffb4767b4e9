"""Simplicial graph products with exact topological invariants."""

from .chains import (
    Chain,
    boundary,
    chain_contractible,
    chain_euler,
    chain_from_text,
    chain_large_dimension,
    chain_small_dimension,
    chain_sphere,
    chain_to_text,
    decode,
    encode,
    inner_product,
    multiply,
)
from .graphs import (
    Graph,
    cliques,
    clique_number,
    euler_characteristic,
    f_vector,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    join,
    named,
    suspension,
    unit_sphere,
)
from .homology import (
    betti,
    dirac,
    harmonic_basis,
    incidence_matrices,
    kunneth_check,
    oriented_complex,
    poincare_polynomial,
)
from .derham import (
    chain_map_check,
    cohomology_iso_check,
    derham_betti,
    harmonic_product_check,
    psi_map,
    tensor_complex,
)
from .limits import DEFAULT_LIMITS, Limits
from .product import (
    ProductGraph,
    enhance,
    graph_product,
    graph_product_n,
    pointwise_dimension_check,
    refine_sequence,
)
from .topology import (
    contractible,
    curvature,
    dim_coloring,
    graph_boundary,
    homotopy_reduce,
    inductive_dimension,
    is_geometric,
    is_sphere,
    product_chromatic,
    simplex_curvature,
)

__version__ = "0.1.0"
