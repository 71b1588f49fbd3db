"""Regular multigraphs with three distinct adjacency eigenvalues."""

from .bounds import (
    BoundReport,
    BruckRyser,
    Existence,
    bruck_ryser,
    harmonic_bound,
    known_nonexistence,
    lp_bound_verify,
    moore_bound,
    srg_identity,
    three_ev_bound,
)
from .canon import canonical_form, canonical_listing
from .errors import SpectraError
from .exact import QuadraticSurd
from .fbasis import FBasisExpansion, expand_in_f_basis, f_matrices, f_poly, nb_walk_oracle, verify_nb_theorem
from .field import FieldSpec, GFElement, field_make
from .geometry import incidence_graph, plane_incidence, polarity_graph, recognize_plane_from_double
from .multigraph import Multigraph, bipartite_double, degree_shift, from_matrix, girth, is_connected, regularity
from .search import SearchSpec, classify_three_ev, enumerate_graphs, no_multi_edge_at_extremal_order, verify_lemma32
from .spectral import (
    ThreeEigCertificate,
    approx_spectrum,
    certify_three_eigenvalues,
    extremal_necessary_conditions,
    srg_params,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BruckRyser",
    "Existence",
    "bruck_ryser",
    "harmonic_bound",
    "known_nonexistence",
    "lp_bound_verify",
    "moore_bound",
    "srg_identity",
    "three_ev_bound",
    "canonical_form",
    "canonical_listing",
    "SpectraError",
    "QuadraticSurd",
    "FBasisExpansion",
    "expand_in_f_basis",
    "f_matrices",
    "f_poly",
    "nb_walk_oracle",
    "verify_nb_theorem",
    "FieldSpec",
    "GFElement",
    "field_make",
    "incidence_graph",
    "plane_incidence",
    "polarity_graph",
    "recognize_plane_from_double",
    "Multigraph",
    "bipartite_double",
    "degree_shift",
    "from_matrix",
    "girth",
    "is_connected",
    "regularity",
    "SearchSpec",
    "classify_three_ev",
    "enumerate_graphs",
    "no_multi_edge_at_extremal_order",
    "verify_lemma32",
    "ThreeEigCertificate",
    "approx_spectrum",
    "certify_three_eigenvalues",
    "extremal_necessary_conditions",
    "srg_params",
]
