"""Certify the topological Tverberg property of finite regular CW complexes.

Two sufficient conditions are checked with exact integer homology: the
complex is (r-1)-complementary (d(r-1)-1)-acyclic, or its deleted product
Conf_r is (d(r-1)-1)-acyclic. Both require r to be a prime power.
"""

__version__ = "0.1.0"

from .certify import TverbergCertificate, certify_tverberg, is_prime_power
from .complementary import check_complementary_acyclic, complement, enumerate_disjoint_tuples
from .complex_core import (
    FacePoset,
    RegularCwComplex,
    SimplicialComplex,
    are_disjoint,
    as_cw,
    build_cw,
    build_simplicial,
    face_poset,
    order_complex,
)
from .deleted_product import conf_homology, deleted_product
from .graphs import Multigraph, classify_12_tverberg, enumerate_connected_multigraphs, graph_to_cw
from .homology import (
    HomologyProfile,
    IntegerMatrix,
    euler_characteristic,
    is_n_acyclic,
    reduced_homology,
    smith_normal_form,
)

__all__ = [
    "FacePoset",
    "HomologyProfile",
    "IntegerMatrix",
    "Multigraph",
    "RegularCwComplex",
    "SimplicialComplex",
    "TverbergCertificate",
    "are_disjoint",
    "as_cw",
    "build_cw",
    "build_simplicial",
    "certify_tverberg",
    "check_complementary_acyclic",
    "classify_12_tverberg",
    "complement",
    "conf_homology",
    "deleted_product",
    "enumerate_connected_multigraphs",
    "enumerate_disjoint_tuples",
    "euler_characteristic",
    "face_poset",
    "graph_to_cw",
    "is_n_acyclic",
    "is_prime_power",
    "order_complex",
    "reduced_homology",
    "smith_normal_form",
]
