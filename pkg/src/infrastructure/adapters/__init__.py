"""
인프라 어댑터
"""
from .documents import (
    CentroidDocument,
    CertificateDocument,
    ComparisonDocument,
    LabelsDocument,
    MultiPteDocument,
    PolynomialDocument,
    ShapeDocument,
    SignatureDocument,
    TreeDocument,
    VerificationDocument,
    polynomial_digest,
    to_json,
)
from .dot_export import tree_to_dot
from .networkx_bridge import (
    random_graph,
    random_subtree_edges,
    random_tree,
    random_weighted_tree,
    tree_from_networkx,
    tree_to_networkx,
)

__all__ = [
    "CentroidDocument",
    "CertificateDocument",
    "ComparisonDocument",
    "LabelsDocument",
    "MultiPteDocument",
    "PolynomialDocument",
    "ShapeDocument",
    "SignatureDocument",
    "TreeDocument",
    "VerificationDocument",
    "polynomial_digest",
    "to_json",
    "tree_to_dot",
    "random_graph",
    "random_subtree_edges",
    "random_tree",
    "random_weighted_tree",
    "tree_from_networkx",
    "tree_to_networkx",
]
