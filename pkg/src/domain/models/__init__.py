"""
도메인 모델
"""
from .census import BranchType, PteSignature
from .partition import Partition, PartitionPolynomial, TermDiff
from .pte import IntSequence, PteCertificate
from .tree import PteShape, RootedView, Tree, WeightedGraph, WeightedTree, rooted_view

__all__ = [
    "BranchType",
    "PteSignature",
    "Partition",
    "PartitionPolynomial",
    "TermDiff",
    "IntSequence",
    "PteCertificate",
    "PteShape",
    "RootedView",
    "Tree",
    "WeightedGraph",
    "WeightedTree",
    "rooted_view",
]
