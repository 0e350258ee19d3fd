"""
도메인 서비스
"""
from .canonical_form import CanonicalForm
from .centroid_calculator import CentroidCalculator
from .contraction import TreeContractor
from .polynomial_calculator import PolynomialCalculator
from .pte_recognizer import PteRecognizer
from .pte_solver import EQUAL_MULTISETS, PteSolver
from .subtree_census import SubtreeCensus
from .tree_builder import TreeBuilder

__all__ = [
    "CanonicalForm",
    "CentroidCalculator",
    "TreeContractor",
    "PolynomialCalculator",
    "PteRecognizer",
    "EQUAL_MULTISETS",
    "PteSolver",
    "SubtreeCensus",
    "TreeBuilder",
]
