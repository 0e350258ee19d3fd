"""
SubtreeCensus 테스트
"""
from itertools import combinations_with_replacement

import pytest

from src.domain.errors import BudgetExceededError, InvalidTreeError, LengthMismatchError
from src.domain.models import BranchType, PteShape
from src.domain.services import SubtreeCensus, TreeBuilder
from tests.helpers import path_tree


class TestFormula:
    def test_zero_type(self):
        assert SubtreeCensus.count_subtrees_formula(2, (1, 1), BranchType.zeros(2)) == 1

    def test_one_path(self):
        bt = BranchType((1, 0), (0, 0))
        assert SubtreeCensus.count_subtrees_formula(2, (1, 1), bt) == 2
        assert SubtreeCensus.count_subtrees_formula(2, (2, 0), bt) == 2

    def test_two_paths_same_branch(self):
        bt = BranchType((2, 0), (0, 0))
        assert SubtreeCensus.count_subtrees_formula(2, (1, 1), bt) == 0
        assert SubtreeCensus.count_subtrees_formula(2, (2, 0), bt) == 1

    def test_symmetry_count(self):
        assert SubtreeCensus.symmetry_count(BranchType((1, 1, 0), (0, 0, 0))) == 2
        assert SubtreeCensus.symmetry_count(BranchType.zeros(3)) == 6

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            SubtreeCensus.count_subtrees_formula(2, (1, 1, 0), BranchType.zeros(2))


class TestOracle:
    def test_matches_formula_exhaustively(self):
        census = SubtreeCensus()
        mismatches = []
        for alpha in range(0, 4):
            for n in (2, 3):
                types = census.enumerate_branch_types(n, 4)
                for p in combinations_with_replacement(range(alpha + 1), n):
                    tree = TreeBuilder.build_pte_tree(PteShape(alpha=alpha, p=p))
                    for bt in types:
                        formula = census.count_subtrees_formula(alpha, PteShape(alpha=alpha, p=p).p, bt)
                        if formula != census.count_subtrees_oracle(tree, bt):
                            mismatches.append((alpha, p, bt))
                        assert census.count_subtrees_literal(alpha, PteShape(alpha=alpha, p=p).p, bt) == formula
        assert mismatches == []

    def test_requires_core(self):
        with pytest.raises(InvalidTreeError):
            SubtreeCensus().count_subtrees_oracle(path_tree(4), BranchType.zeros(2))

    def test_budget(self, t_211):
        with pytest.raises(BudgetExceededError):
            SubtreeCensus(budget=1).count_subtrees_oracle(t_211, BranchType((1, 0), (0, 0)))

    def test_branch_count_mismatch(self, t_211):
        with pytest.raises(LengthMismatchError):
            SubtreeCensus().count_subtrees_oracle(t_211, BranchType.zeros(3))


class TestBranchTypes:
    def test_enumerate(self):
        types = SubtreeCensus.enumerate_branch_types(2, 1)
        assert [(bt.q, bt.t) for bt in types] == [
            ((0, 0), (0, 0)),
            ((0, 0), (1, 0)),
            ((1, 0), (0, 0)),
        ]

    def test_totals_non_decreasing(self):
        totals = [bt.total for bt in SubtreeCensus.enumerate_branch_types(3, 3)]
        assert totals == sorted(totals)
        assert max(totals) == 3


class TestSameCounts:
    def test_degree_two_certificate(self):
        assert SubtreeCensus.same_subtree_counts(6, (1, 2, 6), (0, 4, 5), 2) == (True, None)

    def test_breaks_above_degree(self):
        same, witness = SubtreeCensus.same_subtree_counts(6, (1, 2, 6), (0, 4, 5), 3)
        assert not same
        assert witness.total == 3

    def test_alpha_two_pair(self):
        assert SubtreeCensus.same_subtree_counts(2, (1, 1), (2, 0), 1)[0]
        assert not SubtreeCensus.same_subtree_counts(2, (1, 1), (2, 0), 2)[0]

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            SubtreeCensus.same_subtree_counts(2, (1, 1), (2, 0, 0), 1)
