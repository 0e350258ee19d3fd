"""
PolynomialCalculator 테스트
"""
from math import comb

import pytest

from src.domain.errors import BudgetExceededError, InvalidPartitionError, InvalidTreeError
from src.domain.models import PteShape, Tree, WeightedGraph, WeightedTree
from src.domain.services import PolynomialCalculator, TreeBuilder, TreeContractor
from src.infrastructure.adapters import random_graph, random_subtree_edges, random_tree, random_weighted_tree
from tests.helpers import path_tree

TRIANGLE = WeightedGraph.unit(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def calculator() -> PolynomialCalculator:
    return PolynomialCalculator(budget=20, threads=1)


class TestLambdaAndRank:
    def test_empty_set(self):
        assert PolynomialCalculator.lambda_of(path_tree(4), []).parts == (1, 1, 1, 1)
        assert PolynomialCalculator.rank(path_tree(4), []) == 0

    def test_all_edges(self):
        assert PolynomialCalculator.lambda_of(path_tree(4), range(3)).parts == (4,)
        assert PolynomialCalculator.rank(path_tree(4), range(3)) == 3

    def test_one_edge_of_p3(self):
        assert PolynomialCalculator.lambda_of(path_tree(3), [0]).parts == (2, 1)

    def test_weighted(self):
        weighted = WeightedTree(tree=path_tree(3), weights=(4, 1, 2))
        assert PolynomialCalculator.lambda_of(weighted, [1]).parts == (4, 3)

    def test_triangle_rank(self):
        assert PolynomialCalculator.rank(TRIANGLE, range(3)) == 2

    def test_invalid_edge(self):
        with pytest.raises(InvalidTreeError):
            PolynomialCalculator.lambda_of(path_tree(3), [2])


class TestWPolynomial:
    def test_single_vertex(self, calculator):
        graph = WeightedGraph(vertex_count=1, edges=(), weights=(5,))
        assert calculator.w_polynomial(graph).as_dict() == {((5,), 0): 1}

    def test_single_edge(self, calculator):
        assert calculator.w_polynomial(path_tree(2)).as_dict() == {((1, 1), 0): 1, ((2,), 0): 1}

    def test_triangle(self, calculator):
        poly = calculator.w_polynomial(TRIANGLE)
        assert poly.as_dict() == {
            ((1, 1, 1), 0): 1,
            ((2, 1), 0): 3,
            ((3,), 0): 3,
            ((3,), 1): 1,
        }

    def test_specialization_on_random_graphs(self, calculator, rng):
        for _ in range(50):
            n = rng.randint(1, 7)
            m = rng.randint(0, min(n * (n - 1) // 2, 12))
            graph = random_graph(n, m, rng)
            unit = WeightedGraph(vertex_count=n, edges=graph.edges, weights=(1,) * n)
            assert calculator.w_polynomial(unit).evaluate(lambda i: 1, 2) == 2 ** graph.edge_count
            assert calculator.w_polynomial(graph).total_mass == 2 ** graph.edge_count

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as exc_info:
            PolynomialCalculator(budget=3).w_polynomial(path_tree(6))
        assert exc_info.value.limit == 3
        assert exc_info.value.requested == 5


class TestUPolynomial:
    def test_p3(self, calculator):
        assert calculator.u_polynomial(path_tree(3)).as_dict() == {
            ((3,), 0): 1,
            ((2, 1), 0): 2,
            ((1, 1, 1), 0): 1,
        }

    def test_single_vertex(self, calculator):
        assert calculator.u_polynomial(Tree(vertex_count=1, edges=())).as_dict() == {((1,), 0): 1}

    def test_p2(self, calculator):
        assert calculator.u_polynomial(path_tree(2)).as_dict() == {((2,), 0): 1, ((1, 1), 0): 1}

    def test_u_k_zero(self, calculator, t_211):
        assert calculator.u_k_polynomial(t_211, 0).as_dict() == {((15,), 0): 1}

    def test_u1_p3(self, calculator):
        assert calculator.u_k_polynomial(path_tree(3), 1).as_dict() == {((3,), 0): 1, ((2, 1), 0): 2}

    def test_negative_k(self, calculator):
        with pytest.raises(InvalidPartitionError):
            calculator.u_k_polynomial(path_tree(3), -1)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            PolynomialCalculator(budget=4).u_polynomial(path_tree(7))

    def test_u_k_ignores_budget(self):
        poly = PolynomialCalculator(budget=2).u_k_polynomial(path_tree(10), 1)
        assert poly.total_mass == 10

    def test_alpha_two_pair(self, calculator, t_211, t_220):
        assert calculator.u_k_polynomial(t_211, 2) == calculator.u_k_polynomial(t_220, 2)
        u3_a = calculator.u_k_polynomial(t_211, 3)
        u3_b = calculator.u_k_polynomial(t_220, 3)
        assert not PolynomialCalculator.poly_equal(u3_a, u3_b)
        assert PolynomialCalculator.poly_diff(u3_a, u3_b)
        assert PolynomialCalculator.coefficient(u3_a, (8, 3, 2, 2)) == 4
        assert PolynomialCalculator.coefficient(u3_b, (8, 3, 2, 2)) == 5

    def test_mass_and_parts(self, calculator, rng):
        for _ in range(30):
            tree = random_tree(rng.randint(1, 14), rng)
            m = tree.edge_count
            for k in range(4):
                poly = calculator.u_k_polynomial(tree, k)
                assert poly.total_mass == sum(comb(m, i) for i in range(min(k, m) + 1))
                for partition, grade, _ in poly:
                    assert partition.size == tree.vertex_count
                    assert len(partition) <= k + 1
                    assert grade == 0

    def test_monotone_in_k(self, calculator, t_211):
        lower = calculator.u_k_polynomial(t_211, 2).as_dict()
        upper = calculator.u_k_polynomial(t_211, 3).as_dict()
        assert all(upper[key] >= coeff for key, coeff in lower.items())

    def test_u_equals_w_on_random_trees(self, calculator, rng):
        for _ in range(200):
            tree = random_tree(rng.randint(1, 13), rng)
            u = calculator.u_polynomial(tree)
            assert u == calculator.w_polynomial(tree)
            assert u.max_y_grade == 0
            assert u == calculator.u_k_polynomial(tree, tree.edge_count)

    def test_u_f_equals_w_of_contraction(self, calculator, rng):
        for _ in range(200):
            weighted = random_weighted_tree(rng.randint(1, 13), rng)
            edges = random_subtree_edges(weighted.tree, rng)
            contracted = TreeContractor.contract_to(weighted, edges)
            assert calculator.u_f_polynomial(weighted, edges) == calculator.w_polynomial(contracted)


class TestUFPolynomial:
    def test_core_of_alpha_two_tree(self, calculator, t_211):
        assert calculator.u_f_polynomial(t_211, t_211.core_edges).as_dict() == {
            ((7, 7, 1), 0): 1,
            ((8, 7), 0): 2,
            ((15,), 0): 1,
        }

    def test_empty(self, calculator, t_211):
        assert calculator.u_f_polynomial(t_211, []).as_dict() == {((15,), 0): 1}

    def test_all_edges(self, calculator):
        tree = path_tree(5)
        assert calculator.u_f_polynomial(tree, range(4)) == calculator.u_polynomial(tree)

    def test_core_and_complement_agree(self, calculator, t_211, t_220):
        core_a, core_b = t_211.core_edges, t_220.core_edges
        rest_a = set(range(t_211.edge_count)) - core_a
        rest_b = set(range(t_220.edge_count)) - core_b
        assert calculator.u_f_polynomial(t_211, core_a) == calculator.u_f_polynomial(t_220, core_b)
        assert calculator.u_f_polynomial(t_211, rest_a) == calculator.u_f_polynomial(t_220, rest_b)


class TestPartitionCount:
    def test_alpha_two_coefficient(self, calculator, t_211, t_220):
        assert calculator.partition_count(t_211, (8, 3, 2, 2)) == 4
        assert calculator.partition_count(t_220, (8, 3, 2, 2)) == 5

    def test_wrong_size_is_zero(self, calculator, t_211):
        assert calculator.partition_count(t_211, (8, 3)) == 0

    def test_whole_tree(self, calculator, t_211):
        assert calculator.partition_count(t_211, (15,)) == 1

    def test_matches_enumeration(self, calculator, rng):
        for _ in range(40):
            weighted = random_weighted_tree(rng.randint(1, 10), rng, max_weight=3)
            for partition, _, coeff in calculator.u_polynomial(weighted):
                assert calculator.partition_count(weighted, partition) == coeff

    def test_large_tree(self, calculator):
        # 열거 예산을 넘는 트리에서도 동작
        tree = TreeBuilder.build_pte_tree(PteShape(alpha=6, p=(6, 2, 1)))
        assert calculator.partition_count(tree, (tree.vertex_count,)) == 1
        assert calculator.partition_count(tree, (tree.vertex_count - 1, 1)) == 27


class TestParallel:
    def test_threads_give_identical_result(self, mocker, t_211):
        mocker.patch("src.domain.services.polynomial_calculator._PARALLEL_MIN_SUBSETS", 0)
        single = PolynomialCalculator(threads=1).u_k_polynomial(t_211, 3)
        parallel = PolynomialCalculator(threads=3).u_k_polynomial(t_211, 3)
        assert single.terms == parallel.terms
