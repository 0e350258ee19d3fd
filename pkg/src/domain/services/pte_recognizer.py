"""
PTE 트리 인식 서비스
간선 라벨 멀티셋 M_T, U_1로부터의 서명 복원, 구조적 인식
"""
from collections import Counter
from typing import List, Optional

from src.config.logging import logger

from ..errors import MalformedPolynomialError
from ..models.census import PteSignature
from ..models.partition import PartitionPolynomial
from ..models.tree import PteShape, Tree, rooted_view
from .canonical_form import CanonicalForm
from .centroid_calculator import CentroidCalculator
from .tree_builder import TreeBuilder


class PteRecognizer:
    """라벨과 U_1 기반 PTE 트리 판별기"""

    @staticmethod
    def label_multiset(tree: Tree) -> Counter:
        """M_T = {θ_e : e ∈ E}"""
        return Counter(CentroidCalculator.edge_labels(tree).values())

    @staticmethod
    def label_multiset_from_u1(u1: PartitionPolynomial, vertex_count: int) -> Counter:
        """
        U_1의 두 부분 항 x_{N-θ}x_θ 로부터 M_T 복원

        Raises:
            MalformedPolynomialError: x_N 계수가 1이 아니거나, N의 분할이 아니거나, 3개 이상의 부분이 있는 항
        """
        n = vertex_count
        if u1.coefficient((n,)) != 1:
            raise MalformedPolynomialError(f"x_{n} 항의 계수가 1이 아닙니다")
        labels: Counter = Counter()
        for partition, grade, coeff in u1:
            if grade != 0 or partition.size != n or len(partition) > 2:
                raise MalformedPolynomialError(f"U_1 항이 아닙니다: {partition} (y 차수 {grade})")
            if coeff < 0:
                raise MalformedPolynomialError(f"음의 계수: {coeff}·{partition}")
            if len(partition) == 2:
                labels[partition.parts[1]] += coeff
        return labels

    @staticmethod
    def signature_from_u1(u1: PartitionPolynomial, vertex_count: int) -> Optional[PteSignature]:
        """
        M_T가 {1^{2nα-β}, 2^β, 3^{nα}, (3α+1)^n} 꼴이면 (α, n, β)

        N = (3α+1)n + 1, n >= 2, α >= 1, 라벨 N/2 없음(유일 중심)을 함께 확인한다.
        """
        labels = PteRecognizer.label_multiset_from_u1(u1, vertex_count)
        if not labels or sum(labels.values()) != vertex_count - 1:
            return None
        top = max(labels)
        if 2 * top == vertex_count or top < 4 or (top - 1) % 3:
            return None
        alpha = (top - 1) // 3
        n = labels[top]
        if n < 2 or vertex_count != top * n + 1:
            return None
        if set(labels) - {1, 2, 3, top}:
            return None
        beta = labels[2]
        if beta > n * alpha or labels[3] != n * alpha or labels[1] != 2 * n * alpha - beta:
            return None
        return PteSignature(alpha=alpha, n=n, beta=beta)

    @staticmethod
    def recognize_pte_tree(tree: Tree) -> Optional[PteShape]:
        """
        T_α(p)와 동형이면 (α, p 내림차순)

        중심 c의 각 자식 v_i 아래에서 4-경로 수를 p_i로 읽고, 마지막에 정규형으로 확정한다.
        """
        centroid = CentroidCalculator.centroid(tree)
        if len(centroid) != 1:
            return None
        center = next(iter(centroid))
        view = rooted_view(tree, center)
        branches = [w for w, _ in tree.adjacency[center]]
        n = len(branches)
        if n < 2 or (tree.vertex_count - 1) % n:
            return None
        size = (tree.vertex_count - 1) // n
        if size < 4 or (size - 1) % 3:
            return None
        alpha = (size - 1) // 3

        p: List[int] = []
        for v in branches:
            if view.subtree_size[v] != size:
                return None
            blocks = [w for w, _ in tree.adjacency[v] if view.parent[w] == v]
            if len(blocks) != alpha:
                return None
            paths = 0
            for w in blocks:
                if view.subtree_size[w] != 3:
                    return None
                # 4-경로는 w 아래 자식이 하나, 4-스타는 둘
                if tree.degree(w) == 2:
                    paths += 1
            p.append(paths)

        shape = PteShape(alpha=alpha, p=tuple(p))
        expected = TreeBuilder.build_pte_tree(shape)
        if CanonicalForm.canonical_form(expected) != CanonicalForm.canonical_form(tree):
            logger.debug("구조 판독과 정규형 불일치", alpha=alpha, p=shape.p)
            return None
        return shape
