"""
branch-weight, 중심(centroid), 간선 라벨 계산 서비스
"""
from typing import Dict, FrozenSet, List, Tuple

from ..errors import DoubleCentroidError, InvalidTreeError
from ..models.tree import RootedView, Tree, rooted_view


class CentroidCalculator:
    """중심과 간선 라벨 θ_e 계산기"""

    @staticmethod
    def _component_sizes(tree: Tree, view: RootedView, v: int) -> List[int]:
        """v를 지운 숲의 성분 크기들"""
        sizes = [view.subtree_size[w] for w, _ in tree.adjacency[v] if view.parent[w] == v]
        if view.parent[v] >= 0:
            sizes.append(tree.vertex_count - view.subtree_size[v])
        return sizes

    @staticmethod
    def branch_weight(tree: Tree, v: int) -> int:
        """
        v의 branch-weight

        v를 잎으로 갖는 가지 중 간선이 가장 많은 가지의 간선 수.
        (이웃 u 쪽 성분이 m개 정점이면 그 가지의 간선 수는 m)
        """
        tree.check_vertex(v)
        view = rooted_view(tree, 0)
        return max(CentroidCalculator._component_sizes(tree, view, v), default=0)

    @staticmethod
    def branch_weights(tree: Tree) -> List[int]:
        view = rooted_view(tree, 0)
        return [
            max(CentroidCalculator._component_sizes(tree, view, v), default=0)
            for v in range(tree.vertex_count)
        ]

    @staticmethod
    def centroid(tree: Tree) -> FrozenSet[int]:
        """branch-weight 최소 정점 집합 (1개 또는 인접한 2개)"""
        weights = CentroidCalculator.branch_weights(tree)
        best = min(weights)
        result = frozenset(v for v, w in enumerate(weights) if w == best)
        assert len(result) in (1, 2), "중심은 1개 또는 2개여야 합니다"
        if len(result) == 2:
            u, w = sorted(result)
            assert any(x == w for x, _ in tree.adjacency[u]), "두 중심은 인접해야 합니다"
        return result

    @staticmethod
    def unique_centroid(tree: Tree) -> int:
        centroid = CentroidCalculator.centroid(tree)
        if len(centroid) != 1:
            raise DoubleCentroidError(f"중심이 두 개입니다: {sorted(centroid)}")
        return next(iter(centroid))

    @staticmethod
    def edge_labels(tree: Tree) -> Dict[int, int]:
        """
        간선 라벨 θ_e

        e를 지우면 정점이 (N-θ_e, θ_e)로 나뉘며 θ_e <= N/2.

        Returns:
            {간선 id: θ_e}
        """
        view = rooted_view(tree, 0)
        n = tree.vertex_count
        labels: Dict[int, int] = {}
        for eid in range(tree.edge_count):
            side = view.subtree_size[view.child_of_edge(tree, eid)]
            labels[eid] = min(side, n - side)
        return labels

    @staticmethod
    def edges_repel(tree: Tree, e: int, f: int) -> bool:
        """
        두 간선이 repel이면 True, attract이면 False

        한 간선에서 중심으로 가는 경로가 다른 간선을 지나면 attract.
        """
        tree.check_edges((e, f))
        if e == f:
            raise InvalidTreeError("서로 다른 두 간선이 필요합니다")
        center = CentroidCalculator.unique_centroid(tree)
        view = rooted_view(tree, center)
        child_e = view.child_of_edge(tree, e)
        child_f = view.child_of_edge(tree, f)
        attract = view.is_ancestor(child_e, child_f) or view.is_ancestor(child_f, child_e)
        return not attract

    @staticmethod
    def centroid_rooted_labels(tree: Tree) -> Tuple[RootedView, Dict[int, int]]:
        """중심을 루트로 한 RootedView와 간선 라벨 (유일 중심 트리 전용)"""
        center = CentroidCalculator.unique_centroid(tree)
        return rooted_view(tree, center), CentroidCalculator.edge_labels(tree)
