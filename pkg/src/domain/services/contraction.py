"""
부분트리 축약 서비스
S_{ω,T}: 부분트리 밖의 간선을 축약하고 가중치를 더한다
"""
from collections import deque
from typing import Dict, Iterable, List, Set

from ..errors import InvalidTreeError
from ..models.tree import Tree, WeightedTree


class TreeContractor:
    """부분트리 (W, F) 축약기"""

    @staticmethod
    def subtree_vertices(tree: Tree, edge_ids: Iterable[int]) -> List[int]:
        """
        간선 집합 F가 이루는 부분트리의 정점 목록 (오름차순)

        F가 비어 있으면 루트(없으면 0) 한 점. 연결되지 않으면 InvalidTreeError.
        """
        edges = tree.check_edges(edge_ids)
        if not edges:
            return [tree.root if tree.root is not None else 0]

        vertices: Set[int] = set()
        for eid in edges:
            vertices.update(tree.edges[eid])

        start = min(vertices)
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w, eid in tree.adjacency[u]:
                if eid in edges and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if seen != vertices:
            raise InvalidTreeError("간선 집합 F가 연결된 부분트리가 아닙니다")
        return sorted(vertices)

    @staticmethod
    def contract_to(weighted: WeightedTree, edge_ids: Iterable[int]) -> WeightedTree:
        """
        S_{ω,T} 계산

        Args:
            weighted: 가중치 트리 (T, ω)
            edge_ids: 부분트리 간선 집합 F

        Returns:
            W의 정점을 0..|W|-1로 다시 번호 매긴 가중치 트리.
            각 정점 가중치 = 자기 가중치 + E∖F 축약으로 합쳐진 정점들의 가중치.
        """
        tree = weighted.tree
        edges = tree.check_edges(edge_ids)
        kept = TreeContractor.subtree_vertices(tree, edges)
        index: Dict[int, int] = {v: i for i, v in enumerate(kept)}

        # F를 지운 숲의 각 성분에는 W의 정점이 정확히 하나 있다
        weights = [0] * len(kept)
        owner: Dict[int, int] = {}
        queue = deque()
        for v in kept:
            owner[v] = index[v]
            queue.append(v)
        while queue:
            u = queue.popleft()
            weights[owner[u]] += weighted.weights[u]
            for w, eid in tree.adjacency[u]:
                if eid not in edges and w not in owner:
                    owner[w] = owner[u]
                    queue.append(w)

        new_edges = tuple(
            (index[tree.edges[eid][0]], index[tree.edges[eid][1]]) for eid in sorted(edges)
        )
        root = index.get(tree.root) if tree.root is not None else None
        contracted = Tree(vertex_count=len(kept), edges=new_edges, root=root)
        return WeightedTree(tree=contracted, weights=tuple(weights))
