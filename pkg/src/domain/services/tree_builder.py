"""
PTE 트리 구성 서비스
B(p, s), T(p, s), T_α(p)
"""
from typing import List, Sequence, Tuple

from ..errors import IncompatibleSequenceError, LengthMismatchError
from ..models.tree import PteShape, Tree

Edge = Tuple[int, int]


class TreeBuilder:
    """B(p, s), T(p, s), T_α(p) 트리 생성기"""

    @staticmethod
    def _append_b_block(edges: List[Edge], root: int, next_id: int, p: int, s: int) -> int:
        """root에 4-경로 p개, 4-스타 s개를 붙이고 다음 정점 id를 반환

        4-경로: root - a - b - c
        4-스타: root - center, center - 잎 2개
        """
        for _ in range(p):
            a, b, c = next_id, next_id + 1, next_id + 2
            edges.extend([(root, a), (a, b), (b, c)])
            next_id += 3
        for _ in range(s):
            center, leaf1, leaf2 = next_id, next_id + 1, next_id + 2
            edges.extend([(root, center), (center, leaf1), (center, leaf2)])
            next_id += 3
        return next_id

    @staticmethod
    def build_b_tree(p: int, s: int) -> Tree:
        """
        B(p, s) 생성

        Args:
            p: 4-경로 개수
            s: 4-스타 개수

        Returns:
            정점 수 1 + 3(p+s), 루트 0인 트리
        """
        if p < 0 or s < 0:
            raise IncompatibleSequenceError("p, s는 음이 아니어야 합니다")
        edges: List[Edge] = []
        vertex_count = TreeBuilder._append_b_block(edges, 0, 1, p, s)
        return Tree(vertex_count=vertex_count, edges=tuple(edges), root=0)

    @staticmethod
    def build_t_tree(p: Sequence[int], s: Sequence[int]) -> Tree:
        """
        T(p, s) 생성

        중심 c = 0, 각 i에 대해 간선 c-v_i 다음에 B(p_i, s_i)의 간선이 이어진다.

        Args:
            p: 각 가지의 4-경로 개수
            s: 각 가지의 4-스타 개수

        Returns:
            core_edges = {c v_i}, 루트 c인 트리
        """
        if len(p) != len(s):
            raise LengthMismatchError(f"p와 s의 길이가 다릅니다: {len(p)} != {len(s)}")
        if len(p) < 2:
            raise IncompatibleSequenceError("수열 길이 n은 2 이상이어야 합니다")
        if any(x < 0 for x in list(p) + list(s)):
            raise IncompatibleSequenceError("p, s의 항은 음이 아니어야 합니다")

        edges: List[Edge] = []
        core: List[int] = []
        next_id = 1
        for p_i, s_i in zip(p, s):
            v_i = next_id
            core.append(len(edges))
            edges.append((0, v_i))
            next_id = TreeBuilder._append_b_block(edges, v_i, v_i + 1, int(p_i), int(s_i))
        return Tree(vertex_count=next_id, edges=tuple(edges), root=0, core_edges=frozenset(core))

    @staticmethod
    def build_pte_tree(shape: PteShape) -> Tree:
        """T_α(p) = T(p, α - p), 정점 수 (3α+1)n + 1"""
        return TreeBuilder.build_t_tree(shape.p, shape.s)
