"""
부분트리 동형 개수 실험
T_α(p) 안에서 T(q, t)와 동형인 모든 부분트리를 세어 core 분해 공식 값과 나란히 보고한다.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Set

from ...config.logging import logger
from ...domain.errors import BudgetExceededError
from ...domain.models import BranchType, PteShape, Tree
from ...domain.services import CanonicalForm, SubtreeCensus, TreeBuilder

# 연결 정점 부분집합 전수 열거가 가능한 최대 정점 수
MAX_EXPERIMENT_VERTICES = 20


@dataclass(frozen=True)
class SubtreeComparison:
    """한 유형 (q, t)에 대한 두 개수"""
    branch_type: BranchType
    decomposition_count: int
    isomorphic_count: int

    @property
    def agrees(self) -> bool:
        return self.decomposition_count == self.isomorphic_count


def connected_vertex_sets(tree: Tree, size: int) -> Iterator[FrozenSet[int]]:
    """크기 size인 연결 정점 집합 (트리에서는 곧 부분트리)"""
    neighbors: Dict[int, Set[int]] = {v: {w for w, _ in tree.adjacency[v]} for v in range(tree.vertex_count)}
    stack: List[FrozenSet[int]] = [frozenset([v]) for v in range(tree.vertex_count)]
    visited: Set[FrozenSet[int]] = set(stack)
    if size == 1:
        yield from stack
        return
    while stack:
        current = stack.pop()
        for u in current:
            for w in neighbors[u]:
                if w in current:
                    continue
                grown = current | {w}
                if grown in visited:
                    continue
                visited.add(grown)
                if len(grown) >= size:
                    yield grown
                else:
                    stack.append(grown)


def induced_tree(tree: Tree, vertices: FrozenSet[int]) -> Tree:
    index = {v: i for i, v in enumerate(sorted(vertices))}
    edges = tuple((index[u], index[w]) for u, w in tree.edges if u in index and w in index)
    return Tree(vertex_count=len(index), edges=edges)


class SubtreeExperiment:
    """core 분해 밖의 T(q, t) 사본 존재 여부를 직접 확인"""

    def __init__(self, census: Optional[SubtreeCensus] = None):
        self.census = census or SubtreeCensus()

    @staticmethod
    def isomorphic_subtree_count(tree: Tree, pattern: Tree) -> int:
        """tree 안에서 pattern과 동형인 부분트리 수 (정점 집합 기준)"""
        if tree.vertex_count > MAX_EXPERIMENT_VERTICES:
            raise BudgetExceededError(
                f"실험은 정점 {MAX_EXPERIMENT_VERTICES}개 이하 트리만 지원합니다",
                limit=MAX_EXPERIMENT_VERTICES,
                requested=tree.vertex_count,
            )
        code = CanonicalForm.canonical_form(pattern)
        return sum(
            1
            for vertices in connected_vertex_sets(tree, pattern.vertex_count)
            if CanonicalForm.canonical_form(induced_tree(tree, vertices)) == code
        )

    def compare(self, shape: PteShape, bt: BranchType) -> SubtreeComparison:
        tree = TreeBuilder.build_pte_tree(shape)
        pattern = TreeBuilder.build_t_tree(bt.q, bt.t)
        decomposition = self.census.count_subtrees_formula(shape.alpha, shape.p, bt)
        isomorphic = self.isomorphic_subtree_count(tree, pattern)
        comparison = SubtreeComparison(bt, decomposition, isomorphic)
        if not comparison.agrees:
            logger.info(
                "부분트리 개수 차이 발견",
                alpha=shape.alpha,
                p=list(shape.p),
                q=list(bt.q),
                t=list(bt.t),
                decomposition=decomposition,
                isomorphic=isomorphic,
            )
        return comparison

    def run(self, shape: PteShape, k: int) -> List[SubtreeComparison]:
        """Σ(q_i + t_i) <= k 인 모든 유형 비교"""
        return [self.compare(shape, bt) for bt in self.census.enumerate_branch_types(shape.n, k)]
