"""
부분트리 유형 (q, t) 개수 계산 서비스
대칭 다항식 공식, 그 문자 그대로의 순열 합, 직접 열거 오라클
"""
from collections import Counter
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb, factorial, prod
from typing import FrozenSet, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from src.config.env_config import CENSUS_BUDGET
from src.config.logging import logger

from ..errors import BudgetExceededError, IncompatibleSequenceError, InvalidTreeError, LengthMismatchError
from ..models.census import BranchType
from ..models.tree import Tree


def _check_compatible(alpha: int, p: Sequence[int], bt: BranchType) -> Tuple[int, ...]:
    values = tuple(int(x) for x in p)
    if len(values) != bt.n:
        raise LengthMismatchError(f"p와 부분트리 유형의 길이가 다릅니다: {len(values)} != {bt.n}")
    if any(x < 0 or x > alpha for x in values):
        raise IncompatibleSequenceError(f"p가 α={alpha}와 호환되지 않습니다: {values}")
    return values


class SubtreeCensus:
    """T_α(p) 안의 (q, t) 유형 부분트리 개수 계산기"""

    def __init__(self, budget: int = CENSUS_BUDGET):
        """
        Args:
            budget: 오라클이 열거할 수 있는 최대 구성 수
        """
        self.budget = budget

    @staticmethod
    def symmetry_count(bt: BranchType) -> int:
        """(q_i, t_i) 쌍을 보존하는 순열 수 = 쌍 중복도 계승의 곱"""
        return prod(factorial(mult) for mult in Counter(bt.pairs).values())

    @staticmethod
    def _branch_product(alpha: int, p: Sequence[int], pairs: Sequence[Tuple[int, int]]) -> int:
        return prod(comb(x, q) * comb(alpha - x, t) for x, (q, t) in zip(p, pairs))

    @staticmethod
    def count_subtrees_formula(alpha: int, p: Sequence[int], bt: BranchType) -> int:
        """
        |S_{q,t}(T_α(p))|

        1/N_{q,t}로 나누는 대신 (q_i, t_i) 쌍의 서로 다른 배치에 대해서만 합한다.
        """
        values = _check_compatible(alpha, p, bt)
        return sum(
            SubtreeCensus._branch_product(alpha, values, arrangement)
            for arrangement in multiset_permutations(sorted(bt.pairs))
        )

    @staticmethod
    def count_subtrees_literal(alpha: int, p: Sequence[int], bt: BranchType) -> int:
        """모든 순열에 대해 합한 뒤 N_{q,t}로 나누는 원래 형태 (정확한 유리수 연산)"""
        values = _check_compatible(alpha, p, bt)
        total = sum(
            (Fraction(SubtreeCensus._branch_product(alpha, values, arrangement))
             for arrangement in permutations(bt.pairs)),
            Fraction(0),
        )
        result = total / SubtreeCensus.symmetry_count(bt)
        if result.denominator != 1:
            raise ArithmeticError(f"정수가 아닌 부분트리 개수: {result}")
        return int(result)

    @staticmethod
    def _branch_blocks(tree: Tree) -> List[Tuple[List[int], List[int]]]:
        """
        각 v_i에 매달린 4-경로, 4-스타 블록의 정점 id

        블록은 v_i의 (c가 아닌) 이웃 w로 대표한다. w의 차수가 2면 4-경로, 3이면 4-스타.
        """
        center = tree.core_center()
        if center is None or not tree.core_edges:
            raise InvalidTreeError("core가 지정된 PTE 트리가 필요합니다")
        blocks = []
        for eid in sorted(tree.core_edges):
            u, w = tree.edges[eid]
            v = w if u == center else u
            paths, stars = [], []
            for x, _ in tree.adjacency[v]:
                if x == center:
                    continue
                if tree.degree(x) == 2:
                    paths.append(x)
                elif tree.degree(x) == 3:
                    stars.append(x)
                else:
                    raise InvalidTreeError(f"B(p, s) 블록이 아닌 정점입니다: {x}")
            blocks.append((paths, stars))
        return blocks

    def count_subtrees_oracle(self, tree: Tree, bt: BranchType) -> int:
        """
        core 전체를 포함하고 각 v_i에 q_{π(i)}개 4-경로, t_{π(i)}개 4-스타를 고른 부분트리를 직접 열거

        서로 다른 π가 같은 부분트리를 만들 수 있으므로 선택된 블록 집합으로 중복을 없앤다.
        """
        blocks = self._branch_blocks(tree)
        if len(blocks) != bt.n:
            raise LengthMismatchError(f"트리 가지 수와 부분트리 유형 길이가 다릅니다: {len(blocks)} != {bt.n}")

        seen: set = set()
        visited = 0
        for arrangement in multiset_permutations(sorted(bt.pairs)):
            choices = []
            for (paths, stars), (q, t) in zip(blocks, arrangement):
                choices.append([
                    frozenset(chosen_paths) | frozenset(chosen_stars)
                    for chosen_paths in combinations(paths, q)
                    for chosen_stars in combinations(stars, t)
                ])
            for picked in product(*choices):
                visited += 1
                if visited > self.budget:
                    logger.warning("부분트리 열거 예산 초과", budget=self.budget, found=len(seen))
                    raise BudgetExceededError(
                        f"부분트리 구성이 예산 {self.budget}을 초과합니다",
                        limit=self.budget,
                        requested=visited,
                        partial=len(seen),
                    )
                subtree: FrozenSet[int] = frozenset().union(*picked)
                seen.add(subtree)
        return len(seen)

    @staticmethod
    def enumerate_branch_types(n: int, k: int) -> List[BranchType]:
        """
        Σ(q_i + t_i) <= k 인 모든 (q, t) (동시 순열 동치류마다 하나)

        합 오름차순, 같은 합 안에서는 쌍 목록 순서.
        """
        if n < 1 or k < 0:
            raise IncompatibleSequenceError("n >= 1, k >= 0 이어야 합니다")
        pairs = sorted(((q, t) for q in range(k + 1) for t in range(k + 1 - q)), reverse=True)
        found = []
        for chosen in combinations_with_replacement(pairs, n):
            total = sum(q + t for q, t in chosen)
            if total <= k:
                found.append((total, chosen))
        found.sort()
        return [BranchType(tuple(q for q, _ in chosen), tuple(t for _, t in chosen)) for _, chosen in found]

    @staticmethod
    def same_subtree_counts(
        alpha: int,
        p: Sequence[int],
        p_prime: Sequence[int],
        k: int,
    ) -> Tuple[bool, Optional[BranchType]]:
        """
        Σ(q_i + t_i) <= k 인 모든 유형에서 두 PTE 트리의 부분트리 개수가 같은지 확인

        Returns:
            (일치 여부, 처음 어긋난 유형 또는 None)
        """
        if len(p) != len(p_prime):
            raise LengthMismatchError(f"p와 p'의 길이가 다릅니다: {len(p)} != {len(p_prime)}")
        for bt in SubtreeCensus.enumerate_branch_types(len(p), k):
            left = SubtreeCensus.count_subtrees_formula(alpha, p, bt)
            right = SubtreeCensus.count_subtrees_formula(alpha, p_prime, bt)
            if left != right:
                logger.debug("부분트리 개수 불일치", q=bt.q, t=bt.t, left=left, right=right)
                return False, bt
        return True, None
