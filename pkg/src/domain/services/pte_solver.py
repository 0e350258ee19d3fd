"""
Prouhet-Tarry-Escott 관계 =_k 계산 서비스
검증, 아핀 변환, Prouhet(Thue-Morse) 구성, 전수 탐색
"""
from collections import defaultdict
from itertools import combinations, combinations_with_replacement
from math import perm
from typing import Dict, List, Sequence, Tuple, Union

from src.config.env_config import PROUHET_MAX_K, SEARCH_NODE_BUDGET
from src.config.logging import logger

from ..errors import BudgetExceededError, IncompatibleSequenceError, LengthMismatchError
from ..models.pte import IntSequence, PteCertificate

SequenceLike = Union[IntSequence, Sequence[int]]

# pte_degree가 같은 멀티셋에 대해 돌려주는 값
EQUAL_MULTISETS = "equal-multisets"


def _values(seq: SequenceLike) -> Tuple[int, ...]:
    if isinstance(seq, IntSequence):
        return seq.entries
    return tuple(sorted((int(x) for x in seq), reverse=True))


class PteSolver:
    """=_k 관계 계산기"""

    def __init__(self, search_budget: int = SEARCH_NODE_BUDGET, prouhet_max_k: int = PROUHET_MAX_K):
        """
        Args:
            search_budget: search_pte가 방문할 수 있는 최대 멀티셋 수
            prouhet_max_k: prouhet 구성 최대 차수 (크기 2^k)
        """
        self.search_budget = search_budget
        self.prouhet_max_k = prouhet_max_k

    @staticmethod
    def power_sums(seq: SequenceLike, k: int) -> Tuple[int, ...]:
        """
        (Σ s_i^1, ..., Σ s_i^k)

        빈 수열은 모두 0.
        """
        values = _values(seq)
        return tuple(sum(x ** power for x in values) for power in range(1, k + 1))

    @staticmethod
    def is_pte(a: SequenceLike, b: SequenceLike, k: int) -> bool:
        """a ≠ b (멀티셋)이고 1..k 거듭제곱 합이 모두 같으면 True"""
        left, right = _values(a), _values(b)
        if len(left) != len(right):
            raise LengthMismatchError(f"수열 길이가 다릅니다: {len(left)} != {len(right)}")
        if left == right:
            return False
        return PteSolver.power_sums(left, k) == PteSolver.power_sums(right, k)

    @staticmethod
    def pte_degree(a: SequenceLike, b: SequenceLike) -> Union[int, str]:
        """
        a =_k b 인 최대 k

        Returns:
            1제곱 합부터 다르면 0, 같은 멀티셋이면 EQUAL_MULTISETS
        """
        left, right = _values(a), _values(b)
        if len(left) != len(right):
            raise LengthMismatchError(f"수열 길이가 다릅니다: {len(left)} != {len(right)}")
        if left == right:
            return EQUAL_MULTISETS
        # 서로 다른 길이 n 멀티셋은 1..n 거듭제곱 합을 모두 공유할 수 없다
        degree = 0
        while sum(x ** (degree + 1) for x in left) == sum(x ** (degree + 1) for x in right):
            degree += 1
        return degree

    @staticmethod
    def certify(a: SequenceLike, b: SequenceLike) -> PteCertificate:
        """정확한 차수를 다시 측정해 인증서 생성 (차수 0이나 같은 멀티셋이면 오류)"""
        degree = PteSolver.pte_degree(a, b)
        if degree == EQUAL_MULTISETS or degree == 0:
            raise IncompatibleSequenceError(f"PTE 해가 아닙니다: a={list(_values(a))}, b={list(_values(b))}")
        return PteCertificate(IntSequence(_values(a)), IntSequence(_values(b)), int(degree))

    @staticmethod
    def affine(seq: SequenceLike, scale: int, shift: int, allow_negative: bool = False) -> IntSequence:
        """
        각 항에 scale·s_i + shift 적용

        같은 아핀 변환을 양쪽에 적용하면 =_k가 보존된다.
        """
        mapped = tuple(scale * x + shift for x in _values(seq))
        if not allow_negative and any(x < 0 for x in mapped):
            raise IncompatibleSequenceError(f"아핀 변환 결과에 음수가 있습니다: {mapped}")
        return IntSequence(mapped, allow_negative=allow_negative)

    @staticmethod
    def normalize_pair(a: SequenceLike, b: SequenceLike) -> Tuple[IntSequence, IntSequence]:
        """
        인증서 정규형

        두 수열 합집합의 최솟값이 0이 되도록 평행이동하고, 오름차순 튜플 기준으로 a < b가 되게 정렬한다.
        """
        left, right = _values(a), _values(b)
        low = min(left + right)
        left = tuple(x - low for x in left)
        right = tuple(x - low for x in right)
        first, second = sorted([IntSequence(left), IntSequence(right)], key=lambda s: s.ascending)
        return first, second

    def prouhet(self, k: int) -> PteCertificate:
        """
        Thue-Morse 분할 인증서

        {0, ..., 2^(k+1)-1}을 이진 자릿수 합의 홀짝으로 나눈 길이 2^k 두 수열.
        차수는 측정값이다 (>= k).
        """
        if k < 1:
            raise IncompatibleSequenceError("차수 k는 1 이상이어야 합니다")
        if k > self.prouhet_max_k:
            raise BudgetExceededError(
                f"prouhet 차수 {k}가 상한 {self.prouhet_max_k}을 넘습니다",
                limit=self.prouhet_max_k,
                requested=k,
            )
        even: List[int] = []
        odd: List[int] = []
        for value in range(2 ** (k + 1)):
            (odd if bin(value).count("1") % 2 else even).append(value)
        certificate = self.certify(even, odd)
        logger.debug("Prouhet 인증서 생성", k=k, size=certificate.size, degree=certificate.degree)
        return certificate

    def prouhet_multi(self, j: int, k: int) -> List[IntSequence]:
        """
        {0, ..., j^(k+1)-1}을 j진 자릿수 합 mod j로 나눈 j개 수열

        모든 쌍이 =_k 관계이다.
        """
        if j < 2 or k < 1:
            raise IncompatibleSequenceError("j >= 2, k >= 1 이어야 합니다")
        if j ** (k + 1) > 2 ** (self.prouhet_max_k + 1):
            raise BudgetExceededError(
                f"prouhet_multi 크기 {j}^{k + 1}이 상한을 넘습니다",
                limit=2 ** (self.prouhet_max_k + 1),
                requested=j ** (k + 1),
            )
        classes: List[List[int]] = [[] for _ in range(j)]
        for value in range(j ** (k + 1)):
            digits, rest = 0, value
            while rest:
                digits += rest % j
                rest //= j
            classes[digits % j].append(value)
        result = [IntSequence(tuple(c)) for c in classes]
        self._verify_pairwise(result, k)
        return result

    def search_pte(self, size: int, degree: int, max_value: int) -> List[PteCertificate]:
        """
        [0, max_value] 범위의 길이 size, 차수 >= degree 해 전수 탐색

        멀티셋을 거듭제곱 합 벡터로 묶고, 같은 묶음 안의 쌍 중 정규형(합집합 최솟값 0)인 것만 남긴다.

        Raises:
            BudgetExceededError: 방문 멀티셋 수가 예산을 넘으면 (partial에 그때까지의 해)
        """
        if size < 1 or degree < 1 or max_value < 0:
            raise IncompatibleSequenceError("size, degree >= 1, max_value >= 0 이어야 합니다")
        logger.info("PTE 탐색 시작", size=size, degree=degree, max_value=max_value)

        groups: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = defaultdict(list)
        visited = 0
        for multiset in combinations_with_replacement(range(max_value + 1), size):
            visited += 1
            if visited > self.search_budget:
                partial = self._collect(groups)
                logger.warning("PTE 탐색 예산 초과", budget=self.search_budget, found=len(partial))
                raise BudgetExceededError(
                    f"search_pte: 방문 멀티셋이 예산 {self.search_budget}을 초과합니다",
                    limit=self.search_budget,
                    requested=visited,
                    partial=partial,
                )
            groups[self.power_sums(multiset, degree)].append(multiset)

        found = self._collect(groups)
        logger.info("PTE 탐색 완료", visited=visited, found=len(found))
        return found

    def _collect(self, groups: Dict[Tuple[int, ...], List[Tuple[int, ...]]]) -> List[PteCertificate]:
        found = []
        for members in groups.values():
            for left, right in combinations(members, 2):
                if min(left[0], right[0]) != 0:
                    continue
                a, b = self.normalize_pair(left, right)
                found.append(self.certify(a, b))
        found.sort(key=lambda c: (c.a.ascending, c.b.ascending))
        return found

    def multi_pte(self, j: int, k: int) -> List[IntSequence]:
        """
        서로 =_k 관계인 j개 수열

        Prouhet 쌍 (a, b)를 블록으로 두고, r자리 {a, b} 단어마다 t번째 블록을 t·D만큼 이동해 이어 붙인다.
        (D > 최댓값, r = ⌈log2 j⌉) 서로 다른 단어끼리는 다른 블록 위치에서만 a/b가 바뀌므로 =_k.
        """
        if j < 2 or k < 1:
            raise IncompatibleSequenceError("j >= 2, k >= 1 이어야 합니다")
        base = self.prouhet(k)
        blocks = (base.a.entries, base.b.entries)
        width = max(base.a.entries[0], base.b.entries[0]) + 1
        letters = max(1, (j - 1).bit_length())

        result: List[IntSequence] = []
        for word in range(j):
            values: List[int] = []
            for position in range(letters):
                bit = (word >> (letters - 1 - position)) & 1
                values.extend(x + position * width for x in blocks[bit])
            result.append(IntSequence(tuple(values)))
        self._verify_pairwise(result, k)
        logger.debug("다중 PTE 생성", j=j, k=k, length=len(result[0]), wright_bound=self.wright_bound(k))
        return result

    def _verify_pairwise(self, sequences: List[IntSequence], k: int) -> None:
        for left, right in combinations(sequences, 2):
            if not self.is_pte(left, right, k):
                raise IncompatibleSequenceError(f"=_{k} 관계가 성립하지 않습니다: {left} / {right}")

    @staticmethod
    def euler_goldbach(a: int, b: int, c: int) -> PteCertificate:
        """(a, b, c, a+b+c) =_2 (0, a+b, a+c, b+c), 차수는 측정값"""
        if min(a, b, c) < 0:
            raise IncompatibleSequenceError("a, b, c는 음이 아니어야 합니다")
        return PteSolver.certify((a, b, c, a + b + c), (0, a + b, a + c, b + c))

    @staticmethod
    def derivatives_vanish(a: SequenceLike, b: SequenceLike, k: int) -> bool:
        """
        (x-1)^(k+1)이 Σx^{a_i} - Σx^{b_i}를 나누는지 확인

        x=1에서의 j계 도함수는 하강 계승 합 Σ a_i(a_i-1)...(a_i-j+1)이므로 j = 0..k에 대해 비교한다.
        """
        left, right = _values(a), _values(b)
        return all(
            sum(perm(x, order) for x in left) == sum(perm(x, order) for x in right)
            for order in range(k + 1)
        )

    @staticmethod
    def wright_bound(k: int) -> int:
        """서로 =_k인 수열 길이 상한 (k²+k+2)/2"""
        return (k * k + k + 2) // 2
