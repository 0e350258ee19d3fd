"""
PTE 인코딩 검증 서비스
두 PTE 트리의 U_m 일치 수준과 첫 차이를 계산하고 닫힌 형태 계수 차이와 대조한다.
"""
import time
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Optional, Sequence

from ...config.logging import logger
from ...domain.errors import IsomorphicInputsError, LengthMismatchError
from ...domain.models import Partition, PartitionPolynomial, PteShape, TermDiff
from ...domain.services import (
    EQUAL_MULTISETS,
    CanonicalForm,
    PolynomialCalculator,
    PteSolver,
    TreeBuilder,
)


@dataclass(frozen=True)
class VerificationReport:
    """PTE 인코딩 검증 결과"""
    shape_a: PteShape
    shape_b: PteShape
    degree: int
    max_level: int
    u_equal_level: int
    first_diff: Optional[TermDiff]
    isomorphic: bool
    u_a: PartitionPolynomial
    u_b: PartitionPolynomial
    targeted_partition: Optional[Partition] = None
    targeted_a: Optional[int] = None
    targeted_b: Optional[int] = None
    expected_difference: Optional[int] = None
    timings: Dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def closed_form_holds(self) -> Optional[bool]:
        """계수 차이 = Σ C(p_i, k+1) - Σ C(p'_i, k+1)"""
        if self.targeted_a is None or self.targeted_b is None or self.expected_difference is None:
            return None
        return self.targeted_a - self.targeted_b == self.expected_difference

    @property
    def encodes(self) -> bool:
        """U_{k+1}까지 같고, 계산했다면 U_{k+2}에서 다르다"""
        if self.u_equal_level < min(self.degree + 1, self.max_level):
            return False
        if self.max_level >= self.degree + 2:
            return self.u_equal_level == self.degree + 1
        return True


class EncodeVerifier:
    """p =_k p' 에서 U_{k+1}(T_α(p)) = U_{k+1}(T_α(p')) ≠ U_{k+2} 확인"""

    def __init__(self, calculator: Optional[PolynomialCalculator] = None):
        self.calculator = calculator or PolynomialCalculator()

    @staticmethod
    def targeted_partition(shape: PteShape, degree: int) -> Optional[Partition]:
        """
        x_{N-3α-1} x_{3α-1-2k} x_2^{k+1}

        3α-1-2k < 1 이면 해당 단항식이 없으므로 None.
        """
        middle = 3 * shape.alpha - 1 - 2 * degree
        if middle < 1:
            return None
        return Partition.of([shape.vertex_count - 3 * shape.alpha - 1, middle] + [2] * (degree + 1))

    @staticmethod
    def expected_difference(p: Sequence[int], p_prime: Sequence[int], degree: int) -> int:
        return sum(comb(x, degree + 1) for x in p) - sum(comb(x, degree + 1) for x in p_prime)

    def verify(
        self,
        alpha: int,
        p: Sequence[int],
        p_prime: Sequence[int],
        degree: Optional[int] = None,
        max_level: Optional[int] = None,
    ) -> VerificationReport:
        """
        두 PTE 트리의 U_m (m = 0..max_level) 비교

        Args:
            alpha: α
            p, p_prime: α-호환 수열 (길이 동일)
            degree: PTE 차수 k (None이면 측정)
            max_level: 비교할 최대 m (기본 k+2)

        Raises:
            IsomorphicInputsError: 두 트리가 동형일 때
            BudgetExceededError: 열거 예산 초과
        """
        timings: Dict[str, float] = {}
        if len(p) != len(p_prime):
            raise LengthMismatchError(f"p와 p'의 길이가 다릅니다: {len(p)} != {len(p_prime)}")
        shape_a = PteShape(alpha=alpha, p=tuple(p))
        shape_b = PteShape(alpha=alpha, p=tuple(p_prime))

        started = time.perf_counter()
        tree_a = TreeBuilder.build_pte_tree(shape_a)
        tree_b = TreeBuilder.build_pte_tree(shape_b)
        isomorphic = CanonicalForm.canonical_form(tree_a) == CanonicalForm.canonical_form(tree_b)
        timings["build"] = time.perf_counter() - started
        if isomorphic:
            raise IsomorphicInputsError(f"두 트리가 동형입니다: α={alpha}, p={shape_a.p}, p'={shape_b.p}")

        if degree is None:
            measured = PteSolver.pte_degree(shape_a.p, shape_b.p)
            degree = 0 if measured == EQUAL_MULTISETS else int(measured)
        level = degree + 2 if max_level is None else max_level
        logger.info(
            "인코딩 검증 시작",
            alpha=alpha,
            p=list(shape_a.p),
            p_prime=list(shape_b.p),
            degree=degree,
            max_level=level,
            vertices=shape_a.vertex_count,
        )

        started = time.perf_counter()
        u_a = self.calculator.u_k_polynomial(tree_a, level)
        u_b = self.calculator.u_k_polynomial(tree_b, level)
        timings["enumerate"] = time.perf_counter() - started

        # U_m은 부분이 m+1개 이하인 항으로 자른 것
        equal_level = -1
        for m in range(level + 1):
            if u_a.truncate(m + 1) != u_b.truncate(m + 1):
                break
            equal_level = m
        first_diff = None
        if equal_level < level:
            first_diff = u_a.truncate(equal_level + 2).first_diff(u_b.truncate(equal_level + 2))

        started = time.perf_counter()
        target = self.targeted_partition(shape_a, degree)
        targeted_a = targeted_b = expected = None
        if target is not None:
            targeted_a = self.calculator.partition_count(tree_a, target)
            targeted_b = self.calculator.partition_count(tree_b, target)
            expected = self.expected_difference(shape_a.p, shape_b.p, degree)
            if len(target) <= level + 1:
                # 열거 결과와 DP 결과가 같아야 한다
                assert u_a.coefficient(target) == targeted_a, "열거/DP 계수 불일치"
                assert u_b.coefficient(target) == targeted_b, "열거/DP 계수 불일치"
        timings["targeted"] = time.perf_counter() - started

        report = VerificationReport(
            shape_a=shape_a,
            shape_b=shape_b,
            degree=degree,
            max_level=level,
            u_equal_level=equal_level,
            first_diff=first_diff,
            isomorphic=isomorphic,
            u_a=u_a,
            u_b=u_b,
            targeted_partition=target,
            targeted_a=targeted_a,
            targeted_b=targeted_b,
            expected_difference=expected,
            timings=timings,
        )
        logger.info(
            "인코딩 검증 완료",
            u_equal_level=equal_level,
            first_diff=str(first_diff.partition) if first_diff else None,
            closed_form_holds=report.closed_form_holds,
            encodes=report.encodes,
            **{f"{phase}_sec": round(sec, 3) for phase, sec in timings.items()},
        )
        return report
