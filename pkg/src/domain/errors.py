"""
도메인 예외 정의
"""
from typing import Any, Optional


class UTreeError(Exception):
    """모든 도메인 오류의 기반 클래스"""


class InvalidTreeError(UTreeError, ValueError):
    """트리 구조, 정점 id, 간선 id 또는 입력 문서가 잘못된 경우"""


class LengthMismatchError(UTreeError, ValueError):
    """두 수열(또는 q, t)의 길이가 다른 경우"""


class IncompatibleSequenceError(UTreeError, ValueError):
    """α-호환성, 길이 n ≥ 2, 음이 아닌 항 조건을 만족하지 않는 경우"""


class BudgetExceededError(UTreeError):
    """설정된 열거 예산을 넘는 작업 요청

    partial에는 예산 소진 전까지 얻은 결과가 담길 수 있다.
    """

    def __init__(self, message: str, limit: int, requested: int, partial: Optional[Any] = None):
        super().__init__(message)
        self.limit = limit
        self.requested = requested
        self.partial = partial


class DoubleCentroidError(UTreeError):
    """중심이 두 개인 트리에서 attract/repel 관계를 요청한 경우"""


class IsomorphicInputsError(UTreeError):
    """검증 대상 두 트리가 동형인 경우"""


class MalformedPolynomialError(UTreeError, ValueError):
    """U_1 다항식 형식이 잘못된 경우 (x_N 항 없음, 3개 이상의 부분 등)"""


class InvalidPartitionError(UTreeError, ValueError):
    """분할의 부분이 양의 내림차순 정수열이 아니거나 차수 인자가 음수인 경우"""
