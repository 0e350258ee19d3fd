"""
부분트리 유형과 PTE 서명 모델
"""
from dataclasses import dataclass
from typing import Tuple

from ..errors import IncompatibleSequenceError, LengthMismatchError


@dataclass(frozen=True)
class BranchType:
    """부분트리 유형 (q, t), T(q, t)와 동형인 부분트리를 가리킨다"""
    q: Tuple[int, ...]
    t: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))
        object.__setattr__(self, "t", tuple(int(x) for x in self.t))
        if len(self.q) != len(self.t):
            raise LengthMismatchError(f"q와 t의 길이가 다릅니다: {len(self.q)} != {len(self.t)}")
        if any(x < 0 for x in self.q + self.t):
            raise IncompatibleSequenceError("q, t의 항은 음이 아니어야 합니다")

    @property
    def n(self) -> int:
        return len(self.q)

    @property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(zip(self.q, self.t))

    @property
    def total(self) -> int:
        """Σ(q_i + t_i)"""
        return sum(self.q) + sum(self.t)

    @classmethod
    def zeros(cls, n: int) -> "BranchType":
        return cls((0,) * n, (0,) * n)


@dataclass(frozen=True)
class PteSignature:
    """U_1에서 복원한 (α, n, β)"""
    alpha: int
    n: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 1:
            raise IncompatibleSequenceError("α는 양의 정수여야 합니다")
        if self.n < 2:
            raise IncompatibleSequenceError("n은 2 이상이어야 합니다")
        if not 0 <= self.beta <= self.n * self.alpha:
            raise IncompatibleSequenceError(f"β는 0..nα 범위여야 합니다: {self.beta}")

    @property
    def vertex_count(self) -> int:
        return (3 * self.alpha + 1) * self.n + 1
