"""
Prouhet-Tarry-Escott 수열 모델
"""
from dataclasses import dataclass, field
from typing import Iterable, Tuple, Union

from ..errors import IncompatibleSequenceError, LengthMismatchError


@dataclass(frozen=True)
class IntSequence:
    """정수 수열 (내림차순 정규형)

    =_k 관계는 순열에 대해 불변이므로 항상 정렬해서 보관한다.
    """
    entries: Tuple[int, ...]
    allow_negative: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        entries = tuple(sorted((int(x) for x in self.entries), reverse=True))
        if not entries:
            raise IncompatibleSequenceError("수열 길이는 1 이상이어야 합니다")
        if not self.allow_negative and entries[-1] < 0:
            raise IncompatibleSequenceError(f"수열의 항은 음이 아니어야 합니다: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, values: Union["IntSequence", Iterable[int]], allow_negative: bool = False) -> "IntSequence":
        if isinstance(values, IntSequence):
            return values
        return cls(tuple(values), allow_negative=allow_negative)

    @classmethod
    def parse(cls, text: str) -> "IntSequence":
        """쉼표 구분 문자열 파싱 (예: "1,2,3,6")"""
        try:
            values = [int(chunk.strip()) for chunk in text.split(",") if chunk.strip()]
        except ValueError as e:
            raise IncompatibleSequenceError(f"정수 수열이 아닙니다: {text!r}") from e
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def ascending(self) -> Tuple[int, ...]:
        return tuple(reversed(self.entries))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.ascending)


@dataclass(frozen=True)
class PteCertificate:
    """검증된 a =_k b 쌍

    exact가 참이면 k+1 거듭제곱 합은 서로 다르다.
    """
    a: IntSequence
    b: IntSequence
    degree: int
    exact: bool = True

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b):
            raise LengthMismatchError(f"수열 길이가 다릅니다: {len(self.a)} != {len(self.b)}")
        if self.degree < 1:
            raise IncompatibleSequenceError("차수는 1 이상이어야 합니다")
        if self.a.entries == self.b.entries:
            raise IncompatibleSequenceError("a와 b는 멀티셋으로 달라야 합니다")
        for power in range(1, self.degree + 1):
            if _power_sum(self.a, power) != _power_sum(self.b, power):
                raise IncompatibleSequenceError(f"{power}제곱 합이 다릅니다: a={self.a}, b={self.b}")
        if self.exact and _power_sum(self.a, self.degree + 1) == _power_sum(self.b, self.degree + 1):
            raise IncompatibleSequenceError(f"차수가 {self.degree}보다 큽니다: a={self.a}, b={self.b}")

    @property
    def size(self) -> int:
        return len(self.a)


def _power_sum(seq: IntSequence, power: int) -> int:
    return sum(x ** power for x in seq.entries)
