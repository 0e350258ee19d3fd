"""
분할(partition)과 분할 인덱스 다항식 모델
"""
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from ..errors import InvalidPartitionError

PartsKey = Tuple[int, ...]
TermKey = Tuple[PartsKey, int]


@dataclass(frozen=True, order=True)
class Partition:
    """내림차순 양의 정수열 λ, 단항식 x_λ를 나타낸다

    빈 분할은 단항식 1이다.
    """
    parts: PartsKey = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts):
            raise InvalidPartitionError(f"분할의 부분은 1 이상이어야 합니다: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartitionError(f"분할은 내림차순이어야 합니다: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, values: Iterable[int]) -> "Partition":
        """임의 순서의 값들로부터 분할 생성"""
        return cls(tuple(sorted((int(v) for v in values), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "1"
        counts = Counter(self.parts)
        return "*".join(
            f"x{part}" if mult == 1 else f"x{part}^{mult}"
            for part, mult in sorted(counts.items(), reverse=True)
        )


@dataclass(frozen=True)
class TermDiff:
    """두 다항식의 항별 차이"""
    partition: Partition
    y_grade: int
    left: int
    right: int


@dataclass(frozen=True)
class PartitionPolynomial:
    """Σ c · x_λ · (y-1)^g 형태의 희소 정수 계수 다항식

    terms는 (λ.parts, g) 오름차순으로 정렬된 ((parts, g), coeff) 튜플이며 0 계수는 저장하지 않는다.
    """
    terms: Tuple[Tuple[TermKey, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Mapping[Union[TermKey, PartsKey], int]) -> "PartitionPolynomial":
        """(parts, y_grade) 또는 parts(y_grade=0) 키의 계수 맵으로부터 생성"""
        merged: Counter = Counter()
        for key, coeff in counts.items():
            if key and isinstance(key[0], tuple):
                parts, grade = key  # type: ignore[misc]
            else:
                parts, grade = key, 0
            merged[(tuple(parts), int(grade))] += int(coeff)
        for (parts, grade) in merged:
            Partition(parts)  # 검증
            if grade < 0:
                raise InvalidPartitionError("y 차수는 음이 아니어야 합니다")
        return cls(tuple(sorted((key, c) for key, c in merged.items() if c != 0)))

    def __iter__(self) -> Iterator[Tuple[Partition, int, int]]:
        for (parts, grade), coeff in self.terms:
            yield Partition(parts), grade, coeff

    def __len__(self) -> int:
        return len(self.terms)

    def as_dict(self) -> dict:
        return {key: coeff for key, coeff in self.terms}

    def coefficient(self, partition: Union[Partition, Sequence[int]], y_grade: int = 0) -> int:
        """(λ, y_grade) 계수, 없으면 0"""
        parts = partition.parts if isinstance(partition, Partition) else Partition.of(partition).parts
        return self.as_dict().get((parts, y_grade), 0)

    @property
    def total_mass(self) -> int:
        """계수 합"""
        return sum(coeff for _, coeff in self.terms)

    @property
    def max_y_grade(self) -> int:
        return max((grade for (_, grade), _ in self.terms), default=0)

    def truncate(self, max_parts: int) -> "PartitionPolynomial":
        """부분 개수가 max_parts 이하인 항만 남긴 다항식

        트리에서 λ(E∖A)의 부분 개수는 |A|+1이므로 U_m = U.truncate(m+1).
        """
        return PartitionPolynomial(tuple(
            (key, coeff) for key, coeff in self.terms if len(key[0]) <= max_parts
        ))

    def evaluate(self, x: Callable[[int], int], y: int) -> int:
        """x_i ↦ x(i), y ↦ y 대입값 (정수 연산)"""
        total = 0
        for (parts, grade), coeff in self.terms:
            value = coeff * (y - 1) ** grade
            for part in parts:
                value *= x(part)
            total += value
        return total

    def diff(self, other: "PartitionPolynomial") -> Tuple[TermDiff, ...]:
        """계수가 다른 항들을 정규 순서로 나열"""
        left = self.as_dict()
        right = other.as_dict()
        return tuple(
            TermDiff(Partition(parts), grade, left.get((parts, grade), 0), right.get((parts, grade), 0))
            for parts, grade in sorted(set(left) | set(right))
            if left.get((parts, grade), 0) != right.get((parts, grade), 0)
        )

    def first_diff(self, other: "PartitionPolynomial") -> Optional[TermDiff]:
        diffs = self.diff(other)
        return diffs[0] if diffs else None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (parts, grade), coeff in self.terms:
            monomial = str(Partition(parts))
            if grade:
                monomial += f"*(y-1)^{grade}" if grade > 1 else "*(y-1)"
            chunks.append(monomial if coeff == 1 else f"{coeff}*{monomial}")
        return " + ".join(chunks)
