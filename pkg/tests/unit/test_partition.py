"""
Partition, PartitionPolynomial 모델 테스트
"""
import pytest

from src.domain.errors import InvalidPartitionError, UTreeError
from src.domain.models import Partition, PartitionPolynomial


class TestPartition:
    def test_of_sorts_descending(self):
        assert Partition.of([2, 8, 3, 2]).parts == (8, 3, 2, 2)

    def test_empty_is_one(self):
        assert str(Partition()) == "1"
        assert Partition().size == 0

    def test_str(self):
        assert str(Partition((7, 7, 1))) == "x7^2*x1"

    def test_rejects_ascending(self):
        with pytest.raises(InvalidPartitionError):
            Partition((1, 2))

    def test_rejects_zero(self):
        with pytest.raises(InvalidPartitionError):
            Partition((3, 0))

    def test_errors_are_domain_errors(self):
        with pytest.raises(UTreeError):
            Partition.of((15, 0))


class TestPartitionPolynomial:
    @pytest.fixture
    def p3(self) -> PartitionPolynomial:
        """P_3의 U 다항식"""
        return PartitionPolynomial.from_counts({(3,): 1, (2, 1): 2, (1, 1, 1): 1})

    def test_canonical_order(self, p3):
        assert [partition.parts for partition, _, _ in p3] == [(1, 1, 1), (2, 1), (3,)]

    def test_zero_coefficients_dropped(self):
        poly = PartitionPolynomial.from_counts({(2,): 0, (1, 1): 1})
        assert len(poly) == 1

    def test_merges_grade_keys(self):
        poly = PartitionPolynomial.from_counts({(2,): 1, ((2,), 0): 2, ((2,), 1): 1})
        assert poly.coefficient((2,)) == 3
        assert poly.coefficient((2,), 1) == 1
        assert poly.max_y_grade == 1

    def test_coefficient_absent(self, p3):
        assert p3.coefficient((2, 2)) == 0

    def test_truncate(self, p3):
        assert p3.truncate(2).as_dict() == {((2, 1), 0): 2, ((3,), 0): 1}

    def test_total_mass(self, p3):
        assert p3.total_mass == 4

    def test_evaluate(self, p3):
        assert p3.evaluate(lambda i: 1, 2) == 4
        assert p3.evaluate(lambda i: i, 2) == 3 + 2 * 2 + 1

    def test_evaluate_y_power(self):
        poly = PartitionPolynomial.from_counts({((3,), 1): 1})
        assert poly.evaluate(lambda i: 1, 5) == 4

    def test_diff(self, p3):
        other = PartitionPolynomial.from_counts({(3,): 1, (2, 1): 1})
        diffs = p3.diff(other)
        assert [(d.partition.parts, d.left, d.right) for d in diffs] == [((1, 1, 1), 1, 0), ((2, 1), 2, 1)]
        assert p3.first_diff(p3) is None

    def test_str(self, p3):
        assert str(p3) == "x1^3 + 2*x2*x1 + x3"
        assert str(PartitionPolynomial()) == "0"

    def test_rejects_negative_grade(self):
        with pytest.raises(InvalidPartitionError):
            PartitionPolynomial.from_counts({((1,), -1): 1})
