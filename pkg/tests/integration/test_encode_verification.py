"""
PTE 인코딩 검증 통합 테스트
"""
import pytest

from src.application.services import EncodeVerifier
from src.domain.errors import IsomorphicInputsError, LengthMismatchError
from src.domain.models import PteShape
from src.domain.services import PolynomialCalculator, TreeBuilder
from src.infrastructure.adapters import VerificationDocument, to_json


@pytest.fixture
def verifier() -> EncodeVerifier:
    return EncodeVerifier(PolynomialCalculator(threads=1))


class TestAlphaTwoPair:
    def test_report(self, verifier):
        report = verifier.verify(alpha=2, p=(1, 1), p_prime=(2, 0))
        assert report.degree == 1
        assert report.max_level == 3
        assert report.u_equal_level == 2
        assert report.first_diff is not None
        assert not report.isomorphic
        assert report.encodes

    def test_targeted_coefficient(self, verifier):
        report = verifier.verify(alpha=2, p=(1, 1), p_prime=(2, 0))
        assert report.targeted_partition.parts == (8, 3, 2, 2)
        assert (report.targeted_a, report.targeted_b) == (4, 5)
        assert report.expected_difference == -1
        assert report.closed_form_holds

    def test_wrong_degree_does_not_encode(self, verifier):
        report = verifier.verify(alpha=2, p=(1, 1), p_prime=(2, 0), degree=2)
        assert report.u_equal_level == 2
        assert not report.encodes

    def test_document_without_timings(self, verifier):
        document = VerificationDocument.from_report(verifier.verify(alpha=2, p=(1, 1), p_prime=(2, 0)))
        text = to_json(document)
        assert '"timings"' not in text
        assert document.targeted.holds
        assert document.hash_a != document.hash_b

    def test_isomorphic_inputs(self, verifier):
        with pytest.raises(IsomorphicInputsError):
            verifier.verify(alpha=2, p=(1, 1), p_prime=(1, 1))

    def test_length_mismatch(self, verifier):
        with pytest.raises(LengthMismatchError):
            verifier.verify(alpha=2, p=(1, 1), p_prime=(2, 0, 0))


class TestTargetedPartition:
    def test_absent_when_middle_vanishes(self):
        assert EncodeVerifier.targeted_partition(PteShape(alpha=1, p=(1, 0)), 1) is None

    def test_expected_difference(self):
        assert EncodeVerifier.expected_difference((1, 2, 6), (0, 4, 5), 2) == 6
        assert EncodeVerifier.expected_difference((0, 4, 7, 11), (1, 2, 9, 10), 3) == 30

    def test_degree_three_closed_form(self):
        # U_5 열거 없이 트리 DP로 계수 차이 확인
        calculator = PolynomialCalculator()
        shape_a = PteShape(alpha=11, p=(0, 4, 7, 11))
        shape_b = PteShape(alpha=11, p=(1, 2, 9, 10))
        target = EncodeVerifier.targeted_partition(shape_a, 3)
        assert target.parts == (103, 26, 2, 2, 2, 2)
        left = calculator.partition_count(TreeBuilder.build_pte_tree(shape_a), target)
        right = calculator.partition_count(TreeBuilder.build_pte_tree(shape_b), target)
        assert left - right == 30


class TestDegreeTwo:
    def test_alpha_six(self, verifier):
        report = verifier.verify(alpha=6, p=(1, 2, 6), p_prime=(0, 4, 5))
        assert report.shape_a.vertex_count == 58
        assert report.degree == 2
        assert report.u_equal_level == 3
        assert report.encodes
        assert report.expected_difference == 6
        assert report.closed_form_holds


class TestDeterminism:
    def test_threads_give_identical_document(self):
        # U_4 열거가 병렬 임계값을 넘는 크기
        documents = []
        for threads in (1, 8):
            report = EncodeVerifier(PolynomialCalculator(threads=threads)).verify(
                alpha=6, p=(1, 2, 6), p_prime=(0, 4, 5)
            )
            documents.append(to_json(VerificationDocument.from_report(report)))
        assert documents[0] == documents[1]


@pytest.mark.slow
class TestDegreeThree:
    def test_u4_equal(self, verifier):
        report = verifier.verify(alpha=11, p=(0, 4, 7, 11), p_prime=(1, 2, 9, 10), degree=3, max_level=4)
        assert report.shape_a.vertex_count == 137
        assert report.u_equal_level == 4
        assert report.encodes
        assert report.closed_form_holds
