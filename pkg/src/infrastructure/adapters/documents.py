"""
JSON 문서 어댑터
트리, 다항식, 인증서, 서명, 검증 보고서의 직렬화 형식
"""
import hashlib
import json
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError

from ...application.services import VerificationReport
from ...domain.errors import InvalidTreeError, MalformedPolynomialError
from ...domain.models import (
    Partition,
    PartitionPolynomial,
    PteCertificate,
    PteShape,
    PteSignature,
    Tree,
    WeightedTree,
)


def to_json(document: BaseModel) -> str:
    """필드 선언 순서를 유지한 압축 JSON (같은 입력이면 바이트 단위로 같다)"""
    return json.dumps(document.model_dump(exclude_none=True), separators=(",", ":"), ensure_ascii=False)


class TreeDocument(BaseModel):
    """{"n": N, "edges": [[u, v], ...], "weights": [...], "core": [...]}"""
    n: int
    edges: List[Tuple[int, int]]
    weights: Optional[List[int]] = None
    core: Optional[List[int]] = None

    @classmethod
    def from_tree(cls, tree: Tree, weights: Optional[List[int]] = None) -> "TreeDocument":
        return cls(
            n=tree.vertex_count,
            edges=[tuple(edge) for edge in tree.edges],
            weights=list(weights) if weights is not None else None,
            core=sorted(tree.core_edges) if tree.core_edges else None,
        )

    @classmethod
    def parse(cls, text: str) -> "TreeDocument":
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise InvalidTreeError(f"트리 JSON 형식 오류: {e.error_count()}개 필드") from e

    @classmethod
    def load(cls, path: Union[str, Path]) -> "TreeDocument":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise InvalidTreeError(f"트리 파일을 읽을 수 없습니다: {path}") from e
        return cls.parse(text)

    def to_tree(self) -> Tree:
        return Tree(
            vertex_count=self.n,
            edges=tuple(self.edges),
            core_edges=frozenset(self.core) if self.core else None,
        )

    def to_weighted(self) -> WeightedTree:
        tree = self.to_tree()
        if self.weights is None:
            return WeightedTree.unit(tree)
        return WeightedTree(tree=tree, weights=tuple(self.weights))


class TermEntry(BaseModel):
    partition: List[int]
    ypow: int
    coeff: str


class PolynomialDocument(BaseModel):
    """{"terms": [{"partition": [...], "ypow": g, "coeff": "정수 문자열"}, ...]} (정규 순서)"""
    terms: List[TermEntry]

    @classmethod
    def from_polynomial(cls, poly: PartitionPolynomial) -> "PolynomialDocument":
        return cls(terms=[
            TermEntry(partition=list(partition.parts), ypow=grade, coeff=str(coeff))
            for partition, grade, coeff in poly
        ])

    @classmethod
    def parse(cls, text: str) -> "PolynomialDocument":
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise MalformedPolynomialError(f"다항식 JSON 형식 오류: {e.error_count()}개 필드") from e

    @classmethod
    def load(cls, path: Union[str, Path]) -> "PolynomialDocument":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise MalformedPolynomialError(f"다항식 파일을 읽을 수 없습니다: {path}") from e
        return cls.parse(text)

    def to_polynomial(self) -> PartitionPolynomial:
        counts: Dict[Tuple[Tuple[int, ...], int], int] = {}
        try:
            for term in self.terms:
                key = (Partition.of(term.partition).parts, term.ypow)
                counts[key] = counts.get(key, 0) + int(term.coeff)
            return PartitionPolynomial.from_counts(counts)
        except ValueError as e:
            raise MalformedPolynomialError(f"다항식 항이 잘못되었습니다: {e}") from e


def polynomial_digest(poly: PartitionPolynomial) -> str:
    """정규 직렬화의 SHA-256"""
    return hashlib.sha256(to_json(PolynomialDocument.from_polynomial(poly)).encode("utf-8")).hexdigest()


class CertificateDocument(BaseModel):
    """{"a": [...], "b": [...], "degree": k, "verified": true}"""
    a: List[int]
    b: List[int]
    degree: int
    verified: bool

    @classmethod
    def from_certificate(cls, certificate: PteCertificate) -> "CertificateDocument":
        return cls(
            a=list(certificate.a.ascending),
            b=list(certificate.b.ascending),
            degree=certificate.degree,
            verified=True,
        )


class ShapeDocument(BaseModel):
    alpha: int
    p: List[int]

    @classmethod
    def from_shape(cls, shape: PteShape) -> "ShapeDocument":
        return cls(alpha=shape.alpha, p=list(shape.p))


class SignatureDocument(BaseModel):
    alpha: int
    n: int
    beta: int

    @classmethod
    def from_signature(cls, signature: PteSignature) -> "SignatureDocument":
        return cls(alpha=signature.alpha, n=signature.n, beta=signature.beta)


class DiffEntry(BaseModel):
    partition: List[int]
    ypow: int
    coeff_a: str
    coeff_b: str


class TargetedEntry(BaseModel):
    partition: List[int]
    coeff_a: str
    coeff_b: str
    expected_difference: str
    holds: bool


class VerificationDocument(BaseModel):
    shape_a: ShapeDocument
    shape_b: ShapeDocument
    degree: int
    max_level: int
    u_equal_level: int
    isomorphic: bool
    encodes: bool
    first_diff: Optional[DiffEntry] = None
    targeted: Optional[TargetedEntry] = None
    hash_a: str
    hash_b: str
    timings: Optional[Dict[str, float]] = None

    @classmethod
    def from_report(cls, report: VerificationReport, include_timings: bool = False) -> "VerificationDocument":
        first_diff = None
        if report.first_diff is not None:
            first_diff = DiffEntry(
                partition=list(report.first_diff.partition.parts),
                ypow=report.first_diff.y_grade,
                coeff_a=str(report.first_diff.left),
                coeff_b=str(report.first_diff.right),
            )
        targeted = None
        if report.targeted_partition is not None:
            targeted = TargetedEntry(
                partition=list(report.targeted_partition.parts),
                coeff_a=str(report.targeted_a),
                coeff_b=str(report.targeted_b),
                expected_difference=str(report.expected_difference),
                holds=bool(report.closed_form_holds),
            )
        return cls(
            shape_a=ShapeDocument.from_shape(report.shape_a),
            shape_b=ShapeDocument.from_shape(report.shape_b),
            degree=report.degree,
            max_level=report.max_level,
            u_equal_level=report.u_equal_level,
            isomorphic=report.isomorphic,
            encodes=report.encodes,
            first_diff=first_diff,
            targeted=targeted,
            hash_a=polynomial_digest(report.u_a),
            hash_b=polynomial_digest(report.u_b),
            timings={k: round(v, 6) for k, v in report.timings.items()} if include_timings else None,
        )


class MultiPteDocument(BaseModel):
    k: int
    sequences: List[List[int]]
    wright_bound: int


class LabelsDocument(BaseModel):
    """간선 순서의 θ_e와 (라벨, 개수) 목록"""
    labels: List[int]
    multiset: List[Tuple[int, int]]


class CentroidDocument(BaseModel):
    centroid: List[int]
    branch_weight: int


class ComparisonDocument(BaseModel):
    q: List[int]
    t: List[int]
    decomposition: int
    isomorphic: int
