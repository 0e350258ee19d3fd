"""
utree 명령행 인터페이스
종료 코드: 0 검증됨/참, 1 반박됨/없음, 2 오류
"""
import argparse
import random
import sys
from collections import Counter
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from pydantic import BaseModel

from ...application.services import EncodeVerifier, SubtreeExperiment
from ...config.env_config import APP_NAME, APP_VERSION, DEFAULT_SEED, THREADS
from ...config.logging import logger
from ...domain.errors import BudgetExceededError, UTreeError
from ...domain.models import BranchType, Partition, PteShape, Tree
from ...domain.services import (
    EQUAL_MULTISETS,
    CentroidCalculator,
    PolynomialCalculator,
    PteRecognizer,
    PteSolver,
    SubtreeCensus,
    TreeBuilder,
)
from ...infrastructure.adapters import (
    CentroidDocument,
    CertificateDocument,
    ComparisonDocument,
    LabelsDocument,
    MultiPteDocument,
    PolynomialDocument,
    ShapeDocument,
    SignatureDocument,
    TreeDocument,
    VerificationDocument,
    polynomial_digest,
    random_tree,
    to_json,
    tree_to_dot,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_ERROR = 2


def int_list(text: str) -> List[int]:
    """쉼표 구분 정수 목록 (입력 순서 유지)"""
    try:
        return [int(chunk.strip()) for chunk in text.split(",") if chunk.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"쉼표로 구분된 정수 목록이 아닙니다: {text!r}")


def emit(args: argparse.Namespace, text: str) -> None:
    """--out이 있으면 파일로, 없으면 stdout으로"""
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def emit_document(args: argparse.Namespace, document: BaseModel) -> None:
    emit(args, to_json(document))


def calculator(args: argparse.Namespace) -> PolynomialCalculator:
    threads = args.threads if getattr(args, "threads", None) else THREADS
    return PolynomialCalculator(threads=threads)


def load_tree(args: argparse.Namespace) -> Tree:
    """--tree 파일 또는 --alpha/--p 형태로 트리 준비"""
    if getattr(args, "tree", None):
        return TreeDocument.load(args.tree).to_tree()
    if getattr(args, "alpha", None) is None or getattr(args, "p", None) is None:
        raise argparse.ArgumentTypeError("--tree 또는 --alpha/--p 가 필요합니다")
    return TreeBuilder.build_pte_tree(PteShape(alpha=args.alpha, p=tuple(args.p)))


# ---- pte ----

def cmd_pte_check(args: argparse.Namespace) -> int:
    if not PteSolver.is_pte(args.a, args.b, args.k):
        emit(args, "false")
        return EXIT_REFUTED
    certificate = PteSolver.certify(args.a, args.b)
    emit_document(args, CertificateDocument.from_certificate(certificate))
    return EXIT_OK


def cmd_pte_degree(args: argparse.Namespace) -> int:
    degree = PteSolver.pte_degree(args.a, args.b)
    emit(args, str(degree))
    return EXIT_OK if degree != EQUAL_MULTISETS and degree > 0 else EXIT_REFUTED


def cmd_pte_prouhet(args: argparse.Namespace) -> int:
    emit_document(args, CertificateDocument.from_certificate(PteSolver().prouhet(args.k)))
    return EXIT_OK


def cmd_pte_search(args: argparse.Namespace) -> int:
    try:
        found = PteSolver().search_pte(args.size, args.degree, args.max_value)
    except BudgetExceededError as e:
        partial = e.partial or []
        emit(args, "\n".join(to_json(CertificateDocument.from_certificate(c)) for c in partial))
        raise
    emit(args, "\n".join(to_json(CertificateDocument.from_certificate(c)) for c in found))
    return EXIT_OK if found else EXIT_REFUTED


def cmd_pte_multi(args: argparse.Namespace) -> int:
    solver = PteSolver()
    sequences = solver.multi_pte(args.j, args.k)
    emit_document(args, MultiPteDocument(
        k=args.k,
        sequences=[list(s.ascending) for s in sequences],
        wright_bound=solver.wright_bound(args.k),
    ))
    return EXIT_OK


def cmd_pte_euler(args: argparse.Namespace) -> int:
    emit_document(args, CertificateDocument.from_certificate(PteSolver.euler_goldbach(args.x, args.y, args.z)))
    return EXIT_OK


# ---- tree ----

def cmd_tree_build(args: argparse.Namespace) -> int:
    tree = TreeBuilder.build_pte_tree(PteShape(alpha=args.alpha, p=tuple(args.p)))
    emit(args, tree_to_dot(tree) if args.dot else to_json(TreeDocument.from_tree(tree)))
    return EXIT_OK


def cmd_tree_random(args: argparse.Namespace) -> int:
    tree = random_tree(args.n, random.Random(args.seed))
    emit_document(args, TreeDocument.from_tree(tree))
    return EXIT_OK


def cmd_tree_labels(args: argparse.Namespace) -> int:
    tree = load_tree(args)
    labels = CentroidCalculator.edge_labels(tree)
    multiset = Counter(labels.values())
    emit_document(args, LabelsDocument(
        labels=[labels[eid] for eid in range(tree.edge_count)],
        multiset=sorted(multiset.items()),
    ))
    return EXIT_OK


def cmd_tree_centroid(args: argparse.Namespace) -> int:
    tree = load_tree(args)
    centroid = sorted(CentroidCalculator.centroid(tree))
    emit_document(args, CentroidDocument(
        centroid=centroid,
        branch_weight=CentroidCalculator.branch_weight(tree, centroid[0]),
    ))
    return EXIT_OK


def cmd_tree_recognize(args: argparse.Namespace) -> int:
    shape = PteRecognizer.recognize_pte_tree(load_tree(args))
    if shape is None:
        emit(args, "not-PTE")
        return EXIT_REFUTED
    emit_document(args, ShapeDocument.from_shape(shape))
    return EXIT_OK


def cmd_tree_dot(args: argparse.Namespace) -> int:
    if args.tree:
        weighted = TreeDocument.load(args.tree)
        emit(args, tree_to_dot(weighted.to_tree(), weights=weighted.weights))
    else:
        emit(args, tree_to_dot(load_tree(args)))
    return EXIT_OK


# ---- upoly ----

def _compute_polynomial(args: argparse.Namespace):
    calc = calculator(args)
    if getattr(args, "tree", None):
        target = TreeDocument.load(args.tree).to_weighted()
    else:
        target = load_tree(args)
    if args.k is None:
        return calc.u_polynomial(target)
    return calc.u_k_polynomial(target, args.k)


def cmd_upoly_compute(args: argparse.Namespace) -> int:
    poly = _compute_polynomial(args)
    emit(args, polynomial_digest(poly) if args.hash else to_json(PolynomialDocument.from_polynomial(poly)))
    return EXIT_OK


def cmd_upoly_hash(args: argparse.Namespace) -> int:
    emit(args, polynomial_digest(_compute_polynomial(args)))
    return EXIT_OK


def cmd_upoly_coeff(args: argparse.Namespace) -> int:
    if args.tree:
        target = TreeDocument.load(args.tree).to_weighted()
    else:
        target = load_tree(args)
    count = calculator(args).partition_count(target, Partition.of(args.partition))
    emit(args, str(count))
    return EXIT_OK


def cmd_upoly_diff(args: argparse.Namespace) -> int:
    left = PolynomialDocument.load(args.left).to_polynomial()
    right = PolynomialDocument.load(args.right).to_polynomial()
    diffs = PolynomialCalculator.poly_diff(left, right)
    emit(args, "\n".join(
        f"{list(d.partition.parts)} ypow={d.y_grade} {d.left} {d.right}" for d in diffs
    ) or "equal")
    return EXIT_OK if not diffs else EXIT_REFUTED


# ---- census ----

def cmd_census_count(args: argparse.Namespace) -> int:
    bt = BranchType(tuple(args.q), tuple(args.t))
    if args.oracle:
        tree = TreeBuilder.build_pte_tree(PteShape(alpha=args.alpha, p=tuple(args.p)))
        count = SubtreeCensus().count_subtrees_oracle(tree, bt)
    else:
        count = SubtreeCensus.count_subtrees_formula(args.alpha, args.p, bt)
    emit(args, str(count))
    return EXIT_OK


def cmd_census_same(args: argparse.Namespace) -> int:
    same, witness = SubtreeCensus.same_subtree_counts(args.alpha, args.p, args.p_prime, args.k)
    if same:
        emit(args, "true")
        return EXIT_OK
    emit(args, f"false q={list(witness.q)} t={list(witness.t)}")
    return EXIT_REFUTED


def cmd_census_signature(args: argparse.Namespace) -> int:
    tree = load_tree(args)
    u1 = calculator(args).u_k_polynomial(tree, 1)
    signature = PteRecognizer.signature_from_u1(u1, tree.vertex_count)
    if signature is None:
        emit(args, "not-PTE")
        return EXIT_REFUTED
    emit_document(args, SignatureDocument.from_signature(signature))
    return EXIT_OK


def cmd_census_experiment(args: argparse.Namespace) -> int:
    comparisons = SubtreeExperiment().run(PteShape(alpha=args.alpha, p=tuple(args.p)), args.k)
    emit(args, "\n".join(
        to_json(ComparisonDocument(
            q=list(c.branch_type.q),
            t=list(c.branch_type.t),
            decomposition=c.decomposition_count,
            isomorphic=c.isomorphic_count,
        ))
        for c in comparisons
    ))
    return EXIT_OK


# ---- verify ----

def cmd_verify(args: argparse.Namespace) -> int:
    report = EncodeVerifier(calculator(args)).verify(
        alpha=args.alpha,
        p=args.p,
        p_prime=args.p_prime,
        degree=args.k,
        max_level=args.max_level,
    )
    emit_document(args, VerificationDocument.from_report(report, include_timings=args.timings))
    return EXIT_OK if report.encodes else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="결과를 쓸 파일 (기본 stdout)")
    common.add_argument("--threads", type=int, default=None, help=f"U_k 열거 워커 수 (기본 {THREADS})")

    shape_args = argparse.ArgumentParser(add_help=False)
    shape_args.add_argument("--tree", help="트리 JSON 파일")
    shape_args.add_argument("--alpha", type=int, help="PTE 트리 α")
    shape_args.add_argument("--p", type=int_list, help="PTE 트리 p (쉼표 구분)")

    parser = argparse.ArgumentParser(prog=APP_NAME, description="PTE 트리와 U-다항식 계산 도구")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    groups = parser.add_subparsers(dest="group", required=True)

    def command(sub, name: str, handler: Callable[[argparse.Namespace], int], help_text: str, parents=()):
        cmd = sub.add_parser(name, help=help_text, parents=[common, *parents])
        cmd.set_defaults(handler=handler)
        return cmd

    # pte
    pte = groups.add_parser("pte", help="PTE 수열").add_subparsers(dest="command", required=True)
    cmd = command(pte, "check", cmd_pte_check, "a =_k b 확인")
    cmd.add_argument("--a", type=int_list, required=True)
    cmd.add_argument("--b", type=int_list, required=True)
    cmd.add_argument("--k", type=int, required=True)
    cmd = command(pte, "degree", cmd_pte_degree, "정확한 차수")
    cmd.add_argument("--a", type=int_list, required=True)
    cmd.add_argument("--b", type=int_list, required=True)
    cmd = command(pte, "prouhet", cmd_pte_prouhet, "Thue-Morse 인증서")
    cmd.add_argument("--k", type=int, required=True)
    cmd = command(pte, "search", cmd_pte_search, "전수 탐색")
    cmd.add_argument("--size", type=int, required=True)
    cmd.add_argument("--degree", type=int, required=True)
    cmd.add_argument("--max-value", type=int, required=True)
    cmd = command(pte, "multi", cmd_pte_multi, "서로 =_k인 j개 수열")
    cmd.add_argument("--j", type=int, required=True)
    cmd.add_argument("--k", type=int, required=True)
    cmd = command(pte, "euler", cmd_pte_euler, "(a,b,c,a+b+c) =_2 (0,a+b,a+c,b+c)")
    cmd.add_argument("x", type=int)
    cmd.add_argument("y", type=int)
    cmd.add_argument("z", type=int)

    # tree
    tree = groups.add_parser("tree", help="트리 구성과 라벨").add_subparsers(dest="command", required=True)
    cmd = command(tree, "build", cmd_tree_build, "T_α(p) 생성")
    cmd.add_argument("--alpha", type=int, required=True)
    cmd.add_argument("--p", type=int_list, required=True)
    cmd.add_argument("--dot", action="store_true", help="DOT 형식으로 출력")
    cmd = command(tree, "random", cmd_tree_random, "랜덤 라벨 트리 (Prüfer)")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--seed", type=int, default=DEFAULT_SEED)
    command(tree, "labels", cmd_tree_labels, "간선 라벨 θ_e", parents=[shape_args])
    command(tree, "centroid", cmd_tree_centroid, "중심", parents=[shape_args])
    command(tree, "recognize", cmd_tree_recognize, "PTE 트리 판별", parents=[shape_args])
    command(tree, "dot", cmd_tree_dot, "DOT 내보내기", parents=[shape_args])

    # upoly
    upoly = groups.add_parser("upoly", help="U / U_k 다항식").add_subparsers(dest="command", required=True)
    cmd = command(upoly, "compute", cmd_upoly_compute, "U_k 계산 (--k 생략 시 전체 U)", parents=[shape_args])
    cmd.add_argument("--k", type=int, default=None)
    cmd.add_argument("--hash", action="store_true", help="정규 직렬화 해시만 출력")
    cmd = command(upoly, "hash", cmd_upoly_hash, "정규 직렬화 해시", parents=[shape_args])
    cmd.add_argument("--k", type=int, default=None)
    cmd = command(upoly, "coeff", cmd_upoly_coeff, "U의 x_λ 계수 (트리 DP)", parents=[shape_args])
    cmd.add_argument("--partition", type=int_list, required=True)
    cmd = command(upoly, "diff", cmd_upoly_diff, "두 다항식 JSON의 항별 차이")
    cmd.add_argument("--left", required=True)
    cmd.add_argument("--right", required=True)

    # census
    census = groups.add_parser("census", help="부분트리 개수와 서명").add_subparsers(dest="command", required=True)
    cmd = command(census, "count", cmd_census_count, "|S_{q,t}(T_α(p))|")
    cmd.add_argument("--alpha", type=int, required=True)
    cmd.add_argument("--p", type=int_list, required=True)
    cmd.add_argument("--q", type=int_list, required=True)
    cmd.add_argument("--t", type=int_list, required=True)
    cmd.add_argument("--oracle", action="store_true", help="직접 열거로 계산")
    cmd = command(census, "same", cmd_census_same, "Σ(q+t) <= k 유형 개수 일치 여부")
    cmd.add_argument("--alpha", type=int, required=True)
    cmd.add_argument("--p", type=int_list, required=True)
    cmd.add_argument("--p-prime", type=int_list, required=True)
    cmd.add_argument("--k", type=int, required=True)
    command(census, "signature", cmd_census_signature, "U_1에서 (α, n, β) 복원", parents=[shape_args])
    cmd = command(census, "experiment", cmd_census_experiment, "동형 부분트리 개수와 분해 공식 비교")
    cmd.add_argument("--alpha", type=int, required=True)
    cmd.add_argument("--p", type=int_list, required=True)
    cmd.add_argument("--k", type=int, required=True)

    # verify
    cmd = groups.add_parser("verify", help="PTE 인코딩 검증", parents=[common])
    cmd.set_defaults(handler=cmd_verify)
    cmd.add_argument("--alpha", type=int, required=True)
    cmd.add_argument("--p", type=int_list, required=True)
    cmd.add_argument("--p-prime", type=int_list, required=True)
    cmd.add_argument("--k", type=int, default=None, help="PTE 차수 (생략 시 측정)")
    cmd.add_argument("--max-level", type=int, default=None, help="비교할 최대 m (기본 k+2)")
    cmd.add_argument("--timings", action="store_true", help="단계별 소요 시간 포함")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """메인 함수"""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except argparse.ArgumentTypeError as e:
        parser.error(str(e))
    except UTreeError as e:
        logger.error("명령 실행 실패", error=str(e), error_type=type(e).__name__)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
