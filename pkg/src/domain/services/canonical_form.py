"""
트리 정규형(AHU 인코딩) 서비스
"""
from typing import Dict, List, Optional

from ..models.tree import Tree, rooted_view
from .centroid_calculator import CentroidCalculator


class CanonicalForm:
    """AHU 괄호 문자열 기반 동형 판정"""

    @staticmethod
    def rooted_code(tree: Tree, root: int, blocked: Optional[int] = None) -> str:
        """
        root를 루트로 한 AHU 코드

        blocked 정점 쪽 가지는 제외한다 (이중 중심 분할용).
        자식 코드를 정렬해 이어 붙인 "(...)" 문자열.
        """
        view = rooted_view(tree, root)
        codes: Dict[int, List[str]] = {}
        skipped = set()
        for u in view.order:
            if u == blocked or view.parent[u] in skipped:
                skipped.add(u)
        result = ""
        for u in reversed(view.order):
            if u in skipped:
                continue
            children = codes.pop(u, [])
            children.sort()
            code = "(" + "".join(children) + ")"
            parent = view.parent[u]
            if parent >= 0:
                codes.setdefault(parent, []).append(code)
            else:
                result = code
        return result

    @staticmethod
    def canonical_form(tree: Tree) -> str:
        """
        동형 불변 정규 코드

        중심이 하나면 중심에서의 AHU 코드, 둘이면 중심 간선으로 나눈 두 반쪽 코드를
        정렬해 "|"로 잇는다.
        """
        centroid = sorted(CentroidCalculator.centroid(tree))
        if len(centroid) == 1:
            return CanonicalForm.rooted_code(tree, centroid[0])
        u, w = centroid
        halves = sorted([
            CanonicalForm.rooted_code(tree, u, blocked=w),
            CanonicalForm.rooted_code(tree, w, blocked=u),
        ])
        return "|".join(halves)

    @staticmethod
    def is_isomorphic(first: Tree, second: Tree) -> bool:
        if first.vertex_count != second.vertex_count:
            return False
        return CanonicalForm.canonical_form(first) == CanonicalForm.canonical_form(second)
