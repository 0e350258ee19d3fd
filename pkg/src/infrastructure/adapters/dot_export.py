"""
Graphviz DOT 내보내기
core 간선은 굵게 표시한다.
"""
from typing import List, Optional, Sequence

from ...domain.models import Tree


def tree_to_dot(tree: Tree, name: str = "T", weights: Optional[Sequence[int]] = None) -> str:
    """
    무방향 DOT 문자열

    Args:
        tree: 트리
        name: 그래프 이름
        weights: 정점 가중치 (있으면 라벨에 표시)
    """
    lines: List[str] = [f"graph {name} {{"]
    center = tree.core_center()
    for v in range(tree.vertex_count):
        if weights is not None:
            lines.append(f'\t"{v}" [label="{v}:{weights[v]}"];')
        elif v == center:
            lines.append(f'\t"{v}" [label="c"];')
        else:
            lines.append(f'\t"{v}";')
    core = tree.core_edges or frozenset()
    for eid, (u, w) in enumerate(tree.edges):
        style = " [style=bold]" if eid in core else ""
        lines.append(f'\t"{u}" -- "{w}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"
