"""
테스트용 트리 헬퍼
"""
from src.domain.models import Tree


def path_tree(n: int) -> Tree:
    return Tree(vertex_count=n, edges=tuple((i, i + 1) for i in range(n - 1)))


def star_tree(n: int) -> Tree:
    return Tree(vertex_count=n, edges=tuple((0, i) for i in range(1, n)))
