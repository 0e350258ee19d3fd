"""
networkx 연동 어댑터
변환, Prüfer 수열 기반 랜덤 트리, 랜덤 가중치 그래프
"""
import random
from typing import List, Optional, Sequence

import networkx as nx

from ...domain.errors import InvalidTreeError
from ...domain.models import Tree, WeightedGraph, WeightedTree


def tree_to_networkx(tree: Tree, weights: Optional[Sequence[int]] = None) -> nx.Graph:
    """정점 속성 weight, 간선 속성 eid를 갖는 nx.Graph"""
    graph = nx.Graph()
    for v in range(tree.vertex_count):
        graph.add_node(v, weight=1 if weights is None else int(weights[v]))
    for eid, (u, w) in enumerate(tree.edges):
        graph.add_edge(u, w, eid=eid, core=bool(tree.core_edges and eid in tree.core_edges))
    return graph


def tree_from_networkx(graph: nx.Graph) -> Tree:
    """정점을 정렬 순서로 0..N-1에 대응시킨 Tree"""
    if graph.number_of_nodes() == 0 or not nx.is_tree(graph):
        raise InvalidTreeError("networkx 그래프가 트리가 아닙니다")
    index = {v: i for i, v in enumerate(sorted(graph.nodes))}
    edges = sorted(tuple(sorted((index[u], index[w]))) for u, w in graph.edges)
    return Tree(vertex_count=len(index), edges=tuple(edges))


def random_tree(n: int, rng: random.Random) -> Tree:
    """균일 랜덤 라벨 트리 (랜덤 Prüfer 수열)"""
    if n < 1:
        raise InvalidTreeError("정점 수는 1 이상이어야 합니다")
    if n == 1:
        return Tree(vertex_count=1, edges=())
    if n == 2:
        return Tree(vertex_count=2, edges=((0, 1),))
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_networkx(nx.from_prufer_sequence(sequence))


def random_weighted_tree(n: int, rng: random.Random, max_weight: int = 5) -> WeightedTree:
    tree = random_tree(n, rng)
    return WeightedTree(tree=tree, weights=tuple(rng.randint(1, max_weight) for _ in range(n)))


def random_subtree_edges(tree: Tree, rng: random.Random) -> List[int]:
    """랜덤 정점에서 랜덤 개수만큼 키운 연결 간선 집합"""
    if tree.edge_count == 0:
        return []
    target = rng.randint(0, tree.edge_count)
    reached = {rng.randrange(tree.vertex_count)}
    chosen: List[int] = []
    while len(chosen) < target:
        frontier = sorted(
            eid for v in reached for w, eid in tree.adjacency[v] if w not in reached
        )
        eid = rng.choice(frontier)
        chosen.append(eid)
        reached.update(tree.edges[eid])
    return sorted(chosen)


def random_graph(n: int, m: int, rng: random.Random, max_weight: int = 3) -> WeightedGraph:
    """사이클을 허용하는 랜덤 단순 그래프 G(n, m)"""
    graph = nx.gnm_random_graph(n, m, seed=rng.randrange(2 ** 32))
    edges = tuple(sorted(tuple(sorted(edge)) for edge in graph.edges))
    return WeightedGraph(
        vertex_count=n,
        edges=edges,
        weights=tuple(rng.randint(1, max_weight) for _ in range(n)),
    )
