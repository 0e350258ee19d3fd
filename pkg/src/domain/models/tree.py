"""
트리 도메인 모델
"""
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..errors import IncompatibleSequenceError, InvalidTreeError

Edge = Tuple[int, int]


def _normalize_edges(vertex_count: int, edges: Iterable[Sequence[int]]) -> Tuple[Edge, ...]:
    """간선을 (u, v) 튜플로 정리하고 범위/자기 루프/중복을 검사"""
    normalized: List[Edge] = []
    seen = set()
    for edge in edges:
        if len(edge) != 2:
            raise InvalidTreeError(f"간선은 두 정점으로 구성되어야 합니다: {edge}")
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise InvalidTreeError(f"정점 id 범위 초과: {edge} (N={vertex_count})")
        if u == v:
            raise InvalidTreeError(f"자기 루프는 허용되지 않습니다: {edge}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InvalidTreeError(f"중복 간선: {edge}")
        seen.add(key)
        normalized.append((u, v))
    return tuple(normalized)


@dataclass(frozen=True)
class Tree:
    """정점 0..N-1 위의 트리

    간선 id는 edges 튜플의 인덱스이며, core_edges는 T(p, s) 빌더가 채운다.
    """
    vertex_count: int
    edges: Tuple[Edge, ...]
    root: Optional[int] = None
    core_edges: Optional[FrozenSet[int]] = None

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise InvalidTreeError("정점 수는 1 이상이어야 합니다")
        object.__setattr__(self, "edges", _normalize_edges(self.vertex_count, self.edges))
        if len(self.edges) != self.vertex_count - 1:
            raise InvalidTreeError(
                f"간선 수는 N-1이어야 합니다: N={self.vertex_count}, |E|={len(self.edges)}"
            )
        if self.root is not None and not 0 <= self.root < self.vertex_count:
            raise InvalidTreeError(f"루트 정점 범위 초과: {self.root}")

        # 간선 수가 N-1이므로 연결이면 비순환
        seen = [False] * self.vertex_count
        seen[0] = True
        stack = [0]
        while stack:
            u = stack.pop()
            for w, _ in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if not all(seen):
            raise InvalidTreeError("트리가 연결되어 있지 않습니다")

        if self.core_edges is not None:
            core = frozenset(int(e) for e in self.core_edges)
            object.__setattr__(self, "core_edges", core)
            self._check_core_star(core)

    def _check_core_star(self, core: FrozenSet[int]) -> None:
        for e in core:
            if not 0 <= e < len(self.edges):
                raise InvalidTreeError(f"core 간선 id 범위 초과: {e}")
        if len(core) < 2:
            return
        common = None
        for e in core:
            pair = set(self.edges[e])
            common = pair if common is None else common & pair
        if not common:
            raise InvalidTreeError("core 간선이 스타를 이루지 않습니다")

    @cached_property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """정점별 (이웃, 간선 id) 목록"""
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(row) for row in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise InvalidTreeError(f"잘못된 정점 id: {v}")

    def check_edges(self, edge_ids: Iterable[int]) -> FrozenSet[int]:
        ids = frozenset(int(e) for e in edge_ids)
        for e in ids:
            if not 0 <= e < len(self.edges):
                raise InvalidTreeError(f"잘못된 간선 id: {e}")
        return ids

    def core_center(self) -> Optional[int]:
        """core 스타의 중심 정점 c"""
        if not self.core_edges:
            return None
        if self.root is not None and all(self.root in self.edges[e] for e in self.core_edges):
            return self.root
        common = None
        for e in self.core_edges:
            pair = set(self.edges[e])
            common = pair if common is None else common & pair
        return min(common) if common else None

    def relabel(self, permutation: Sequence[int]) -> "Tree":
        """정점 v를 permutation[v]로 옮긴 트리 (간선 순서 유지)"""
        if sorted(permutation) != list(range(self.vertex_count)):
            raise InvalidTreeError("permutation은 0..N-1의 순열이어야 합니다")
        return Tree(
            vertex_count=self.vertex_count,
            edges=tuple((permutation[u], permutation[v]) for u, v in self.edges),
            root=None if self.root is None else permutation[self.root],
            core_edges=self.core_edges,
        )


@dataclass(frozen=True)
class WeightedGraph:
    """양의 정수 가중치를 갖는 일반 그래프 (사이클 허용)"""
    vertex_count: int
    edges: Tuple[Edge, ...]
    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise InvalidTreeError("정점 수는 1 이상이어야 합니다")
        object.__setattr__(self, "edges", _normalize_edges(self.vertex_count, self.edges))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) != self.vertex_count:
            raise InvalidTreeError("가중치 개수가 정점 수와 다릅니다")
        if any(w < 1 for w in self.weights):
            raise InvalidTreeError("가중치는 1 이상이어야 합니다")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @classmethod
    def unit(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "WeightedGraph":
        return cls(vertex_count=vertex_count, edges=tuple(tuple(e) for e in edges), weights=(1,) * vertex_count)


@dataclass(frozen=True)
class WeightedTree:
    """가중치 트리 (T, ω)"""
    tree: Tree
    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) != self.tree.vertex_count:
            raise InvalidTreeError("가중치 개수가 정점 수와 다릅니다")
        if any(w < 1 for w in self.weights):
            raise InvalidTreeError("가중치는 1 이상이어야 합니다")

    @classmethod
    def unit(cls, tree: Tree) -> "WeightedTree":
        """(T, 1_V)"""
        return cls(tree=tree, weights=(1,) * tree.vertex_count)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def as_graph(self) -> WeightedGraph:
        return WeightedGraph(
            vertex_count=self.tree.vertex_count,
            edges=self.tree.edges,
            weights=self.weights,
        )


@dataclass(frozen=True)
class PteShape:
    """PTE 트리 T_α(p)를 동형 사상 단위로 식별하는 (α, p)

    p는 내림차순으로 저장한다.
    """
    alpha: int
    p: Tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        p = tuple(sorted((int(x) for x in self.p), reverse=True))
        object.__setattr__(self, "p", p)
        if self.alpha < 0:
            raise IncompatibleSequenceError("α는 음이 아닌 정수여야 합니다")
        if len(p) < 2:
            raise IncompatibleSequenceError("수열 길이 n은 2 이상이어야 합니다")
        if min(p) < 0:
            raise IncompatibleSequenceError("p의 항은 음이 아니어야 합니다")
        if max(p) > self.alpha:
            raise IncompatibleSequenceError(f"p가 α={self.alpha}와 호환되지 않습니다: {p}")

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def s(self) -> Tuple[int, ...]:
        """α - p"""
        return tuple(self.alpha - x for x in self.p)

    @property
    def vertex_count(self) -> int:
        return (3 * self.alpha + 1) * self.n + 1


@dataclass(frozen=True)
class RootedView:
    """루트를 정한 트리의 전위 순회 정보

    tin/tout은 전위 순번 구간이며 u가 w의 조상(자기 포함)이면 tin[u] <= tin[w] <= tout[u].
    """
    root: int
    parent: Tuple[int, ...]
    parent_edge: Tuple[int, ...]
    order: Tuple[int, ...]
    subtree_size: Tuple[int, ...]
    tin: Tuple[int, ...]
    tout: Tuple[int, ...]

    def is_ancestor(self, u: int, w: int) -> bool:
        return self.tin[u] <= self.tin[w] <= self.tout[u]

    def child_of_edge(self, tree: Tree, edge_id: int) -> int:
        """간선의 루트 반대쪽 끝점"""
        u, v = tree.edges[edge_id]
        return v if self.parent_edge[v] == edge_id else u


@lru_cache(maxsize=256)
def rooted_view(tree: Tree, root: int) -> RootedView:
    """트리를 root에서 전위 순회한 RootedView (반복 DFS)"""
    tree.check_vertex(root)
    n = tree.vertex_count
    parent = [-1] * n
    parent_edge = [-1] * n
    order: List[int] = []
    stack = [root]
    visited = [False] * n
    visited[root] = True
    while stack:
        u = stack.pop()
        order.append(u)
        # 인접 순서를 유지하도록 역순으로 push
        for w, eid in reversed(tree.adjacency[u]):
            if not visited[w]:
                visited[w] = True
                parent[w] = u
                parent_edge[w] = eid
                stack.append(w)

    size = [1] * n
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]

    tin = [0] * n
    for i, u in enumerate(order):
        tin[u] = i
    tout = [tin[u] + size[u] - 1 for u in range(n)]

    return RootedView(
        root=root,
        parent=tuple(parent),
        parent_edge=tuple(parent_edge),
        order=tuple(order),
        subtree_size=tuple(size),
        tin=tuple(tin),
        tout=tuple(tout),
    )


def subtree_weights(view: RootedView, weights: Sequence[int]) -> List[int]:
    """정점별 서브트리 가중치 합"""
    total = list(weights)
    for u in reversed(view.order):
        p = view.parent[u]
        if p >= 0:
            total[p] += total[u]
    return total
