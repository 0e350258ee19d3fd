"""
U, U_k, U_F, W 다항식 계산 서비스
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.config.env_config import ENUMERATION_BUDGET, THREADS
from src.config.logging import logger

from ..errors import BudgetExceededError, InvalidPartitionError, InvalidTreeError
from ..models.partition import Partition, PartitionPolynomial, TermDiff
from ..models.tree import Tree, WeightedGraph, WeightedTree, rooted_view, subtree_weights

GraphLike = Union[Tree, WeightedTree, WeightedGraph]
TreeLike = Union[Tree, WeightedTree]

# 작업 분할 이점이 없는 작은 열거는 단일 프로세스로 처리
_PARALLEL_MIN_SUBSETS = 200_000


def _as_graph(graph: GraphLike) -> WeightedGraph:
    if isinstance(graph, WeightedGraph):
        return graph
    if isinstance(graph, WeightedTree):
        return graph.as_graph()
    return WeightedGraph.unit(graph.vertex_count, graph.edges)


def _as_weighted_tree(tree: TreeLike) -> WeightedTree:
    return tree if isinstance(tree, WeightedTree) else WeightedTree.unit(tree)


class _DisjointSet:
    """되돌리기 가능한 union-find (경로 압축 없음, 크기 기준 합치기)"""

    def __init__(self, weights: Sequence[int]):
        self.parent = list(range(len(weights)))
        self.rank = [1] * len(weights)
        self.weight = list(weights)
        self.components = len(weights)
        self.history: List[Tuple[int, int]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, u: int, v: int) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        if self.rank[ru] < self.rank[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.rank[ru] += self.rank[rv]
        self.weight[ru] += self.weight[rv]
        self.components -= 1
        self.history.append((ru, rv))
        return True

    def undo(self) -> None:
        ru, rv = self.history.pop()
        self.parent[rv] = rv
        self.rank[ru] -= self.rank[rv]
        self.weight[ru] -= self.weight[rv]
        self.components += 1

    def partition(self) -> Tuple[int, ...]:
        return tuple(sorted(
            (self.weight[v] for v in range(len(self.parent)) if self.parent[v] == v),
            reverse=True,
        ))


def _removal_counts(
    sizes: Sequence[int],
    touts: Sequence[int],
    tins: Sequence[int],
    total: int,
    max_size: int,
    firsts: Sequence[int],
) -> Counter:
    """
    제거 집합 A(비어 있지 않음, 첫 원소 ∈ firsts)별 λ(E∖A) 개수

    후보 간선은 자식 정점의 전위 순번 순으로 정렬되어 있어야 한다.
    새 간선의 부분 크기는 sizes[idx]이고, 가장 가까운 선택된 조상(없으면 루트) 부분에서 빠진다.
    """
    m = len(sizes)
    counts: Counter = Counter()
    chosen: List[int] = []
    parts: List[int] = [total]

    def visit(idx: int) -> None:
        t = tins[idx]
        slot = 0
        for j in range(len(chosen) - 1, -1, -1):
            if touts[chosen[j]] >= t:
                slot = j + 1
                break
        size = sizes[idx]
        parts[slot] -= size
        chosen.append(idx)
        parts.append(size)
        counts[tuple(sorted(parts, reverse=True))] += 1
        if len(chosen) < max_size:
            for nxt in range(idx + 1, m):
                visit(nxt)
        chosen.pop()
        parts.pop()
        parts[slot] += size

    if max_size > 0:
        for idx in firsts:
            visit(idx)
    return counts


def _removal_worker(args: Tuple) -> Counter:
    return _removal_counts(*args)


class PolynomialCalculator:
    """분할 인덱스 다항식 계산기"""

    def __init__(self, budget: int = ENUMERATION_BUDGET, threads: int = THREADS):
        """
        Args:
            budget: 2^|E| 전수 열거를 허용하는 최대 간선 수
            threads: U_k 열거 워커 프로세스 수
        """
        self.budget = budget
        self.threads = max(1, threads)

    def _check_budget(self, edge_count: int, what: str) -> None:
        if edge_count > self.budget:
            logger.warning("열거 예산 초과", target=what, edges=edge_count, budget=self.budget)
            raise BudgetExceededError(
                f"{what}: 간선 {edge_count}개가 열거 예산 {self.budget}을 초과합니다",
                limit=self.budget,
                requested=edge_count,
            )

    @staticmethod
    def lambda_of(graph: GraphLike, edge_ids: Iterable[int]) -> Partition:
        """
        λ(A): G|_A 연결 성분별 가중치 합으로 이루어진 분할

        Args:
            graph: 트리, 가중치 트리 또는 가중치 그래프
            edge_ids: 간선 id 집합 A
        """
        g = _as_graph(graph)
        ids = _checked_edge_ids(g, edge_ids)
        dsu = _DisjointSet(g.weights)
        for eid in ids:
            dsu.union(*g.edges[eid])
        return Partition(dsu.partition())

    @staticmethod
    def rank(graph: GraphLike, edge_ids: Iterable[int]) -> int:
        """r(A) = |V| - k(G|_A)"""
        g = _as_graph(graph)
        ids = _checked_edge_ids(g, edge_ids)
        dsu = _DisjointSet(g.weights)
        for eid in ids:
            dsu.union(*g.edges[eid])
        return g.vertex_count - dsu.components

    def w_polynomial(self, graph: GraphLike) -> PartitionPolynomial:
        """
        상태 모형 W = Σ_{A⊆E} x_{λ(A)} (y-1)^{|A|-r(A)}

        간선을 하나씩 포함/제외하는 되돌리기 union-find 열거.
        """
        g = _as_graph(graph)
        m = g.edge_count
        self._check_budget(m, "W")
        logger.debug("W 다항식 열거 시작", vertices=g.vertex_count, edges=m)

        dsu = _DisjointSet(g.weights)
        counts: Counter = Counter()
        n = g.vertex_count

        def walk(i: int, chosen: int) -> None:
            if i == m:
                nullity = chosen - (n - dsu.components)
                counts[(dsu.partition(), nullity)] += 1
                return
            walk(i + 1, chosen)
            merged = dsu.union(*g.edges[i])
            walk(i + 1, chosen + 1)
            if merged:
                dsu.undo()

        walk(0, 0)
        return PartitionPolynomial.from_counts(counts)

    def u_k_polynomial(self, tree: TreeLike, k: int) -> PartitionPolynomial:
        """
        U_k = Σ_{A⊆E, |A|<=k} x_{λ(E∖A)}

        Args:
            tree: 트리 (가중치 트리면 λ는 가중치 합)
            k: 제거 간선 수 상한
        """
        if k < 0:
            raise InvalidPartitionError("k는 음이 아니어야 합니다")
        weighted = _as_weighted_tree(tree)
        return self._removal_polynomial(weighted, range(weighted.tree.edge_count), k)

    def u_polynomial(self, tree: TreeLike) -> PartitionPolynomial:
        """전체 U 다항식 (U_{|E|})"""
        weighted = _as_weighted_tree(tree)
        m = weighted.tree.edge_count
        self._check_budget(m, "U")
        return self._removal_polynomial(weighted, range(m), m)

    def u_f_polynomial(self, tree: TreeLike, edge_ids: Iterable[int]) -> PartitionPolynomial:
        """U_F = Σ_{A⊆F} x_{λ(E∖A)}"""
        weighted = _as_weighted_tree(tree)
        ids = weighted.tree.check_edges(edge_ids)
        self._check_budget(len(ids), "U_F")
        return self._removal_polynomial(weighted, sorted(ids), len(ids))

    def _removal_polynomial(
        self,
        weighted: WeightedTree,
        candidates: Iterable[int],
        max_size: int,
    ) -> PartitionPolynomial:
        tree = weighted.tree
        view = rooted_view(tree, 0)
        below = subtree_weights(view, weighted.weights)
        total = weighted.total_weight

        children = sorted(
            (view.child_of_edge(tree, eid) for eid in candidates),
            key=lambda v: view.tin[v],
        )
        sizes = [below[v] for v in children]
        tins = [view.tin[v] for v in children]
        touts = [view.tout[v] for v in children]
        m = len(children)
        max_size = min(max_size, m)
        subsets = sum(comb(m, i) for i in range(max_size + 1))
        logger.debug("제거 집합 열거 시작", candidates=m, max_size=max_size, subsets=subsets)

        counts: Counter = Counter({(total,): 1})
        workers = min(self.threads, m)
        if workers > 1 and subsets >= _PARALLEL_MIN_SUBSETS and max_size > 1:
            groups = [list(range(w, m, workers)) for w in range(workers)]
            jobs = [(sizes, touts, tins, total, max_size, group) for group in groups]
            with ProcessPoolExecutor(max_workers=workers) as executor:
                for partial in executor.map(_removal_worker, jobs):
                    counts.update(partial)
        else:
            counts.update(_removal_counts(sizes, touts, tins, total, max_size, range(m)))

        return PartitionPolynomial.from_counts(counts)

    def partition_count(self, tree: TreeLike, partition: Union[Partition, Sequence[int]]) -> int:
        """
        λ(E∖A) = partition 인 제거 집합 A의 개수 (= U의 해당 계수)

        λ의 부분 멀티셋을 상태로 하는 트리 DP라서 열거가 불가능한 크기에서도 정확히 계산한다.
        상태: (루트를 포함한 열린 성분 가중치, 닫힌 성분의 값별 개수)
        """
        weighted = _as_weighted_tree(tree)
        target = partition if isinstance(partition, Partition) else Partition.of(partition)
        if target.size != weighted.total_weight or not target.parts:
            return 0

        values = sorted(set(target.parts))
        position = {value: i for i, value in enumerate(values)}
        limit = tuple(target.parts.count(value) for value in values)
        largest = values[-1]
        zero = (0,) * len(values)

        def close(state: Tuple[int, ...], value: int) -> Optional[Tuple[int, ...]]:
            i = position.get(value)
            if i is None or state[i] >= limit[i]:
                return None
            return state[:i] + (state[i] + 1,) + state[i + 1:]

        def combine(first: Tuple[int, ...], second: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
            merged = tuple(a + b for a, b in zip(first, second))
            return merged if all(x <= y for x, y in zip(merged, limit)) else None

        tree_ = weighted.tree
        view = rooted_view(tree_, 0)
        tables: Dict[int, Dict[Tuple[int, Tuple[int, ...]], int]] = {}
        for u in reversed(view.order):
            table: Dict[Tuple[int, Tuple[int, ...]], int] = {(weighted.weights[u], zero): 1}
            for w, _ in tree_.adjacency[u]:
                if view.parent[w] != u:
                    continue
                child = tables.pop(w)
                merged: Dict[Tuple[int, Tuple[int, ...]], int] = {}
                for (open_u, closed_u), ways_u in table.items():
                    for (open_w, closed_w), ways_w in child.items():
                        ways = ways_u * ways_w
                        # 간선 유지
                        if open_u + open_w <= largest:
                            closed = combine(closed_u, closed_w)
                            if closed is not None:
                                key = (open_u + open_w, closed)
                                merged[key] = merged.get(key, 0) + ways
                        # 간선 제거: 자식 쪽 열린 성분이 닫힌다
                        closed = combine(closed_u, closed_w)
                        if closed is not None:
                            closed = close(closed, open_w)
                            if closed is not None:
                                key = (open_u, closed)
                                merged[key] = merged.get(key, 0) + ways
                table = merged
            tables[u] = table

        total = 0
        for (open_root, closed), ways in tables[view.root].items():
            final = close(closed, open_root)
            if final == limit:
                total += ways
        return total

    @staticmethod
    def coefficient(poly: PartitionPolynomial, partition: Union[Partition, Sequence[int]]) -> int:
        """y 차수 0에서 λ의 계수, 없으면 0"""
        return poly.coefficient(partition, 0)

    @staticmethod
    def poly_equal(first: PartitionPolynomial, second: PartitionPolynomial) -> bool:
        return first.terms == second.terms

    @staticmethod
    def poly_diff(first: PartitionPolynomial, second: PartitionPolynomial) -> Tuple[TermDiff, ...]:
        return first.diff(second)


def _checked_edge_ids(graph: WeightedGraph, edge_ids: Iterable[int]) -> List[int]:
    ids = sorted(set(int(e) for e in edge_ids))
    for eid in ids:
        if not 0 <= eid < graph.edge_count:
            raise InvalidTreeError(f"잘못된 간선 id: {eid}")
    return ids
