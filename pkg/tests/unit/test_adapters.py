"""
JSON 문서, DOT 내보내기, networkx 연동 어댑터 테스트
"""
import json
import random

import networkx as nx
import pytest

from src.domain.errors import InvalidTreeError, MalformedPolynomialError
from src.domain.models import IntSequence, PartitionPolynomial, PteCertificate, Tree, WeightedTree
from src.domain.services import TreeContractor
from src.infrastructure.adapters import (
    CertificateDocument,
    PolynomialDocument,
    TreeDocument,
    polynomial_digest,
    random_graph,
    random_subtree_edges,
    random_tree,
    to_json,
    tree_from_networkx,
    tree_to_dot,
    tree_to_networkx,
)
from tests.helpers import path_tree


class TestTreeDocument:
    def test_serialize(self):
        document = TreeDocument.from_tree(path_tree(3))
        assert to_json(document) == '{"n":3,"edges":[[0,1],[1,2]]}'

    def test_core_is_kept(self, t_211):
        document = TreeDocument.from_tree(t_211)
        assert document.core == [0, 7]
        assert TreeDocument.parse(to_json(document)).to_tree().core_edges == t_211.core_edges

    def test_parse_weighted(self):
        document = TreeDocument.parse('{"n": 2, "edges": [[0, 1]], "weights": [3, 4]}')
        weighted = document.to_weighted()
        assert weighted.weights == (3, 4)
        assert TreeDocument.parse('{"n": 2, "edges": [[0, 1]]}').to_weighted().weights == (1, 1)

    def test_malformed_json(self):
        with pytest.raises(InvalidTreeError):
            TreeDocument.parse('{"n": "x"}')

    def test_not_a_tree(self):
        with pytest.raises(InvalidTreeError):
            TreeDocument.parse('{"n": 3, "edges": [[0, 1]]}').to_tree()

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(InvalidTreeError):
            TreeDocument.load(tmp_path / "missing.json")

    def test_load(self, tmp_path, t_211):
        path = tmp_path / "t.json"
        path.write_text(to_json(TreeDocument.from_tree(t_211)), encoding="utf-8")
        assert TreeDocument.load(path).to_tree().edges == t_211.edges


class TestPolynomialDocument:
    def test_canonical_serialization(self):
        poly = PartitionPolynomial.from_counts({(3,): 1, (2, 1): 2, (1, 1, 1): 1})
        text = to_json(PolynomialDocument.from_polynomial(poly))
        assert json.loads(text) == {"terms": [
            {"partition": [1, 1, 1], "ypow": 0, "coeff": "1"},
            {"partition": [2, 1], "ypow": 0, "coeff": "2"},
            {"partition": [3], "ypow": 0, "coeff": "1"},
        ]}
        assert PolynomialDocument.parse(text).to_polynomial() == poly

    def test_large_coefficients_are_strings(self):
        poly = PartitionPolynomial.from_counts({(2,): 10 ** 30})
        document = PolynomialDocument.from_polynomial(poly)
        assert document.terms[0].coeff == "1" + "0" * 30

    def test_digest_is_stable(self):
        first = PartitionPolynomial.from_counts({(2,): 1, (1, 1): 1})
        second = PartitionPolynomial.from_counts({(1, 1): 1, (2,): 1})
        assert polynomial_digest(first) == polynomial_digest(second)
        assert len(polynomial_digest(first)) == 64

    def test_bad_partition(self):
        document = PolynomialDocument.parse('{"terms": [{"partition": [0], "ypow": 0, "coeff": "1"}]}')
        with pytest.raises(MalformedPolynomialError):
            document.to_polynomial()

    def test_bad_coefficient(self):
        document = PolynomialDocument.parse('{"terms": [{"partition": [1], "ypow": 0, "coeff": "x"}]}')
        with pytest.raises(MalformedPolynomialError):
            document.to_polynomial()

    def test_malformed_json(self):
        with pytest.raises(MalformedPolynomialError):
            PolynomialDocument.parse("[]")


class TestCertificateDocument:
    def test_ascending_lists(self):
        certificate = PteCertificate(IntSequence((1, 2, 6)), IntSequence((0, 4, 5)), degree=2)
        assert to_json(CertificateDocument.from_certificate(certificate)) == (
            '{"a":[1,2,6],"b":[0,4,5],"degree":2,"verified":true}'
        )


class TestDot:
    def test_core_edges_bold(self, t_211):
        text = tree_to_dot(t_211)
        assert text.startswith("graph T {\n")
        assert text.endswith("}\n")
        assert '\t"0" [label="c"];' in text
        assert text.count("[style=bold]") == 2

    def test_weights_in_labels(self, t_211):
        contracted = TreeContractor.contract_to(WeightedTree.unit(t_211), t_211.core_edges)
        text = tree_to_dot(contracted.tree, name="S", weights=contracted.weights)
        assert text.startswith("graph S {")
        assert text.count(" -- ") == 2
        assert ':7"' in text

    def test_plain_tree(self):
        text = tree_to_dot(path_tree(2))
        assert text == 'graph T {\n\t"0";\n\t"1";\n\t"0" -- "1";\n}\n'


class TestNetworkxBridge:
    def test_round_trip(self, t_211):
        graph = tree_to_networkx(t_211)
        assert graph.number_of_nodes() == 15
        assert sum(1 for _, _, core in graph.edges(data="core") if core) == 2
        assert sorted(tree_from_networkx(graph).edges) == sorted(tuple(sorted(e)) for e in t_211.edges)

    def test_rejects_cycle(self):
        with pytest.raises(InvalidTreeError):
            tree_from_networkx(nx.cycle_graph(4))

    def test_random_tree_sizes(self, rng):
        for n in range(1, 20):
            tree = random_tree(n, rng)
            assert isinstance(tree, Tree)
            assert tree.vertex_count == n

    def test_random_tree_is_reproducible(self):
        assert random_tree(12, random.Random(7)) == random_tree(12, random.Random(7))

    def test_random_tree_rejects_zero(self, rng):
        with pytest.raises(InvalidTreeError):
            random_tree(0, rng)

    def test_random_subtree_is_connected(self, rng):
        for _ in range(50):
            tree = random_tree(rng.randint(1, 15), rng)
            edges = random_subtree_edges(tree, rng)
            TreeContractor.subtree_vertices(tree, edges)

    def test_random_graph(self, rng):
        graph = random_graph(6, 9, rng)
        assert graph.edge_count == 9
        assert all(1 <= w <= 3 for w in graph.weights)
