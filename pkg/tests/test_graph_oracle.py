import math
from itertools import combinations

import pytest

from epos.efun import EFunction
from epos.graph_oracle import (
    Graph,
    csf_subset_expansion,
    parse_graph_file,
    path_graph,
    spider_graph,
)


def complete_graph(n):
    return Graph(n, tuple(combinations(range(n), 2)))


def chromatic_polynomial(n, edges, k):
    """Deletion-contraction oracle."""
    if not edges:
        return k ** n
    (u, v), rest = edges[0], edges[1:]
    deleted = chromatic_polynomial(n, rest, k)
    relabel = {x: (x if x < v else u if x == v else x - 1) for x in range(n)}
    contracted = set()
    for a, b in rest:
        a2, b2 = relabel[a], relabel[b]
        if a2 != b2:
            contracted.add((min(a2, b2), max(a2, b2)))
    return deleted - chromatic_polynomial(n - 1, tuple(sorted(contracted)), k)


def evaluate_at_k_ones(f: EFunction, k: int) -> int:
    """Specialize x1 = ... = xk = 1, rest 0: each e_r becomes C(k, r)."""
    total = 0
    for partition, coeff in f.items():
        total += coeff * math.prod(math.comb(k, part) for part in partition)
    return total


class TestConstructors:
    def test_path(self):
        g = path_graph(3)
        assert g.vertex_count == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_star(self):
        g = spider_graph([1, 1, 1])
        assert g.vertex_count == 4
        assert len(g.edges) == 3
        degree = {v: 0 for v in range(4)}
        for u, v in g.edges:
            degree[u] += 1
            degree[v] += 1
        assert sorted(degree.values()) == [1, 1, 1, 3]

    def test_spider_621(self):
        g = spider_graph([6, 2, 1])
        assert g.vertex_count == 10
        assert len(g.edges) == 9
        degree = {v: 0 for v in range(10)}
        for u, v in g.edges:
            degree[u] += 1
            degree[v] += 1
        assert sorted(degree.values()).count(3) == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            spider_graph([])
        with pytest.raises(ValueError):
            spider_graph([2, 0])
        with pytest.raises(ValueError):
            path_graph(0)
        with pytest.raises(ValueError):
            Graph(2, ((0, 0),))
        with pytest.raises(ValueError):
            Graph(2, ((0, 2),))
        with pytest.raises(ValueError):
            Graph(3, ((0, 1), (1, 0)))


class TestSubsetExpansion:
    def test_single_vertex(self):
        assert csf_subset_expansion(Graph(1, ())) == EFunction({(1,): 1})

    def test_k2(self):
        assert csf_subset_expansion(complete_graph(2)) == EFunction({(2,): 2})

    @pytest.mark.parametrize("n", range(1, 7))
    def test_complete_graph_factorial(self, n):
        expected = EFunction({(n,): math.factorial(n)})
        assert csf_subset_expansion(complete_graph(n)) == expected

    def test_path3(self):
        assert csf_subset_expansion(path_graph(3)) == EFunction({(3,): 3, (2, 1): 1})

    def test_budget(self):
        with pytest.raises(ValueError):
            csf_subset_expansion(path_graph(6), budget=3)

    def test_workers_equivalence(self):
        g = spider_graph([3, 2, 2])
        assert csf_subset_expansion(g, workers=1) == csf_subset_expansion(g, workers=3)

    @pytest.mark.parametrize("graph", [
        path_graph(5),
        spider_graph([3, 2, 1]),
        spider_graph([2, 2, 2]),
        complete_graph(4),
        Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))),
    ])
    def test_chromatic_polynomial_specialization(self, graph):
        f = csf_subset_expansion(graph)
        for k in range(5):
            expected = chromatic_polynomial(graph.vertex_count, graph.edges, k)
            assert evaluate_at_k_ones(f, k) == expected


class TestGraphFile:
    def test_parse(self):
        g = parse_graph_file("3\n0 1\n1 2\n")
        assert g == path_graph(3)

    def test_parse_tolerates_blank_lines(self):
        g = parse_graph_file("2\n\n0 1\n\n")
        assert g.edges == ((0, 1),)

    def test_malformed(self):
        with pytest.raises(ValueError):
            parse_graph_file("")
        with pytest.raises(ValueError):
            parse_graph_file("two\n0 1")
        with pytest.raises(ValueError):
            parse_graph_file("3\n0 1 2")
