import itertools
import random

import networkx as nx
import numpy as np
import pytest

from corona_spectra.errors import EmptyGraph
from corona_spectra.graph import (
    Graph,
    build_graph,
    complete,
    cycle,
    empty,
    matrix_of,
    regularity_and_components,
)
from corona_spectra.product import ProductCounts, closed_neighborhood_corona, product_counts

from conftest import random_graph


def corona_by_definition(g1: Graph, g2: Graph) -> nx.Graph:
    """Product built from named vertices ('u', i) and ('v', i, j), no index arithmetic."""
    h = nx.Graph()
    h.add_nodes_from(("u", i) for i in range(g1.order))
    h.add_nodes_from(("v", i, j) for i in range(g1.order) for j in range(g2.order))
    nbr = {i: set() for i in range(g1.order)}
    for a, b in g1.edges:
        h.add_edge(("u", a), ("u", b))
        nbr[a].add(b)
        nbr[b].add(a)
    for i in range(g1.order):
        for a, b in g2.edges:
            h.add_edge(("v", i, a), ("v", i, b))
        for j in range(g2.order):
            for k in {i} | nbr[i]:
                h.add_edge(("v", i, j), ("u", k))
    return h


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


class TestExamples:
    def test_k2_k1(self):
        p = closed_neighborhood_corona(complete(2), complete(1))
        assert (p.order, p.size) == (4, 5)
        missing = set(itertools.combinations(range(4), 2)) - set(p.edges)
        assert missing == {(2, 3)}

    def test_c4_c3(self):
        p = closed_neighborhood_corona(cycle(4), cycle(3))
        assert (p.order, p.size) == (16, 52)
        assert product_counts(cycle(4), cycle(3)) == ProductCounts(16, 52)

    def test_k1_k3_is_k4(self):
        assert closed_neighborhood_corona(complete(1), complete(3)) == complete(4)

    def test_counts_examples(self):
        assert product_counts(complete(2), complete(1)) == ProductCounts(4, 5)
        assert product_counts(complete(1), complete(1)) == ProductCounts(2, 1)

    def test_empty_factor(self):
        with pytest.raises(EmptyGraph):
            closed_neighborhood_corona(Graph(0), complete(2))
        with pytest.raises(EmptyGraph):
            product_counts(complete(2), Graph(0))

    def test_isolated_vertices_in_g1(self):
        p = closed_neighborhood_corona(empty(3), complete(2))
        assert p.size == 3 * (1 + 2)


def test_counts_on_random_pairs():
    rng = random.Random(1)
    for _ in range(300):
        g1 = random_graph(rng, rng.randint(1, 8))
        g2 = random_graph(rng, rng.randint(1, 6))
        p = closed_neighborhood_corona(g1, g2)
        c = product_counts(g1, g2)
        assert (c.vertices, c.edges) == (p.order, p.size)


def test_matches_definition_exactly(rng):
    for _ in range(60):
        g1 = random_graph(rng, rng.randint(1, 6))
        g2 = random_graph(rng, rng.randint(1, 4))
        n1 = g1.order
        label = {("u", i): i for i in range(n1)}
        label.update({("v", i, j): n1 + j * n1 + i for i in range(n1) for j in range(g2.order)})
        ref = nx.relabel_nodes(corona_by_definition(g1, g2), label)
        got = closed_neighborhood_corona(g1, g2)
        assert sorted(tuple(sorted(e)) for e in ref.edges()) == list(got.edges)


def test_kronecker_block_structure(rng):
    for _ in range(50):
        g1 = random_graph(rng, rng.randint(1, 6))
        g2 = random_graph(rng, rng.randint(1, 5))
        n1, n2 = g1.order, g2.order
        a1, a2 = matrix_of(g1, "adjacency"), matrix_of(g2, "adjacency")
        b = np.identity(n1, dtype=int) + a1
        ones = np.ones((n2, 1), dtype=int)
        expected = np.block([[a1, np.kron(ones.T, b)],
                             [np.kron(ones, b), np.kron(a2, np.identity(n1, dtype=int))]])
        got = matrix_of(closed_neighborhood_corona(g1, g2), "adjacency")
        assert np.array_equal(got, expected)


def test_degrees(rng):
    for _ in range(50):
        g1 = random_graph(rng, rng.randint(1, 7))
        g2 = random_graph(rng, rng.randint(1, 5))
        n1, n2 = g1.order, g2.order
        d1, d2 = g1.degrees(), g2.degrees()
        deg = closed_neighborhood_corona(g1, g2).degrees()
        for i in range(n1):
            assert deg[i] == (n2 + 1) * d1[i] + n2
            for j in range(n2):
                assert deg[n1 + j * n1 + i] == d2[j] + d1[i] + 1


def test_connected_iff_first_factor_connected(rng):
    for _ in range(100):
        g1 = random_graph(rng, rng.randint(1, 7), rng.random() * 0.6)
        g2 = random_graph(rng, rng.randint(1, 4))
        _, c1 = regularity_and_components(g1)
        _, cp = regularity_and_components(closed_neighborhood_corona(g1, g2))
        assert (c1 == 1) == (cp == 1)
        assert cp == c1


def test_iterated_product_composes():
    g = closed_neighborhood_corona(closed_neighborhood_corona(complete(2), complete(1)), complete(1))
    c = product_counts(build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]), complete(1))
    assert (g.order, g.size) == (c.vertices, c.edges)
