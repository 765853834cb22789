"""Closed neighborhood corona product and its closed-form counts."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyGraph
from .graph import Graph, build_graph


@dataclass(frozen=True)
class ProductCounts:
    vertices: int
    edges: int


def _check_factors(g1: Graph, g2: Graph) -> None:
    if g1.order < 1 or g2.order < 1:
        raise EmptyGraph(f"factor orders must be >= 1, got {g1.order} and {g2.order}")


def copy_vertex(n1: int, i: int, j: int) -> int:
    """Index of the copy of G2-vertex ``j`` attached to G1-vertex ``i``.

    Copies are grouped by G2 vertex, so block ``j`` holds ``v_j`` for every
    ``i`` and the product matrices take the Kronecker form ``X (x) I_{n1}``.
    """
    return n1 + j * n1 + i


def closed_neighborhood_corona(g1: Graph, g2: Graph) -> Graph:
    """G1 with a copy of G2 per vertex ``u_i``, joined to ``u_i`` and to ``N(u_i)``.

    Vertex ``i < n1`` is ``u_i``; the rest follow :func:`copy_vertex`.
    """
    _check_factors(g1, g2)
    n1, n2 = g1.order, g2.order
    nbrs = g1.neighbors()
    edges = list(g1.edges)
    for i in range(n1):
        closed = [i] + nbrs[i]
        for a, b in g2.edges:
            edges.append((copy_vertex(n1, i, a), copy_vertex(n1, i, b)))
        for j in range(n2):
            v = copy_vertex(n1, i, j)
            edges.extend((u, v) for u in closed)
    return build_graph(n1 * (1 + n2), edges)


def product_counts(g1: Graph, g2: Graph) -> ProductCounts:
    _check_factors(g1, g2)
    n1, e1, n2, e2 = g1.order, g1.size, g2.order, g2.size
    return ProductCounts(n1 * (1 + n2), e1 + n1 * e2 + 2 * e1 * n2 + n1 * n2)
