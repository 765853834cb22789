"""Graph invariants of corona products: closed forms and direct oracles.

Each closed form works from the two factors only; the matching ``*_direct``
function works on an explicitly constructed graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConclusionFailed, Disconnected, HypothesisViolated, NotRegular, RoundingGuardViolated
from .graph import Graph, MatrixKind, matrix_of, regularity_and_components
from .poly import (
    IntPoly,
    charpoly_and_adjugate_sum,
    bareiss_determinant,
    coronal_of,
    exact_divide,
    integer_roots,
)
from .product import closed_neighborhood_corona
from .spectra import graph_spectrum

ENERGY_TOL = 1e-8
KIRCHHOFF_TOL = 1e-8


@dataclass(frozen=True)
class InvariantReport:
    name: str
    formula_value: float | int
    oracle_value: float | int
    relative_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.relative_deviation <= self.tolerance


def compare_invariant(name: str, formula, oracle, tolerance: float) -> InvariantReport:
    if isinstance(formula, int) and isinstance(oracle, int):
        dev = 0.0 if formula == oracle else float("inf")
    else:
        dev = abs(formula - oracle) / max(1.0, abs(oracle))
    return InvariantReport(name, formula, oracle, dev, tolerance)


def _regular_connected(g1: Graph) -> int:
    r1, components = regularity_and_components(g1)
    if r1 is None:
        raise NotRegular("the first factor must be regular")
    if components != 1:
        raise Disconnected(f"the first factor has {components} components")
    return r1


# ----------------------------------------------------------------------
# Kirchhoff index

def kirchhoff_direct(g: Graph) -> float:
    """``n * sum(1 / mu)`` over the nonzero Laplacian eigenvalues."""
    if regularity_and_components(g)[1] != 1:
        raise Disconnected("Kirchhoff index needs a connected graph")
    mu = graph_spectrum(g, MatrixKind.LAPLACIAN).as_array()
    return float(g.order * np.sum(1.0 / mu[1:]))


def kirchhoff_formula(g1: Graph, g2: Graph) -> float:
    """Kirchhoff index of ``G1 [x] G2`` for regular connected G1.

    The zero Laplacian eigenvalue of G1 yields the roots ``0`` and
    ``(r1 + 1)(n2 + 1)``; only the nonzero one enters the reciprocal sum,
    which replaces the singular ``gamma = 0`` term.
    """
    r1 = _regular_connected(g1)
    n1, n2 = g1.order, g2.order
    s = r1 + 1
    gamma2 = graph_spectrum(g2, MatrixKind.LAPLACIAN).as_array()
    gamma1 = graph_spectrum(g1, MatrixKind.LAPLACIAN).as_array()
    copies = float(np.sum(n1 / (gamma2[1:] + s)))
    base = 1.0 / (s * (n2 + 1))
    for g in gamma1[1:]:
        base += (s * (n2 + 1) + g) / (g * s + g * n2 * (2 + 2 * r1 - g))
    return n1 * (n2 + 1) * (copies + base)


# ----------------------------------------------------------------------
# spanning trees

def spanning_trees_direct(g: Graph) -> int:
    """Matrix-Tree theorem: determinant of the Laplacian with row/column 0 removed."""
    if g.order == 0:
        return 0
    if g.order == 1:
        return 1
    lap = matrix_of(g, MatrixKind.LAPLACIAN)
    return bareiss_determinant(lap[1:, 1:])


def _nonzero_laplacian_factor(g: Graph) -> IntPoly:
    """``det(xI - L) / x``: its roots are the Laplacian eigenvalues after the first zero."""
    f, _ = charpoly_and_adjugate_sum(matrix_of(g, MatrixKind.LAPLACIAN))
    return exact_divide(f, IntPoly.x())


def spanning_trees_formula(g1: Graph, g2: Graph) -> int:
    """Spanning-tree count of ``G1 [x] G2`` for regular connected G1.

    ``t = (r1+1)/n1 * prod_{i>=2}(r1+1+gamma_2i)**n1
    * prod_{i>=2} gamma_1i * ((r1+1) + n2 (2 + 2 r1 - gamma_1i))``.

    The eigenvalue products are symmetric functions of the factor Laplacian
    spectra, so they are evaluated exactly from the factor characteristic
    polynomials. A float evaluation from the numeric eigenvalues must land
    within ``1e-6 * max(1, t)`` of that exact integer.
    """
    r1 = _regular_connected(g1)
    n1, n2 = g1.order, g2.order
    s = r1 + 1
    rest1, rest2 = _nonzero_laplacian_factor(g1), _nonzero_laplacian_factor(g2)

    # prod (s + gamma) = (-1)^deg R(-s);  prod gamma = (-1)^deg R(0)
    copies = (-1) ** rest2.degree * rest2(-s)
    prod_gamma = (-1) ** rest1.degree * rest1(0)
    c = s * (1 + 2 * n2)
    # prod (c - n2 gamma) = n2^deg * R(c / n2)
    prod_linear = n2 ** rest1.degree * rest1(Fraction(c, n2))
    exact = Fraction(s, n1) * copies ** n1 * prod_gamma * prod_linear

    gamma1 = graph_spectrum(g1, MatrixKind.LAPLACIAN).as_array()[1:]
    gamma2 = graph_spectrum(g2, MatrixKind.LAPLACIAN).as_array()[1:]
    numeric = s / n1 * float(np.prod(s + gamma2)) ** n1
    numeric *= float(np.prod(gamma1 * s + n2 * gamma1 * (2 + 2 * r1 - gamma1)))

    if exact.denominator != 1:
        raise RoundingGuardViolated(f"closed form evaluates to non-integer {exact}")
    t = int(exact)
    if abs(numeric - t) > 1e-6 * max(1.0, abs(numeric)):
        raise RoundingGuardViolated(f"numeric value {numeric!r} is not within guard of {t}")
    return t


# ----------------------------------------------------------------------
# energy, cospectrality, coronals, integrality

def graph_energy(g: Graph) -> float:
    if g.order == 0:
        return 0.0
    return float(np.sum(np.abs(graph_spectrum(g, MatrixKind.ADJACENCY).as_array())))


def charpoly(g: Graph, kind: MatrixKind | str = MatrixKind.ADJACENCY) -> IntPoly:
    return charpoly_and_adjugate_sum(matrix_of(g, kind))[0]


def check_cospectral(ga: Graph, gb: Graph, kind: MatrixKind | str = MatrixKind.ADJACENCY) -> bool:
    if ga.order != gb.order:
        return False
    return charpoly(ga, kind) == charpoly(gb, kind)


def coronals_equal(ga: Graph, gb: Graph, kind: MatrixKind | str = MatrixKind.ADJACENCY) -> bool:
    ca = coronal_of(matrix_of(ga, kind)).coronal
    cb = coronal_of(matrix_of(gb, kind)).coronal
    return ca == cb


def check_integral(g: Graph) -> tuple[bool, list[int]]:
    """Exact integrality test: does the adjacency charpoly split over the integers?"""
    if g.order == 0:
        return True, []
    roots, split = integer_roots(charpoly(g))
    return split, roots


def integral_product_diagnostic(g1: Graph, g2: Graph) -> dict:
    """Integrality of ``G1 [x] G2`` split into the pieces of its factorization.

    ``cofactor_split`` covers the roots shared by all copies of G2;
    ``factors_split`` covers the product of the per-eigenvalue factors of
    G1, obtained exactly as ``charpoly / cofactor**n1``. The product is
    integral iff both hold. ``criterion`` is the factor-level statement
    "G2 integral and all per-eigenvalue factors integer-rooted".
    """
    prod = closed_neighborhood_corona(g1, g2)
    f_prod = charpoly(prod)
    dec = coronal_of(matrix_of(g2, MatrixKind.ADJACENCY))
    factors = exact_divide(f_prod, dec.cofactor ** g1.order)
    g2_integral, _ = check_integral(g2)
    _, cofactor_split = integer_roots(dec.cofactor)
    _, factors_split = integer_roots(factors)
    _, product_integral = integer_roots(f_prod)
    return {
        "product_integral": product_integral,
        "g2_integral": g2_integral,
        "cofactor_split": cofactor_split,
        "factors_split": factors_split,
        "criterion": g2_integral and factors_split,
    }


# ----------------------------------------------------------------------
# equienergetic pairs

@dataclass(frozen=True)
class EquienergeticPair:
    product_a: Graph
    product_b: Graph
    energy_a: float
    energy_b: float
    charpoly_a: IntPoly
    charpoly_b: IntPoly


def energies_equal(ea: float, eb: float) -> bool:
    return abs(ea - eb) <= ENERGY_TOL * (1 + ea)


def equienergetic_product_pair(g: Graph, g1: Graph, g2: Graph) -> EquienergeticPair:
    """Build ``G [x] G1`` and ``G [x] G2`` after checking every hypothesis.

    G1 and G2 must share order and adjacency coronal, have different
    characteristic polynomials and equal energy. The resulting products are
    re-checked for equal energy and unequal characteristic polynomials.
    """
    if g1.order != g2.order:
        raise HypothesisViolated("same_order", {"order_1": g1.order, "order_2": g2.order})
    if not coronals_equal(g1, g2):
        ca = coronal_of(matrix_of(g1, MatrixKind.ADJACENCY)).coronal
        cb = coronal_of(matrix_of(g2, MatrixKind.ADJACENCY)).coronal
        raise HypothesisViolated("equal_coronals", {"coronal_1": str(ca), "coronal_2": str(cb)})
    if check_cospectral(g1, g2):
        raise HypothesisViolated("non_cospectral", {"charpoly": str(charpoly(g1))})
    e1, e2 = graph_energy(g1), graph_energy(g2)
    if not energies_equal(e1, e2):
        raise HypothesisViolated("equienergetic", {"energy_1": e1, "energy_2": e2})

    pa, pb = closed_neighborhood_corona(g, g1), closed_neighborhood_corona(g, g2)
    ea, eb = graph_energy(pa), graph_energy(pb)
    fa, fb = charpoly(pa), charpoly(pb)
    if not energies_equal(ea, eb):
        raise ConclusionFailed(f"product energies differ: {ea!r} vs {eb!r}")
    if fa == fb:
        raise ConclusionFailed("products are cospectral")
    return EquienergeticPair(pa, pb, ea, eb, fa, fb)


def is_near_integral(g: Graph, tol: float = 1e-6) -> bool:
    """Numeric integrality test used to cross-check :func:`check_integral`."""
    lam = graph_spectrum(g).as_array()
    return bool(np.all(np.abs(lam - np.round(lam)) <= tol))

