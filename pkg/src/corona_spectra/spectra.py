"""Product spectra: direct eigensolve versus the closed-form factorizations.

The direct path builds the product and calls a dense symmetric eigensolver.
The formula path never touches the product: it uses the factor spectra
(numeric), the exact coronal of the second factor, and solves one small
polynomial per eigenvalue of the first factor.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import EmptyGraph, NonSymmetric, NotRegular
from .graph import Graph, MatrixKind, matrix_of, regularity_and_components
from .poly import CoronalDecomposition, coronal_of, real_poly_roots, real_roots_exact
from .product import closed_neighborhood_corona

DEFAULT_TOL = 1e-8
GROUPING_TOL = 1e-7

# |1 + lambda| (or its signless analogue) below this is treated as an exact
# zero coupling; the factor then splits into F(y) * (y - a).
_ZERO_COUPLING = 1e-9


def comparison_tolerance() -> float:
    """Spectrum comparison tolerance, overridable through ``CORONA_SPECTRA_TOL``."""
    raw = os.environ.get("CORONA_SPECTRA_TOL")
    return float(raw) if raw else DEFAULT_TOL


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    grouping_tolerance: float = field(default=GROUPING_TOL)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted(float(v) for v in self.values)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def _close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.grouping_tolerance * (1 + abs(b))

    def multiplicity(self, value: float) -> int:
        return sum(1 for v in self.values if self._close(v, value))

    def groups(self) -> list[tuple[float, int]]:
        """Distinct values (group means) with their multiplicities."""
        out: list[list[float]] = []
        for v in self.values:
            if out and self._close(v, out[-1][0]):
                out[-1].append(v)
            else:
                out.append([v])
        return [(float(np.mean(g)), len(g)) for g in out]


def max_deviation(a: Spectrum, b: Spectrum) -> float:
    """Largest elementwise ``|a_k - b_k| / (1 + |b_k|)`` of two sorted spectra."""
    if len(a) != len(b):
        return float("inf")
    if not len(a):
        return 0.0
    x, y = a.as_array(), b.as_array()
    return float(np.max(np.abs(x - y) / (1 + np.abs(y))))


def symmetric_eigenvalues(m) -> Spectrum:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetric(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise NonSymmetric("matrix is not symmetric")
    return Spectrum(np.linalg.eigvalsh(a))


def graph_spectrum(g: Graph, kind: MatrixKind | str = MatrixKind.ADJACENCY) -> Spectrum:
    return symmetric_eigenvalues(matrix_of(g, kind))


def direct_spectrum(g1: Graph, g2: Graph, kind: MatrixKind | str) -> Spectrum:
    """Oracle path: eigensolve the constructed product."""
    return graph_spectrum(closed_neighborhood_corona(g1, g2), kind)


def _coupled_roots(dec: CoronalDecomposition, a: float, base: float) -> np.ndarray:
    """Roots in ``y`` of ``F(y) * (y - a) - base**2 * P(y)``."""
    if abs(base) <= _ZERO_COUPLING:
        return np.sort(np.append(real_roots_exact(dec.denominator), a))
    lhs = npoly.polymul(dec.denominator.as_float(), [-a, 1.0])
    poly = npoly.polysub(lhs, base * base * dec.numerator.as_float())
    return real_poly_roots(poly)


def _check_nonempty(g1: Graph, g2: Graph) -> None:
    if g1.order < 1 or g2.order < 1:
        raise EmptyGraph(f"factor orders must be >= 1, got {g1.order} and {g2.order}")


def _regular_degree(g: Graph) -> int:
    r, _ = regularity_and_components(g)
    if r is None:
        raise NotRegular("the first factor must be regular")
    return r


def adjacency_spectrum_formula(g1: Graph, g2: Graph) -> Spectrum:
    """Adjacency spectrum of ``G1 [x] G2`` from the factors.

    The cofactor roots of G2's coronal appear ``n1`` times each; every
    eigenvalue ``lam`` of G1 contributes the ``d + 1`` roots of
    ``F(x)(x - lam) - (1 + lam)**2 P(x)``.
    """
    _check_nonempty(g1, g2)
    dec = coronal_of(matrix_of(g2, MatrixKind.ADJACENCY))
    values = list(np.tile(real_roots_exact(dec.cofactor), g1.order))
    for lam in graph_spectrum(g1, MatrixKind.ADJACENCY):
        values.extend(_coupled_roots(dec, lam, 1 + lam))
    return Spectrum(values)


def laplacian_quadratic(r1: int, n2: int, gamma: float) -> np.ndarray:
    """Coefficients (low to high) of the per-eigenvalue Laplacian quadratic."""
    s = r1 + 1
    return np.array([gamma * s + n2 * gamma * (2 + 2 * r1 - gamma), -(s * (n2 + 1) + gamma), 1.0])


def laplacian_spectrum_formula(g1: Graph, g2: Graph) -> Spectrum:
    """Laplacian spectrum of ``G1 [x] G2`` for an ``r1``-regular G1.

    ``r1 + 1 + gamma`` for every Laplacian eigenvalue of G2 except the
    smallest (zero) one, each ``n1`` times, plus both roots of the quadratic
    attached to every Laplacian eigenvalue of G1.
    """
    _check_nonempty(g1, g2)
    r1 = _regular_degree(g1)
    n1, n2 = g1.order, g2.order
    gamma2 = graph_spectrum(g2, MatrixKind.LAPLACIAN).as_array()
    values = list(np.tile(r1 + 1 + gamma2[1:], n1))
    for gamma in graph_spectrum(g1, MatrixKind.LAPLACIAN):
        values.extend(real_poly_roots(laplacian_quadratic(r1, n2, gamma)))
    return Spectrum(values)


def signless_spectrum_formula(g1: Graph, g2: Graph) -> Spectrum:
    """Signless Laplacian spectrum of ``G1 [x] G2`` for an ``r1``-regular G1.

    Works from the exact signless coronal of G2 evaluated at ``x - (r1 + 1)``.
    """
    _check_nonempty(g1, g2)
    r1 = _regular_degree(g1)
    n1, n2 = g1.order, g2.order
    shift = r1 + 1
    dec = coronal_of(matrix_of(g2, MatrixKind.SIGNLESS))
    values = list(np.tile(shift + real_roots_exact(dec.cofactor), n1))
    for nu in graph_spectrum(g1, MatrixKind.SIGNLESS):
        a = n2 * shift + nu - shift
        values.extend(shift + _coupled_roots(dec, a, 1 - r1 + nu))
    return Spectrum(values)


_FORMULAS = {
    MatrixKind.ADJACENCY: adjacency_spectrum_formula,
    MatrixKind.LAPLACIAN: laplacian_spectrum_formula,
    MatrixKind.SIGNLESS: signless_spectrum_formula,
}


def formula_spectrum(g1: Graph, g2: Graph, kind: MatrixKind | str) -> Spectrum:
    return _FORMULAS[MatrixKind.parse(kind)](g1, g2)
