"""Exact integer polynomials, reduced rational functions and root extraction.

Characteristic polynomials and coronals are kept over the integers so that
cospectrality and integrality are decided exactly. Floating point only
enters in :func:`real_poly_roots`, which the spectral formulas use to solve
their per-eigenvalue factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import (
    ComplexRoots,
    DegenerateLeadingCoefficient,
    NonSquare,
    ZeroDenominator,
    ZeroPolynomial,
)


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, lowest power first.

    The zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(a // c for a in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction or float arguments."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * a for i, a in enumerate(self.coeffs) if i)

    def as_float(self) -> np.ndarray:
        return np.array([float(a) for a in self.coeffs], dtype=float)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            a = self.coeffs[power]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if power == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if power == 1 else f"x^{power}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


# ----------------------------------------------------------------------
# division and gcd

def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of ``a`` by ``b`` up to a nonzero integer factor, over the integers."""
    if b.is_zero():
        raise ZeroDenominator("pseudo-division by zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        top = r[-1]
        r = [x * lb for x in r]
        for i, bi in enumerate(b.coeffs):
            r[i + shift] -= top * bi
        while r and r[-1] == 0:
            r.pop()
    return IntPoly(r)


def exact_divide(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient ``a / b`` when it is an integer polynomial; raises otherwise."""
    if b.is_zero():
        raise ZeroDenominator("division by zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    q = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        top, rem = divmod(r[-1], lb)
        if rem:
            raise ValueError(f"{b} does not divide {a} over the integers")
        q[shift] = top
        for i, bi in enumerate(b.coeffs):
            r[i + shift] -= top * bi
        while r and r[-1] == 0:
            r.pop()
    if r:
        raise ValueError(f"{b} does not divide {a}")
    return IntPoly(q)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    a, b = a.primitive(), b.primitive()
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive()
    return a.primitive()


@dataclass(frozen=True)
class RationalFn:
    """Reduced quotient of integer polynomials.

    Canonical form: numerator and denominator coprime, no common integer
    content, denominator leading coefficient positive. Equal rational
    functions therefore have equal field values.
    """

    numerator: IntPoly
    denominator: IntPoly

    def __call__(self, x):
        return self.numerator(x) / self.denominator(x)

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def reduce_rational_fn(num: IntPoly, den: IntPoly) -> RationalFn:
    if den.is_zero():
        raise ZeroDenominator("rational function with zero denominator")
    if num.is_zero():
        return RationalFn(IntPoly(), IntPoly((1,)))
    g = poly_gcd(num, den)
    n, d = exact_divide(num, g), exact_divide(den, g)
    c = math.gcd(n.content(), d.content())
    if d.lc < 0:
        c = -c
    return RationalFn(IntPoly(a // c for a in n.coeffs), IntPoly(a // c for a in d.coeffs))


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Primitive squarefree factors ``(s_k, k)`` with ``p`` ~ prod ``s_k**k``.

    Equality holds up to an integer constant. Uses the iterated gcd chain
    ``P_i = gcd(P_{i-1}, P_{i-1}')``; every quotient stays integral because
    the divisors are primitive.
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of zero")
    chain = [p.primitive()]
    while chain[-1].degree > 0:
        chain.append(poly_gcd(chain[-1], chain[-1].derivative()))
    # q[i] collects the factors of multiplicity > i
    q = [exact_divide(chain[i], chain[i + 1]).primitive() for i in range(len(chain) - 1)]
    q.append(IntPoly((1,)))
    out = []
    for i in range(len(q) - 1):
        s = exact_divide(q[i], q[i + 1]).primitive()
        if s.degree > 0:
            out.append((s, i + 1))
    return out


# ----------------------------------------------------------------------
# matrices

def _as_int_matrix(m) -> np.ndarray:
    a = np.array(m, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise NonSquare(f"expected a non-empty square matrix, got shape {a.shape}")
    return np.vectorize(int, otypes=[object])(a)


def charpoly_and_adjugate_sum(m) -> tuple[IntPoly, IntPoly]:
    """Exact ``det(xI - m)`` and ``1^T adj(xI - m) 1`` by Faddeev-LeVerrier.

    With ``M_1 = I`` and ``M_k = m M_{k-1} + c_{n-k+1} I`` the coefficients
    are ``c_{n-k} = -tr(m M_k) / k`` (an exact integer division), and
    ``adj(xI - m) = sum_k M_k x^{n-k}``.
    """
    a = _as_int_matrix(m)
    n = a.shape[0]
    eye = np.identity(n, dtype=int).astype(object)
    c = [0] * (n + 1)
    c[n] = 1
    adj_sum = [0] * n
    mk = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        mk = a.dot(mk) + c[n - k + 1] * eye
        adj_sum[n - k] = int(mk.sum())
        trace = int(a.dot(mk).trace())
        q, r = divmod(-trace, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact for integer matrices"
        c[n - k] = q
    return IntPoly(c), IntPoly(adj_sum)


def bareiss_determinant(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in _as_int_matrix(m)]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class CoronalDecomposition:
    """Coronal ``1^T (xI - M)^{-1} 1 = numerator / denominator`` in lowest terms.

    ``cofactor`` is the monic gcd of the adjugate sum and the characteristic
    polynomial, so ``charpoly == cofactor * denominator`` holds exactly and
    ``d`` is the degree of the reduced denominator.
    """

    numerator: IntPoly
    denominator: IntPoly
    cofactor: IntPoly
    d: int
    charpoly: IntPoly
    adjugate_sum: IntPoly

    @property
    def coronal(self) -> RationalFn:
        return reduce_rational_fn(self.numerator, self.denominator)


def coronal_of(m) -> CoronalDecomposition:
    f, p = charpoly_and_adjugate_sum(m)
    g = poly_gcd(p, f)
    # f is monic, so its primitive divisor g is monic as well
    assert g.lc == 1
    num, den = exact_divide(p, g), exact_divide(f, g)
    return CoronalDecomposition(num, den, g, den.degree, f, p)


# ----------------------------------------------------------------------
# roots

def _iroot_ceil(x: int, k: int) -> int:
    """Smallest integer r >= 0 with r**k >= x."""
    if x <= 0:
        return 0
    lo, hi = 0, 1 << (-(-x.bit_length() // k))
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def root_bound(p: IntPoly) -> int:
    """Integer Fujiwara bound on the modulus of every complex root of ``p``."""
    n, an = p.degree, abs(p.lc)
    best = 0
    for k in range(1, n + 1):
        a = abs(p.coeffs[n - k])
        if k == n:
            a = -(-a // 2)
        if a:
            best = max(best, _iroot_ceil(-(-a // an), k))
    return 2 * best


def integer_roots(p: IntPoly) -> tuple[list[int], bool]:
    """All integer roots with multiplicity, and whether they exhaust ``p``.

    Candidates are the divisors of the lowest nonzero coefficient that lie
    inside the Fujiwara bound; each is confirmed by exact deflation.
    """
    if p.is_zero():
        raise ZeroPolynomial("integer roots of the zero polynomial")
    coeffs = list(p.coeffs)
    roots: list[int] = []
    while coeffs[0] == 0:
        coeffs.pop(0)
        roots.append(0)
    rest = IntPoly(coeffs)
    if rest.degree > 0:
        a0 = abs(rest.coeffs[0])
        bound = min(root_bound(rest), a0)
        for k in range(1, bound + 1):
            if a0 % k:
                continue
            for r in (k, -k):
                while rest.degree > 0 and rest(r) == 0:
                    rest = exact_divide(rest, IntPoly((-r, 1)))
                    roots.append(r)
            if rest.degree <= 0:
                break
    roots.sort()
    return roots, rest.degree == 0


def real_poly_roots(coeffs: Sequence[float]) -> np.ndarray:
    """Real roots of a real-rooted polynomial (coefficients lowest power first).

    Roots come from the companion-matrix eigenvalues. A root whose imaginary
    part is within ``1e-8 * (1 + |root|)`` is projected onto the real line;
    anything larger raises :class:`ComplexRoots`.
    """
    c = np.asarray(coeffs, dtype=float)
    if c.size == 0 or not np.any(c):
        raise ZeroPolynomial("roots of the zero polynomial")
    scale = np.max(np.abs(c))
    if abs(c[-1]) <= 1e-12 * scale:
        raise DegenerateLeadingCoefficient(f"leading coefficient {c[-1]!r} vs max {scale!r}")
    if c.size == 1:
        return np.empty(0)
    z = npoly.polyroots(c)
    z = np.array([_polish(c, r) for r in z])
    bad = np.abs(z.imag) > 1e-8 * (1 + np.abs(z))
    if np.any(bad):
        raise ComplexRoots(f"non-real roots {z[bad]!r}")
    return np.sort(z.real)


def _polish(c: np.ndarray, r: complex, steps: int = 3) -> complex:
    # Newton steps that are only kept while the residual shrinks
    dc = npoly.polyder(c)
    best, best_res = r, abs(npoly.polyval(r, c))
    for _ in range(steps):
        d = npoly.polyval(best, dc)
        if d == 0:
            break
        cand = best - npoly.polyval(best, c) / d
        res = abs(npoly.polyval(cand, c))
        if res >= best_res:
            break
        best, best_res = cand, res
    return best


def real_roots_exact(p: IntPoly) -> np.ndarray:
    """Real roots of an integer polynomial with multiplicity.

    Repeated factors are separated exactly first, so the numeric solve only
    ever sees squarefree input.
    """
    out: list[float] = []
    for factor, mult in squarefree_decomposition(p):
        out.extend(np.repeat(real_poly_roots(factor.as_float()), mult))
    return np.sort(np.asarray(out, dtype=float))
