"""Exact spectral invariants of graphs.

Characteristic polynomials are computed over the integers (no floating
point anywhere in a decision path), so cospectrality checks are exact
equality of coefficient vectors.  The one numeric quantity that is not
an integer, the second-smallest Laplacian eigenvalue, is returned as a
rational enclosure certified by exact root counting; a floating-point
eigensolver is used only to propose the interval, never to decide it.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _exactpoly
from .graph import Graph

__all__ = [
    "IntPolynomial",
    "RationalInterval",
    "laplacian_matrix",
    "char_poly_adjacency",
    "char_poly_laplacian",
    "berkowitz_char_poly",
    "cospectral",
    "zero_root_multiplicity",
    "spectrum_symmetric",
    "second_smallest_laplacian_eigenvalue",
]


@dataclass(frozen=True)
class IntPolynomial:
    """An integer polynomial; ``coeffs[i]`` is the coefficient of x^i."""

    coeffs: tuple

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    def evaluate(self, x):
        """Horner evaluation; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def digest(self) -> str:
        """Stable content digest: sha256 over the decimal coefficient list."""
        text = ",".join(str(c) for c in self.coeffs)
        return hashlib.sha256(text.encode()).hexdigest()

    def __repr__(self):
        return f"IntPolynomial(degree={self.degree})"


@dataclass(frozen=True)
class RationalInterval:
    """A closed interval with rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __init__(self, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __repr__(self):
        return f"RationalInterval({self.lo}, {self.hi})"


def laplacian_matrix(g: Graph) -> np.ndarray:
    """The integer Laplacian D - A as an int64 array."""
    a = g.adj.astype(np.int64)
    return np.diag(a.sum(axis=1)) - a


@lru_cache(maxsize=64)
def char_poly_adjacency(g: Graph) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - A)."""
    return IntPolynomial(_exactpoly.charpoly(g.adj.astype(np.int64)))


@lru_cache(maxsize=64)
def char_poly_laplacian(g: Graph) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - (D - A))."""
    return IntPolynomial(_exactpoly.charpoly(laplacian_matrix(g)))


def berkowitz_char_poly(matrix) -> IntPolynomial:
    """Division-free characteristic polynomial of an integer matrix.

    An independent slow route (plain Python integers, no modular
    arithmetic); exists so the production path can be cross-checked.
    """
    return IntPolynomial(_exactpoly.berkowitz_charpoly(matrix))


def cospectral(g: Graph, h: Graph, matrix: str = "adjacency") -> bool:
    """Exact test: do g and h share the given matrix spectrum?"""
    if matrix == "adjacency":
        return char_poly_adjacency(g) == char_poly_adjacency(h)
    if matrix == "laplacian":
        return char_poly_laplacian(g) == char_poly_laplacian(h)
    raise ValueError(f"matrix must be 'adjacency' or 'laplacian', got {matrix!r}")


def zero_root_multiplicity(p: IntPolynomial) -> int:
    """Multiplicity of the root 0, i.e. the number of leading zero
    coefficients.  For a Laplacian char poly this is the component count."""
    k = 0
    while k < len(p.coeffs) and p.coeffs[k] == 0:
        k += 1
    if k == len(p.coeffs):
        raise ValueError("zero polynomial has no defined multiplicity")
    return k


def spectrum_symmetric(p: IntPolynomial) -> bool:
    """True when the root multiset of p is symmetric about 0.

    Equivalent to p(-x) == +/- p(x): every coefficient whose index has
    parity opposite to the degree must vanish.  For adjacency char polys
    of connected graphs this characterizes bipartiteness.
    """
    d = p.degree
    return all(
        c == 0 for i, c in enumerate(p.coeffs) if (d - i) % 2 == 1
    )


def second_smallest_laplacian_eigenvalue(
    g: Graph, tol: Fraction = Fraction(1, 1 << 20)
) -> RationalInterval:
    """A certified rational enclosure of the algebraic connectivity.

    The Laplacian char poly has the root 0; after deflating it once, the
    smallest remaining root is enclosed in an interval of width <= tol
    whose endpoints are dyadic rationals.  Membership is certified by
    exact Descartes root counts (valid because the polynomial is
    real-rooted), so floating point only suggests a candidate interval
    and a failed suggestion falls back to exact bisection.

    Disconnected graphs return the exact degenerate interval [0, 0].
    """
    if g.n < 2:
        raise ValueError("needs at least 2 vertices")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    p = char_poly_laplacian(g)
    q = list(p.coeffs[1:])  # deflate the guaranteed root at 0
    if q[0] == 0:
        return RationalInterval(0, 0)
    deg = g.n - 1

    def above(x: Fraction) -> int:
        # x must be dyadic; exact count of roots of q greater than x
        sb = x.denominator.bit_length() - 1
        return _exactpoly.count_roots_greater(q, x.numerator, sb)

    # dyadic grid fine enough that a 2-cell interval meets tol
    s = 1
    while Fraction(2, 1 << s) > tol:
        s += 1

    lap = laplacian_matrix(g).astype(float)
    seed = float(np.linalg.eigvalsh(lap)[1])
    a = math.floor(seed * (1 << s))
    lo = Fraction(max(a - 1, 0), 1 << s)
    hi = Fraction(a + 1, 1 << s)
    if above(lo) == deg and above(hi) < deg:
        return RationalInterval(lo, hi)

    # certified bisection; invariant: all deg roots exceed lo, some root <= hi
    lo, hi = Fraction(0), Fraction(g.n)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if above(mid) == deg:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)
