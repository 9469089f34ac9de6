"""Exact polynomials with rational coefficients, plus Newton interpolation.

Coefficients are :class:`fractions.Fraction` stored in ascending degree; the
zero polynomial has an empty coefficient tuple and degree -1.  Everything is
exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x**i (0 beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def shifted(self, a) -> "Polynomial":
        """The polynomial x -> self(x + a)."""
        out = Polynomial()
        for c in reversed(self.coeffs):
            out = out * Polynomial([a, 1]) + Polynomial([c])
        return out

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def interpolate(points) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given (x, y) pairs.

    Newton divided differences over exact rationals; the x values must be
    pairwise distinct.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if not pts:
        raise ValueError("need at least one point")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    coef = [y for _, y in pts]
    for j in range(1, len(pts)):
        for i in range(len(pts) - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = Polynomial([coef[-1]])
    for i in range(len(pts) - 2, -1, -1):
        poly = poly * Polynomial([-xs[i], 1]) + Polynomial([coef[i]])
    return poly


def format_polynomial(poly: Polynomial, var: str = "n") -> str:
    """Render with integer coefficients over a common denominator.

    Examples: ``3n``, ``2n^2 - 4n + 2``, ``(9n^2 - 13n + 6)/2``.
    """
    if poly.degree < 0:
        return "0"
    den = lcm(*(c.denominator for c in poly.coeffs))
    ints = [int(c * den) for c in poly.coeffs]
    parts = []
    for e in range(poly.degree, -1, -1):
        c = ints[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            x = var if e == 1 else f"{var}^{e}"
            body = x if mag == 1 else f"{mag}{x}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    s = "".join(parts)
    if den == 1:
        return s
    return f"({s})/{den}"
