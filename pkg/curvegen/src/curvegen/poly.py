"""Polynomial arithmetic for the exporter.

Univariate polynomials over a Field are int lists, low degree first, no
trailing zeros.  Bivariate elements of the coordinate ring
F[x,y] / (curve) are lists of univariate polynomials indexed by y-degree,
kept reduced below deg_y(curve) via the monic-in-y curve polynomial.
"""

from __future__ import annotations


# -- univariate ------------------------------------------------------------


def ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def pdeg(c):
    return len(c) - 1


def padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = F.add(out[i], v)
    return ptrim(out)


def psub(F, a, b):
    return padd(F, a, pneg(F, b))


def pneg(F, a):
    return [F.neg(v) for v in a]


def pscale(F, a, c):
    if c == 0:
        return []
    return [F.mul(v, c) for v in a]


def pmul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return ptrim(out)


def pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = F.inv(b[-1])
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        if c:
            f = F.mul(c, inv)
            q[i - len(b) + 1] = f
            for j, v in enumerate(b):
                a[i - len(b) + 1 + j] = F.sub(a[i - len(b) + 1 + j], F.mul(f, v))
    return ptrim(q), ptrim(a[: len(b) - 1])


def pdiv_exact(F, a, b):
    q, r = pdivmod(F, a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def pgcd(F, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, pdivmod(F, a, b)[1]
    if a:
        a = pscale(F, a, F.inv(a[-1]))
    return a


def peval(F, a, x):
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


# -- bivariate coordinate ring --------------------------------------------


class Ring:
    """F[x, y] modulo a curve polynomial monic in y."""

    def __init__(self, F, curve):
        if not curve or not curve[-1] or pdeg(curve[-1]) != 0 or curve[-1][0] != 1:
            raise ValueError("curve polynomial must be monic in y")
        self.F = F
        self.curve = [list(c) for c in curve]
        self.dy = len(curve) - 1

    def zero(self):
        return [[] for _ in range(max(self.dy, 1))]

    def monomial(self, d, j):
        e = self.zero()
        e[j] = [0] * d + [1]
        return e

    def const(self, c):
        e = self.zero()
        if c:
            e[0] = [c]
        return e

    def add(self, a, b):
        return [padd(self.F, x, y) for x, y in zip(a, b)]

    def scale(self, a, c):
        return [pscale(self.F, p, c) for p in a]

    def reduce(self, coeffs):
        """Reduce a y-coefficient list below deg_y(curve)."""
        F = self.F
        coeffs = [list(p) for p in coeffs]
        for j in range(len(coeffs) - 1, self.dy - 1, -1):
            cj = coeffs[j]
            if cj:
                for l in range(self.dy + 1):
                    if self.curve[l]:
                        term = pmul(F, cj, pneg(F, self.curve[l]))
                        coeffs[j - self.dy + l] = padd(F, coeffs[j - self.dy + l], term)
                coeffs[j] = []
        out = coeffs[: self.dy] if self.dy else coeffs[:1]
        while len(out) < max(self.dy, 1):
            out.append([])
        return out

    def mul(self, a, b):
        F = self.F
        prod = [[] for _ in range(len(a) + len(b) - 1)]
        for i, pa in enumerate(a):
            if pa:
                for j, pb in enumerate(b):
                    if pb:
                        prod[i + j] = padd(F, prod[i + j], pmul(F, pa, pb))
        return self.reduce(prod)

    def is_zero(self, a):
        return not any(a)

    def eval_at(self, a, x0, y0):
        F = self.F
        acc = 0
        for p in reversed(a):
            acc = F.add(F.mul(acc, y0), peval(F, p, x0))
        return acc

    def curve_value(self, x0, y0):
        F = self.F
        acc = 0
        for p in reversed(self.curve):
            acc = F.add(F.mul(acc, y0), peval(F, p, x0))
        return acc

    def rational_points(self):
        """All affine points on the curve over F, ordered by int encoding."""
        pts = []
        for x0 in range(self.F.q):
            for y0 in range(self.F.q):
                if self.curve_value(x0, y0) == 0:
                    pts.append((x0, y0))
        return pts
