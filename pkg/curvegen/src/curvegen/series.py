"""Truncated Laurent series over a finite field.

A Series holds finitely many (exponent, coefficient) pairs plus a
precision bound: exponents >= prec are unknown.  This is enough to expand
curve coordinates in a local parameter, compute valuations of function
combinations, and drive the greedy basis reductions in the engine.
"""

from __future__ import annotations


class Series:
    __slots__ = ("F", "c", "prec")

    def __init__(self, F, coeffs=None, prec=None):
        self.F = F
        self.c = {e: v for e, v in (coeffs or {}).items() if v}
        self.prec = prec if prec is not None else 10**9
        for e in [e for e in self.c if e >= self.prec]:
            del self.c[e]

    @classmethod
    def zero(cls, F, prec=None):
        return cls(F, {}, prec)

    @classmethod
    def const(cls, F, v, prec=None):
        return cls(F, {0: v}, prec)

    @classmethod
    def t(cls, F, prec=None):
        return cls(F, {1: 1}, prec)

    def is_zero(self):
        return not self.c

    def val(self):
        """Valuation; prec for an (apparently) zero series."""
        return min(self.c) if self.c else self.prec

    def coeff(self, e):
        if e >= self.prec:
            raise ValueError(f"coefficient at {e} beyond precision {self.prec}")
        return self.c.get(e, 0)

    def lead(self):
        v = self.val()
        return v, self.c[v]

    def __add__(self, o):
        F = self.F
        prec = min(self.prec, o.prec)
        c = dict(self.c)
        for e, v in o.c.items():
            s = F.add(c.get(e, 0), v)
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return Series(F, c, prec)

    def neg(self):
        F = self.F
        return Series(F, {e: F.neg(v) for e, v in self.c.items()}, self.prec)

    def __sub__(self, o):
        return self + o.neg()

    def scale(self, k):
        if k == 0:
            return Series(self.F, {}, self.prec)
        F = self.F
        return Series(F, {e: F.mul(v, k) for e, v in self.c.items()}, self.prec)

    def shift(self, n):
        """Multiply by t^n."""
        return Series(self.F, {e + n: v for e, v in self.c.items()}, self.prec + n)

    def __mul__(self, o):
        F = self.F
        va, vb = self.val(), o.val()
        prec = min(self.prec + vb, o.prec + va)
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in o.c.items():
                e = e1 + e2
                if e < prec:
                    s = F.add(c.get(e, 0), F.mul(v1, v2))
                    if s:
                        c[e] = s
                    else:
                        c.pop(e, None)
        return Series(F, c, prec)

    def inverse(self):
        if not self.c:
            raise ZeroDivisionError("inverse of zero series")
        F = self.F
        v = self.val()
        nterms = self.prec - v
        u = [0] * nterms
        for e, cv in self.c.items():
            u[e - v] = cv
        b = [0] * nterms
        b[0] = F.inv(u[0])
        for n in range(1, nterms):
            s = 0
            for i in range(1, n + 1):
                if u[i] and b[n - i]:
                    s = F.add(s, F.mul(u[i], b[n - i]))
            b[n] = F.neg(F.mul(b[0], s))
        return Series(F, {i - v: cv for i, cv in enumerate(b) if cv}, nterms - v)

    def __truediv__(self, o):
        return self * o.inverse()

    def pow(self, k):
        if k < 0:
            return self.inverse().pow(-k)
        out = Series.const(self.F, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def truncate(self, prec):
        return Series(self.F, {e: v for e, v in self.c.items() if e < prec}, min(self.prec, prec))

    def __repr__(self):
        terms = " + ".join(f"{v}*t^{e}" for e, v in sorted(self.c.items())[:8])
        return f"Series({terms or 0}; O(t^{self.prec}))"


def poly_series(F, p, xs):
    """Evaluate a univariate polynomial (int list) at a Series."""
    acc = Series.zero(F, xs.prec if p else 10**9)
    for c in reversed(p):
        acc = acc * xs + Series.const(F, c)
    return acc


def ring_series(ring, h, xs, ys):
    """Evaluate a coordinate-ring element at coordinate Series (xs, ys)."""
    F = ring.F
    acc = Series.zero(F)
    for p in reversed(h):
        acc = acc * ys + poly_series(F, p, xs)
    return acc


# -- bivariate solving -----------------------------------------------------


def biv_eval(F, g, us, ws):
    """Evaluate a dict {(i, j): coeff} at Series (us, ws)."""
    upow = {}
    wpow = {}

    def pw(cache, s, k):
        if k not in cache:
            cache[k] = s.pow(k)
        return cache[k]

    acc = Series.zero(F)
    for (i, j), v in g.items():
        if v:
            acc = acc + pw(upow, us, i) * pw(wpow, ws, j).scale(v)
    return acc


def biv_dw(F, g):
    """Formal partial derivative with respect to the second variable."""
    out = {}
    for (i, j), v in g.items():
        c = j % F.p
        if c:
            cv = 0
            for _ in range(c):
                cv = F.add(cv, v)
            out[(i, j - 1)] = F.add(out.get((i, j - 1), 0), cv)
    return out


def solve_branch(F, g, prec):
    """Solve g(t, w) = 0 for w(t) with w(0) = 0 by Newton iteration.

    Requires g(0,0) = 0 and dg/dw(0,0) != 0.
    """
    if g.get((0, 0), 0):
        raise ValueError("branch point is not on the curve")
    gw = biv_dw(F, g)
    if not gw.get((0, 0), 0):
        raise ValueError("branch is not smooth in the chosen variable")
    ts = Series.t(F, prec)
    w = Series.zero(F, prec)
    for _ in range(prec.bit_length() + 2):
        num = biv_eval(F, g, ts, w).truncate(prec)
        if num.is_zero():
            break
        den = biv_eval(F, gw, ts, w).truncate(prec)
        w = (w - num / den).truncate(prec)
    return w
