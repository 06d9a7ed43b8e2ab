"""Local expansions of the curve coordinates at places.

An affine place is a smooth point (x0, y0); whichever coordinate line is
transverse serves as the local parameter and the other coordinate is
solved by Newton iteration.  A place at infinity is described by a chart:
monomial substitutions X = u^a w^b, Y = u^c w^d under which the curve
becomes a polynomial g(u, w) with a smooth branch through the origin.
"""

from __future__ import annotations

from curvegen.poly import padd, pscale
from curvegen.series import Series, ring_series, solve_branch


def _taylor_shift(F, p, c):
    """Coefficients of p(c + t) from those of p(t)."""
    p = list(p)
    n = len(p)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            p[j] = F.add(p[j], F.mul(c, p[j + 1]))
    return p


def _curve_biv_at(ring, x0, y0):
    """The curve as {(i, j): coeff} in local offsets (X - x0, Y - y0)."""
    F = ring.F
    cols = [_taylor_shift(F, p, x0) for p in ring.curve]
    n = len(cols)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            cols[j] = padd(F, list(cols[j]), pscale(F, cols[j + 1], y0))
    g = {}
    for j, p in enumerate(cols):
        for i, v in enumerate(p):
            if v:
                g[(i, j)] = v
    return g


class AffinePlace:
    """A smooth affine point with local expansions of X and Y."""

    def __init__(self, ring, x0, y0, prec):
        F = ring.F
        if ring.curve_value(x0, y0) != 0:
            raise ValueError("point is not on the curve")
        self.x0, self.y0 = x0, y0
        g = _curve_biv_at(ring, x0, y0)
        if g.get((0, 1), 0):
            # dF/dY != 0: X - x0 is the local parameter
            w = solve_branch(F, g, prec)
            self.xs = Series(F, {0: x0, 1: 1}, prec)
            self.ys = Series.const(F, y0, prec) + w
        elif g.get((1, 0), 0):
            gsw = {(j, i): v for (i, j), v in g.items()}
            w = solve_branch(F, gsw, prec)
            self.ys = Series(F, {0: y0, 1: 1}, prec)
            self.xs = Series.const(F, x0, prec) + w
        else:
            raise ValueError(f"singular point ({x0}, {y0})")


class ChartPlace:
    """A place at infinity given by monomial substitutions in (u, w)."""

    def __init__(self, ring, xexp, yexp, prec):
        F = ring.F
        if ring.dy == 1:
            # rational curve: Y is determined by X, only the X chart matters
            if xexp[1]:
                raise ValueError("rational-curve chart must substitute X = u^a")
            from curvegen.poly import pneg
            from curvegen.series import poly_series

            us = Series.t(F, prec)
            self.xs = us.pow(xexp[0])
            self.ys = poly_series(F, pneg(F, ring.curve[0]), self.xs)
            return
        terms = {}
        for j, p in enumerate(ring.curve):
            for i, v in enumerate(p):
                if v:
                    eu = xexp[0] * i + yexp[0] * j
                    ew = xexp[1] * i + yexp[1] * j
                    terms[(eu, ew)] = F.add(terms.get((eu, ew), 0), v)
        terms = {k: v for k, v in terms.items() if v}
        mu = min(e for e, _ in terms)
        mw = min(e for _, e in terms)
        g = {(eu - mu, ew - mw): v for (eu, ew), v in terms.items()}
        if g.get((0, 0), 0):
            raise ValueError("chart origin is not on the curve")
        if g.get((0, 1), 0):
            us = Series.t(F, prec)
            ws = solve_branch(F, g, prec)
        elif g.get((1, 0), 0):
            ws = Series.t(F, prec)
            gs = {(j, i): v for (i, j), v in g.items()}
            us = solve_branch(F, gs, prec)
        else:
            raise ValueError("chart point is singular; no smooth branch variable")
        self.xs = us.pow(xexp[0]) * ws.pow(xexp[1])
        self.ys = us.pow(yexp[0]) * ws.pow(yexp[1])


def function_value(ring, place_cache, num, den, x0, y0, prec):
    """Value of num/den (coordinate-ring elements) at an affine point.

    Falls back to a local expansion when the denominator vanishes; the
    function must be regular there.
    """
    F = ring.F
    dv = ring.eval_at(den, x0, y0)
    if dv:
        return F.div(ring.eval_at(num, x0, y0), dv)
    key = (x0, y0)
    if key not in place_cache:
        place_cache[key] = AffinePlace(ring, x0, y0, prec)
    pl = place_cache[key]
    ns = ring_series(ring, num, pl.xs, pl.ys)
    if ns.is_zero():
        return 0
    ds = ring_series(ring, den, pl.xs, pl.ys)
    q = ns / ds
    if q.val() < 0:
        raise ValueError(f"function has a pole at evaluation point ({x0}, {y0})")
    return 0 if q.val() > 0 else q.coeff(0)
