"""Polynomials over a finite field and rows of the interpolation module.

A polynomial in F[x] is a plain list of field-element ints, low degree
first, with no trailing zeros; the empty list is the zero polynomial.
All operations take the field F explicitly and return normalized lists.

A ModuleRow holds an element f*z + g of the rank-2*gamma free module over
F[x]: ``u`` collects the coefficients of f on the basis y_j*z and ``w``
the coefficients of g on the basis ybar_j.  The weighted order >_s gives
the monomial x^k y_i z weight gamma*k + a_i + s and the monomial
x^k ybar_i weight gamma*k + b_i; on equal weight the z-monomial wins.
"""

from __future__ import annotations

from dataclasses import dataclass


def ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def pdeg(c):
    """Degree; -1 for the zero polynomial."""
    return len(c) - 1


def plc(c):
    if not c:
        raise ValueError("leading coefficient of the zero polynomial")
    return c[-1]


def coeff_at(c, k):
    """Coefficient of x^k (zero beyond the degree)."""
    if k < 0:
        raise ValueError("negative exponent")
    return c[k] if k < len(c) else 0


def padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = F.add(out[i], v)
    return ptrim(out)


def pneg(F, a):
    return [F.neg(v) for v in a]


def pscale(F, a, c):
    if c == 0:
        return []
    if c == 1:
        return list(a)
    mul = F.mul
    return [mul(v, c) for v in a]


def pshift(a, k):
    """Multiply by x^k (k >= 0)."""
    if not a:
        return []
    return [0] * k + list(a)


def pmul(F, a, b):
    if not a or not b:
        return []
    add, mul = F.add, F.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return ptrim(out)


def paxpy(F, dst, src, c, k):
    """dst + c * x^k * src."""
    if c == 0 or not src:
        return list(dst)
    out = list(dst)
    need = k + len(src)
    if len(out) < need:
        out.extend([0] * (need - len(out)))
    add, mul = F.add, F.mul
    if c == 1:
        for i, v in enumerate(src):
            if v:
                out[k + i] = add(out[k + i], v)
    else:
        for i, v in enumerate(src):
            if v:
                out[k + i] = add(out[k + i], mul(v, c))
    return ptrim(out)


def peval(F, a, x):
    """Horner evaluation at a field element."""
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


@dataclass
class ModuleRow:
    """One element of Rz + Rbar as two gamma-vectors of polynomials."""

    u: list  # coefficients of y_j z, j = 0 .. gamma-1
    w: list  # coefficients of ybar_j

    def copy(self):
        return ModuleRow([list(p) for p in self.u], [list(p) for p in self.w])

    def is_zero(self):
        return not any(self.u) and not any(self.w)

    def max_degree(self):
        return max((pdeg(p) for p in self.u + self.w if p), default=-1)

    @staticmethod
    def zero(gamma):
        return ModuleRow([[] for _ in range(gamma)], [[] for _ in range(gamma)])


@dataclass
class LeadingTerm:
    has_z: bool
    col: int  # index into {y_i z} or {ybar_i}, depending on has_z
    xdeg: int
    coeff: int  # nonzero field element
    sdeg: int  # weight of the term under >_s


def row_leading(row, s, code):
    """Leading term of a nonzero row under >_s.

    Weights within the u-part (and within the w-part) are pairwise
    distinct because a_i = i = b_i (mod gamma), so the maximum on each
    side is unique; the tie between the two sides goes to the z-side.
    """
    gamma = code.gamma
    best_u = None  # (sdeg, col, xdeg)
    for i in range(gamma):
        p = row.u[i]
        if p:
            d = pdeg(p)
            wdeg = gamma * d + code.a[i] + s
            if best_u is None or wdeg > best_u[0]:
                best_u = (wdeg, i, d)
    best_w = None
    for i in range(gamma):
        p = row.w[i]
        if p:
            d = pdeg(p)
            wdeg = gamma * d + code.b[i]
            if best_w is None or wdeg > best_w[0]:
                best_w = (wdeg, i, d)
    if best_u is None and best_w is None:
        raise ValueError("leading term of a zero row")
    if best_w is None or (best_u is not None and best_u[0] >= best_w[0]):
        wdeg, i, d = best_u
        return LeadingTerm(True, i, d, plc(row.u[i]), wdeg)
    wdeg, i, d = best_w
    return LeadingTerm(False, i, d, plc(row.w[i]), wdeg)


def row_axpy(F, dst, src, scalar, xshift):
    """dst + scalar * x^xshift * src, componentwise on both parts."""
    if len(dst.u) != len(src.u):
        raise ValueError("rows of different rank")
    return ModuleRow(
        [paxpy(F, d, s, scalar, xshift) for d, s in zip(dst.u, src.u)],
        [paxpy(F, d, s, scalar, xshift) for d, s in zip(dst.w, src.w)],
    )
