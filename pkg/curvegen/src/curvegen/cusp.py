"""Export engine for a wildly ramified place at infinity.

No smooth chart exists at such a place, so nothing is ever expanded in a
local parameter at Q.  The engine relies on two facts:

- For h regular outside the unique infinite place Q, the pole order of h
  at Q equals dim_F A/hA (A the coordinate ring), which is the degree of
  the determinant of the multiplication matrix of h on the free
  F[x]-basis {y^j}.  Weak Popov column reduction reads off that degree
  as the sum of the pivot degrees.

- A free F[x]-module basis whose pole orders are pairwise distinct mod
  gamma is automatically an Apery basis (no cancellation of leading
  terms is possible), and such a basis is reached greedily: while two
  elements share a residue, some h_i + c x^k h_j drops the pole order.

Rbar is handled through the numerator module M = den * Rbar inside A,
whose basis is found by footprint elimination against the vanishing
conditions that membership in M imposes at the affine zeros of den.
"""

from __future__ import annotations

import heapq

from curvegen.engine import ExportError, _elem_to_json, _poly_to_json
from curvegen.places import AffinePlace, function_value
from curvegen.poly import padd, pdeg, pmul, pscale, ptrim
from curvegen.series import ring_series


def _pivot(col):
    """(degree, row) of the pivot of a polynomial column; ties take the
    larger row so that pivot rows are well defined."""
    best = None
    for r, p in enumerate(col):
        if p:
            d = pdeg(p)
            if best is None or d >= best[0]:
                best = (d, r)
    return best


def degdet(F, cols):
    """deg det of a square polynomial matrix given as columns of rows."""
    cols = [[list(p) for p in col] for col in cols]
    piv = [_pivot(c) for c in cols]
    if any(p is None for p in piv):
        raise ExportError("multiplication matrix is singular")
    while True:
        byrow = {}
        clash = None
        for ci, (_, r) in enumerate(piv):
            if r in byrow:
                clash = (byrow[r], ci)
                break
            byrow[r] = ci
        if clash is None:
            break
        c1, c2 = clash
        if piv[c1][0] < piv[c2][0]:
            c1, c2 = c2, c1
        d1, r = piv[c1]
        d2, _ = piv[c2]
        f = F.neg(F.div(cols[c1][r][-1], cols[c2][r][-1]))
        k = d1 - d2
        for l in range(len(cols[c1])):
            term = [0] * k + pscale(F, cols[c2][l], f)
            cols[c1][l] = padd(F, list(cols[c1][l]), term)
        piv[c1] = _pivot(cols[c1])
        if piv[c1] is None:
            raise ExportError("multiplication matrix is singular")
    return sum(d for d, _ in piv)


def _xshift(elem, k):
    """x^k * elem; pure shift, no curve reduction needed."""
    return [([0] * k + list(p) if p else []) for p in elem]


class CuspEngine:
    def __init__(self, job):
        self.job = job
        self.F = job.field
        self.ring = job.ring
        self.gamma = job.gamma
        if job.other_charts:
            raise ExportError("the cusp must be the unique place at infinity")
        if job.x_den is not None or job.x_num != self.ring.monomial(1, 0):
            raise ExportError("the cusp engine requires x to be the coordinate x")

    # -- pole order oracle ---------------------------------------------

    def pole(self, h):
        ring = self.ring
        if ring.is_zero(h):
            raise ExportError("pole order of zero")
        cols = [h]
        ym = ring.monomial(0, 1)
        for _ in range(ring.dy - 1):
            cols.append(ring.mul(cols[-1], ym))
        return degdet(self.F, cols)

    # -- Apery reduction -----------------------------------------------

    def _apery_reduce(self, basis, poles, on_step=None):
        F, g = self.F, self.gamma
        guard = 0
        while True:
            byres = {}
            clash = None
            for i, p in enumerate(poles):
                r = p % g
                if r in byres:
                    clash = (byres[r], i)
                    break
                byres[r] = i
            if clash is None:
                return
            i, j = clash
            if poles[i] < poles[j]:
                i, j = j, i
            k = (poles[i] - poles[j]) // g
            shifted = _xshift(basis[j], k)
            for c in range(1, F.q):
                cand = self.ring.add(basis[i], self.ring.scale(shifted, c))
                if self.ring.is_zero(cand):
                    continue
                pc = self.pole(cand)
                if pc < poles[i]:
                    basis[i] = cand
                    poles[i] = pc
                    if on_step is not None:
                        on_step(i, j, k, c)
                    break
            else:
                raise ExportError("Apery reduction found no pole-dropping combination")
            guard += 1
            if guard > 100 * g:
                raise ExportError("Apery reduction does not terminate")

    # -- numerator module of Rbar --------------------------------------

    def _conditions(self, den_e):
        ring = self.ring
        mults = {(x0, y0): m for x0, y0, m in self.job.finite_g}
        places = dict(mults)
        for x0, y0 in ring.rational_points():
            if ring.eval_at(den_e, x0, y0) == 0:
                places.setdefault((x0, y0), 0)
        conds = []
        for (x0, y0), _ in sorted(places.items()):
            pl = AffinePlace(ring, x0, y0, self.prec)
            vden = ring_series(ring, den_e, pl.xs, pl.ys).val()
            c = vden - mults.get((x0, y0), 0)
            if c > 0:
                conds.append((pl, c))
        return conds

    def _module_basis(self, conds, pole_y):
        """Footprint elimination: the minimal monic x^d y^j combinations
        satisfying every vanishing condition, one per y-degree."""
        ring, F, g = self.ring, self.F, self.gamma
        dim = sum(c for _, c in conds)
        xpow = [{0: pl.xs.pow(0)} for pl, _ in conds]
        ypow = [{0: pl.xs.pow(0)} for pl, _ in conds]

        def coords(d, j):
            out = []
            for t, (pl, c) in enumerate(conds):
                xc, yc = xpow[t], ypow[t]
                for e in range(max(xc) + 1, d + 1):
                    xc[e] = xc[e - 1] * pl.xs
                for e in range(max(yc) + 1, j + 1):
                    yc[e] = yc[e - 1] * pl.ys
                s = xc[d] * yc[j]
                out.extend(s.coeff(e) for e in range(c))
            return out

        echelon = []  # (pivot_pos, vec, elem) with vec[pivot] = 1
        gb = [None] * ring.dy
        dlead = [None] * ring.dy
        heap = [(pole_y * j, j, 0, j) for j in range(ring.dy)]
        heapq.heapify(heap)
        staircase = 0
        while any(e is None for e in gb):
            if not heap:
                raise ExportError("monomial enumeration exhausted")
            key, _, d, j = heapq.heappop(heap)
            if gb[j] is not None:
                continue
            heapq.heappush(heap, (key + self.gamma, j, d + 1, j))
            if d > dim + ring.dy:
                raise ExportError("footprint elimination does not close")
            vec = coords(d, j)
            elem = self.ring.monomial(d, j)
            for pos, evec, eelem in echelon:
                f = vec[pos]
                if f:
                    nf = F.neg(f)
                    vec = [F.add(a, F.mul(nf, b)) for a, b in zip(vec, evec)]
                    elem = ring.add(elem, ring.scale(eelem, nf))
            pos = next((t for t, v in enumerate(vec) if v), None)
            if pos is None:
                gb[j] = elem
                dlead[j] = d
            else:
                inv = F.inv(vec[pos])
                vec = [F.mul(v, inv) for v in vec]
                elem = ring.scale(elem, inv)
                echelon.append((pos, vec, elem))
                staircase += 1
        if staircase > dim:
            raise ExportError("independent conditions exceed the condition count")
        return gb, dlead, staircase

    def _divide(self, P, gb, dlead, pole_y):
        """Exact division of P by the footprint basis; returns the
        quotient polynomials q_j with P = sum q_j * gb_j."""
        ring, F, g = self.ring, self.F, self.gamma
        q = [[] for _ in range(ring.dy)]
        work = [list(p) for p in P]
        while any(work):
            best = None
            for j in range(ring.dy):
                if work[j]:
                    key = (g * pdeg(work[j]) + pole_y * j, j)
                    if best is None or key > best[0]:
                        best = (key, j)
            j = best[1]
            d = pdeg(work[j])
            if dlead[j] is None or d < dlead[j]:
                raise ExportError("product lies outside the numerator module")
            f = work[j][-1]
            k = d - dlead[j]
            if len(q[j]) <= k:
                q[j].extend([0] * (k + 1 - len(q[j])))
            q[j][k] = F.add(q[j][k], f)
            sub = _xshift(ring.scale(gb[j], F.neg(f)), k)
            work = [padd(F, a, b) for a, b in zip(work, sub)]
        return [ptrim(p) for p in q]

    # -- driver --------------------------------------------------------

    def run(self):
        job, F, ring, g = self.job, self.F, self.ring, self.gamma
        self.prec = job.prec
        degG = job.nQ + sum(m for _, _, m in job.finite_g)

        if self.pole(ring.monomial(1, 0)) != g:
            raise ExportError("pole order of x does not match gamma")
        pole_y = self.pole(ring.monomial(0, 1))

        # R: start from the free basis {y^j} and reduce to the Apery basis
        rbasis = [ring.monomial(0, j) for j in range(ring.dy)]
        rpoles = [0] + [self.pole(b) for b in rbasis[1:]]
        self._apery_reduce(rbasis, rpoles)
        order = sorted(range(g), key=lambda t: rpoles[t] % g)
        a = [rpoles[t] for t in order]
        y_elems = [rbasis[t] for t in order]
        if a[0] != 0:
            raise ExportError(f"a_0 = {a[0]}, expected 0")
        y_elems[0] = ring.const(1)
        if sum(a[i] - i for i in range(g)) != g * job.genus:
            raise ExportError("Apery set of R does not match the stated genus")

        # M = den * Rbar: footprint basis, then Apery reduction tracking
        # the inverse transform (gb in terms of the final basis)
        if job.den is not None:
            elem, power = job.den
            den_e = ring.const(1)
            for _ in range(power):
                den_e = ring.mul(den_e, elem)
            pole_den = self.pole(den_e)
        else:
            den_e = ring.const(1)
            pole_den = 0

        conds = self._conditions(den_e)
        gb, dlead, _ = self._module_basis(conds, pole_y)
        bbasis = [list(map(list, e)) for e in gb]
        bpoles = [self.pole(e) for e in bbasis]
        cmat = [
            [([1] if r == l else []) for l in range(ring.dy)] for r in range(ring.dy)
        ]

        def on_step(i, j, k, c):
            nc = F.neg(c)
            for r in range(ring.dy):
                term = [0] * k + pscale(F, cmat[r][i], nc)
                cmat[r][j] = padd(F, cmat[r][j], term)

        self._apery_reduce(bbasis, bpoles, on_step)
        deltas = [p - pole_den - job.nQ for p in bpoles]
        order = sorted(range(g), key=lambda t: deltas[t] % g)
        b = [deltas[t] for t in order]
        ybar_elems = [bbasis[t] for t in order]
        cmat = [[row[t] for t in order] for row in cmat]

        k_dim = sum(-bi // g + 1 for bi in b if bi <= 0)
        if 2 * job.genus - 1 <= degG and k_dim != degG - job.genus + 1:
            raise ExportError(
                f"dimension {k_dim} != degG - g + 1 = {degG - job.genus + 1}"
            )

        table = []
        for i in range(g):
            row = []
            for m in range(g):
                prod = ring.mul(y_elems[i], ybar_elems[m])
                q = self._divide(prod, gb, dlead, pole_y)
                entry = [[] for _ in range(g)]
                for j in range(ring.dy):
                    if q[j]:
                        for l in range(g):
                            if cmat[j][l]:
                                entry[l] = padd(F, entry[l], pmul(F, q[j], cmat[j][l]))
                lead = max(
                    (g * pdeg(p) + b[l] for l, p in enumerate(entry) if p),
                    default=None,
                )
                if lead != a[i] + b[m]:
                    raise ExportError(
                        f"table[{i}][{m}] leading weight {lead} != {a[i] + b[m]}"
                    )
                row.append(entry)
            table.append(row)

        points = job.resolve_points()
        one = ring.const(1)
        cache = {}
        ev_x = [
            function_value(ring, cache, job.x_num, one, x0, y0, self.prec)
            for x0, y0 in points
        ]
        ev_y = [
            [function_value(ring, cache, ye, one, x0, y0, self.prec) for x0, y0 in points]
            for ye in y_elems
        ]
        ev_ybar = [
            [function_value(ring, cache, yb, den_e, x0, y0, self.prec) for x0, y0 in points]
            for yb in ybar_elems
        ]

        return {
            "field": F.to_json(),
            "n": len(points),
            "genus": job.genus,
            "gamma": g,
            "degG": degG,
            "a": a,
            "b": b,
            "ev_x": [_elem_to_json(F, v) for v in ev_x],
            "ev_y": [[_elem_to_json(F, v) for v in row] for row in ev_y],
            "ev_ybar": [[_elem_to_json(F, v) for v in row] for row in ev_ybar],
            "table": [
                [[_poly_to_json(F, p) for p in entry] for entry in row] for row in table
            ],
        }
