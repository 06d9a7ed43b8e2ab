"""Export engines computing canonical curve data from a curve job.

The chart engine handles curves whose infinite places are smooth in some
monomial chart: it expands ambient monomials as Laurent series at the
places in supp(G) and at Q, imposes the pole/vanishing conditions of G by
row reduction, and reads off the Apery bases y_i (of R, the functions
regular outside Q) and ybar_i (of Rbar, with poles allowed on G) from the
pivot exponents at Q.  Reduced row echelon form with the Q-exponent
columns ordered increasingly makes the basis canonical: each basis
element is the unique representative with no coefficient at any other
achievable leading exponent.

The cusp engine handles a wildly ramified place at infinity, where no
single smooth chart exists.  It never expands series at Q; instead the
pole order of h (the degree of the zero divisor of h) is computed as
deg det of the multiplication matrix of h on the free F[x]-module basis
{y^j}, via weak Popov column reduction.  Apery bases are reached by
greedy reduction: while two basis elements share a pole order residue
mod gamma, some combination h_i + c x^k h_j has strictly smaller pole.
"""

from __future__ import annotations

from curvegen.linalg import rref
from curvegen.places import AffinePlace, ChartPlace, function_value
from curvegen.poly import padd, pdeg, pmul, pscale, ptrim
from curvegen.series import ring_series


class ExportError(Exception):
    pass


def _elem_to_json(F, v):
    return F.digits(v)


def _poly_to_json(F, p):
    return [F.digits(c) for c in p]


def export(job):
    """Run the appropriate engine and return the curve-data JSON object."""
    if job.cusp:
        from curvegen.cusp import CuspEngine

        eng = CuspEngine(job)
    else:
        eng = ChartEngine(job)
    return eng.run()


# -- chart engine ----------------------------------------------------------


class ChartEngine:
    def __init__(self, job):
        self.job = job
        self.F = job.field
        self.ring = job.ring
        self.prec = job.prec
        self.gamma = job.gamma
        self.Q = ChartPlace(self.ring, job.q_chart[0], job.q_chart[1], self.prec)
        self.others = [
            ChartPlace(self.ring, ch[0], ch[1], self.prec) for ch in job.other_charts
        ]
        self.monos = [
            (d, j) for j in range(max(self.ring.dy, 1)) for d in range(job.ambient_xdeg + 1)
        ]
        self.xq = self._func_series(self.Q, job.x_num, job.x_den)
        if self.xq.val() != -self.gamma:
            raise ExportError(
                f"x has pole order {-self.xq.val()} at Q, expected gamma = {self.gamma}"
            )
        self.place_cache = {}

    def _func_series(self, place, num, den):
        ns = ring_series(self.ring, num, place.xs, place.ys)
        if den is None:
            return ns
        return ns / ring_series(self.ring, den, place.xs, place.ys)

    def _mono_series(self, place):
        """Series of every ambient monomial x^d y^j at a place."""
        F = self.ring.F
        xp = {0: place.xs.pow(0)}
        yp = {0: place.xs.pow(0)}
        out = {}
        for d, j in self.monos:
            if d not in xp:
                xp[d] = xp[d - 1] * place.xs
            if j not in yp:
                yp[j] = yp[j - 1] * place.ys
            out[(d, j)] = xp[d] * yp[j]
        return out

    def _den_elem(self):
        if self.job.den is None:
            return None
        elem, power = self.job.den
        out = self.ring.const(1)
        for _ in range(power):
            out = self.ring.mul(out, elem)
        return out

    def _condition_places(self, den_e):
        """(AffinePlace, c_P) pairs: h must vanish to order c_P at P."""
        ring, F = self.ring, self.F
        mults = {(x0, y0): m for x0, y0, m in self.job.finite_g}
        places = dict(mults)
        if den_e is not None:
            for x0, y0 in ring.rational_points():
                if ring.eval_at(den_e, x0, y0) == 0:
                    places.setdefault((x0, y0), 0)
        conds = []
        fin_zero_sum = 0
        for (x0, y0), _ in sorted(places.items()):
            pl = AffinePlace(ring, x0, y0, self.prec)
            vden = 0
            if den_e is not None:
                ds = ring_series(ring, den_e, pl.xs, pl.ys)
                vden = ds.val()
                fin_zero_sum += vden
            c = vden - mults.get((x0, y0), 0)
            if c > 0:
                conds.append((pl, c))
        if den_e is not None:
            inf_pole = -ring_series(ring, den_e, self.Q.xs, self.Q.ys).val()
            for pl in self.others:
                inf_pole -= ring_series(ring, den_e, pl.xs, pl.ys).val()
            if fin_zero_sum != inf_pole:
                raise ExportError(
                    "denominator has zeros at non-rational places; "
                    f"found {fin_zero_sum} of {inf_pole}"
                )
        return conds

    def _eliminate(self, nQ, other_mults, conds, den_e, e_hi):
        """Row-reduce the ambient span against the divisor conditions.

        Returns {class: (value, element, lead_exp)} keeping the maximal
        Q-exponent (minimal delta) per residue class, where value is
        -lead_exp - nQ.
        """
        ring, F = self.ring, self.F
        rows_coords = [[] for _ in self.monos]

        for pl, c in conds:
            ms = self._mono_series(pl)
            for r, key in enumerate(self.monos):
                s = ms[key]
                rows_coords[r].extend(s.coeff(e) for e in range(c))

        def ratio_block(place):
            ms = self._mono_series(place)
            if den_e is not None:
                invd = ring_series(ring, den_e, place.xs, place.ys).inverse()
                ratios = [ms[key] * invd for key in self.monos]
            else:
                ratios = [ms[key] for key in self.monos]
            lo = min(s.val() for s in ratios)
            return ratios, lo

        for pl, mult in zip(self.others, other_mults):
            ratios, lo = ratio_block(pl)
            hi = -mult
            for r, s in enumerate(ratios):
                rows_coords[r].extend(s.coeff(e) for e in range(lo, hi))

        qratios, qlo = ratio_block(self.Q)
        q_exps = list(range(qlo, e_hi))
        for r, s in enumerate(qratios):
            rows_coords[r].extend(s.coeff(e) for e in q_exps)

        ncons = len(rows_coords[0])
        nq = len(q_exps)
        rows = [
            coords + [1 if t == r else 0 for t in range(len(self.monos))]
            for r, coords in enumerate(rows_coords)
        ]
        A, pivots = rref(F, rows, ncons)

        best = {}
        qstart = ncons - nq
        for col, r in pivots.items():
            if col < qstart:
                continue
            e = q_exps[col - qstart]
            value = -e - nQ
            cls = value % self.gamma
            if cls not in best or value < best[cls][0]:
                combo = A[r, ncons:]
                elem = ring.zero()
                for t, (d, j) in enumerate(self.monos):
                    c = int(combo[t])
                    if c:
                        ej = elem[j]
                        if len(ej) <= d:
                            ej.extend([0] * (d + 1 - len(ej)))
                        ej[d] = F.add(ej[d], c)
                elem = [ptrim(p) for p in elem]
                best[cls] = (value, elem, e)
        if len(best) != self.gamma:
            raise ExportError(
                f"found only residue classes {sorted(best)}; increase ambient_xdeg"
            )
        return best

    def _table(self, y_elems, ybar_elems, ybar_exps, den_e):
        """table[i][m][j]: y_i * ybar_m on the ybar basis, by greedy series
        reduction at Q against the leading exponents of x^k ybar_j."""
        ring, F, g = self.ring, self.F, self.gamma
        invd = None
        if den_e is not None:
            invd = ring_series(ring, den_e, self.Q.xs, self.Q.ys).inverse()

        def at_q(elem, with_den):
            s = ring_series(ring, elem, self.Q.xs, self.Q.ys)
            return s * invd if (with_den and invd is not None) else s

        ybar_ser = [at_q(ybar_elems[j], True) for j in range(g)]
        lc = [ybar_ser[j].lead()[1] for j in range(g)]
        cls_of = {ybar_exps[j] % g: j for j in range(g)}
        if len(cls_of) != g:
            raise ExportError("ybar leading exponents collide mod gamma")
        emax = max(ybar_exps)
        lcx = self.xq.lead()[1]
        xpow = {0: self.xq.pow(0)}

        def reduce_series(fs):
            entry = [[] for _ in range(g)]
            while not fs.is_zero():
                v, c = fs.lead()
                j = cls_of.get(v % g)
                if j is None:
                    raise ExportError(f"unreachable leading exponent {v} in product")
                k = (ybar_exps[j] - v) // g
                if k < 0:
                    raise ExportError("product falls outside the ybar module")
                for e in range(max(xpow) + 1, k + 1):
                    xpow[e] = xpow[e - 1] * self.xq
                factor = F.div(c, F.mul(F.pow(lcx, k), lc[j]))
                if len(entry[j]) <= k:
                    entry[j].extend([0] * (k + 1 - len(entry[j])))
                entry[j][k] = F.add(entry[j][k], factor)
                fs = fs - (xpow[k] * ybar_ser[j]).scale(factor)
            if fs.prec <= emax:
                raise ExportError("insufficient series precision for the table")
            return [ptrim(p) for p in entry]

        table = []
        for i in range(g):
            row = []
            for m in range(g):
                prod = ring.mul(y_elems[i], ybar_elems[m])
                row.append(reduce_series(at_q(prod, True)))
            table.append(row)
        return table

    def run(self):
        job, F, ring, g = self.job, self.F, self.ring, self.gamma
        den_e = self._den_elem()
        degG = job.nQ + sum(job.other_mults) + sum(m for _, _, m in job.finite_g)

        # R = functions with poles only at Q: trivial divisor, no denominator
        rbest = self._eliminate(0, [0] * len(self.others), [], None, 1)
        a = [rbest[i][0] for i in range(g)]
        y_elems = [rbest[i][1] for i in range(g)]
        if a[0] != 0:
            raise ExportError(f"a_0 = {a[0]}, expected 0")
        y_elems[0] = ring.const(1)
        if sum(a[i] - i for i in range(g)) != g * job.genus:
            raise ExportError("Apery set of R does not match the stated genus")

        conds = self._condition_places(den_e)
        e_hi = degG - job.nQ + 1
        bbest = self._eliminate(job.nQ, job.other_mults, conds, den_e, e_hi)
        b = [bbest[i][0] for i in range(g)]
        ybar_elems = [bbest[i][1] for i in range(g)]
        ybar_exps = [bbest[i][2] for i in range(g)]

        k = sum(-bi // g + 1 for bi in b if bi <= 0)
        if 2 * job.genus - 1 <= degG and k != degG - job.genus + 1:
            raise ExportError(
                f"dimension {k} != degG - g + 1 = {degG - job.genus + 1}; "
                "increase ambient_xdeg"
            )

        table = self._table(y_elems, ybar_elems, ybar_exps, den_e)

        points = job.resolve_points()
        one = ring.const(1)
        cache = self.place_cache
        ev_x = [
            function_value(ring, cache, job.x_num, job.x_den or one, x0, y0, self.prec)
            for x0, y0 in points
        ]
        ev_y = [
            [function_value(ring, cache, ye, one, x0, y0, self.prec) for x0, y0 in points]
            for ye in y_elems
        ]
        ev_ybar = [
            [
                function_value(ring, cache, yb, den_e or one, x0, y0, self.prec)
                for x0, y0 in points
            ]
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
