"""Per-code precomputation: kernel basis, Lagrange basis, nu-table, d_LO.

Everything here is a pure function of a CodeData and is computed once per
code; decoding a received word then only takes linear combinations of the
precomputed vectors.

The kernel basis eta_i of J = ker(ev) is found by ordered Gaussian
elimination over evaluation vectors: monomials x^k ybar_j are enumerated
in increasing delta-weight, and the first dependent monomial in each
ybar-column yields the kernel element with that leading monomial.  The
independent monomials collected along the way form the footprint (exactly
n of them), whose inverted evaluation matrix gives the Lagrange basis.
"""

from __future__ import annotations

import hashlib
import json
import warnings
from dataclasses import dataclass

from agcode.codedata import CodeData, CodeDataError
from agcode.polyring import padd, pdeg, pscale, ptrim


def _rbar_axpy(F, dst, src, c, k=0):
    """dst + c * x^k * src for gamma-vectors of polynomials."""
    out = []
    for d, s in zip(dst, src):
        if c == 0 or not s:
            out.append(list(d))
        else:
            out.append(padd(F, d, [0] * k + pscale(F, s, c)))
    return out


def compute_eta(code):
    """Kernel Groebner basis and footprint monomials.

    Returns (eta, footprint) where eta[j] is the kernel element whose
    leading monomial is x^k ybar_j (monic, minimal weight) and footprint
    is the list of (k, j) monomials whose evaluation vectors are
    independent, in increasing delta order.
    """
    F, gamma, n = code.field, code.gamma, code.n
    eta = [None] * gamma
    footprint = []
    basis = []  # (pivot, vec with vec[pivot] = 1, combo as RBarElement)
    next_k = [0] * gamma
    cur_vec = [list(code.ev_ybar[j]) for j in range(gamma)]
    n_eta = (n + code.genus) // gamma
    delta_bound = gamma * (n_eta + 1) + max(code.b)
    delta = min(code.b)
    open_cols = gamma
    while open_cols:
        if delta > delta_bound:
            raise CodeDataError(
                "kernel-basis enumeration exceeded its weight bound; "
                "curve data is inconsistent"
            )
        j = delta % gamma
        k = (delta - code.b[j]) // gamma
        delta += 1
        if k < 0 or eta[j] is not None:
            continue
        assert k == next_k[j]
        vec = cur_vec[j]
        combo = code.rbar_zero()
        combo[j] = [0] * k + [1]
        # prepare the next monomial of this column
        cur_vec[j] = [F.mul(v, x) for v, x in zip(vec, code.ev_x)]
        next_k[j] += 1
        vec = list(vec)
        for pivot, bvec, bcombo in basis:
            c = vec[pivot]
            if c:
                nc = F.neg(c)
                vec = [F.add(v, F.mul(nc, bv)) for v, bv in zip(vec, bvec)]
                combo = _rbar_axpy(F, combo, bcombo, nc)
        if any(vec):
            pivot = next(t for t, v in enumerate(vec) if v)
            cinv = F.inv(vec[pivot])
            vec = [F.mul(cinv, v) for v in vec]
            combo = [pscale(F, p, cinv) for p in combo]
            basis.append((pivot, vec, combo))
            footprint.append((k, j))
        else:
            # dependent: combo is in J with leading monomial x^k ybar_j
            eta[j] = combo
            open_cols -= 1
    if len(footprint) != n:
        raise CodeDataError(
            f"footprint has {len(footprint)} monomials, expected n = {n}"
        )
    for f in eta:
        if any(pdeg(p) > n_eta for p in f):
            raise CodeDataError("kernel basis exceeds its degree bound N_eta")
    return eta, footprint


def compute_lagrange(code, footprint):
    """RBarElements h_1..h_n with ev(h_i) = e_i, over the footprint monomials."""
    F, n = code.field, code.n
    cols = []
    for k, j in footprint:
        vec = code.ev_ybar[j]
        for _ in range(k):
            vec = [F.mul(v, x) for v, x in zip(vec, code.ev_x)]
        cols.append(vec)
    # invert the n x n matrix whose columns are the footprint evaluations
    aug = [[cols[c][r] for c in range(n)] + [1 if r == c2 else 0 for c2 in range(n)]
           for r in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise CodeDataError("footprint evaluation matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = F.inv(aug[col][col])
        aug[col] = [F.mul(inv, v) for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = F.neg(aug[r][col])
                row, prow = aug[r], aug[col]
                aug[r] = [F.add(v, F.mul(c, pv)) for v, pv in zip(row, prow)]
    lagrange = []
    n_h = (n + 2 * code.genus - 1) // code.gamma
    soft_violation = False
    for i in range(n):
        h = code.rbar_zero()
        for idx, (k, j) in enumerate(footprint):
            c = aug[idx][n + i]
            if c:
                h = _rbar_axpy(F, h, _monomial(code, k, j), c)
        if any(pdeg(p) > n_h for p in h):
            soft_violation = True
        lagrange.append(h)
    if soft_violation:
        warnings.warn(
            "Lagrange basis exceeds the expected degree bound N_h; "
            "results remain exact but the representative is non-minimal",
            stacklevel=2,
        )
    return lagrange


def _monomial(code, k, j):
    f = code.rbar_zero()
    f[j] = [0] * k + [1]
    return f


def compute_dlo(code, eta_lead_xdeg):
    """The nu(s) table over the message support and its minimum d_LO."""
    gamma = code.gamma
    delta_eta = [gamma * eta_lead_xdeg[i] + code.b[i] for i in range(gamma)]
    nu_table = {}
    for s in code.message_support():
        total = 0
        for i in range(gamma):
            ip = (i + s) % gamma
            total += max(delta_eta[ip] - code.a[i] - s, 0)
        if total % gamma:
            raise CodeDataError(f"nu({s}) is not an integer; curve data inconsistent")
        nu_table[s] = total // gamma
    d_lo = min(nu_table.values())
    if d_lo < code.n - code.degG:
        raise CodeDataError(
            f"d_LO = {d_lo} is below the floor n - |G| = {code.n - code.degG}"
        )
    return nu_table, d_lo


def encoder_basis(code):
    """Evaluation vectors ev(phi_{s_i}) over the message support."""
    return [code.eval_rbar(code.phi_rbar(s)) for s in code.message_support()]


@dataclass
class PrecomputedCode:
    code: CodeData
    eta: list  # gamma RBarElements, kernel basis of J
    footprint: list  # n (k, j) monomials
    lagrange: list  # n RBarElements, ev(h_i) = e_i
    encoder: list  # k evaluation vectors
    eta_lead_xdeg: list  # deg_x LT(eta_i)
    nu_table: dict  # s -> nu(s) over the message support
    d_lo: int

    @property
    def n_h(self):
        return (self.code.n + 2 * self.code.genus - 1) // self.code.gamma

    @property
    def n_eta(self):
        return (self.code.n + self.code.genus) // self.code.gamma

    @property
    def n_deg(self):
        c = self.code
        if c.genus > 0:
            return 1 + -(-(c.n + 4 * c.genus - 2) // c.gamma)
        return c.n

    @property
    def n_iter(self):
        return self.code.n + 2 * self.code.genus

    def correctable(self):
        """Error weights with guaranteed unique decoding: t <= (d_LO - 1) // 2."""
        return (self.d_lo - 1) // 2

    def compute_hv(self, v):
        """RBarElement h_v with ev(h_v) = v."""
        if len(v) != self.code.n:
            raise ValueError(f"received word has length {len(v)}, expected {self.code.n}")
        F = self.code.field
        h = self.code.rbar_zero()
        for vi, hi in zip(v, self.lagrange):
            if vi:
                h = _rbar_axpy(F, h, hi, vi)
        return h

    def to_json(self):
        F = self.code.field
        elem = F.digits
        poly = lambda p: [elem(c) for c in p]
        rbar = lambda f: [poly(p) for p in f]
        return {
            "eta": [rbar(f) for f in self.eta],
            "footprint": [list(m) for m in self.footprint],
            "lagrange": [rbar(f) for f in self.lagrange],
            "encoder": [[elem(v) for v in row] for row in self.encoder],
            "eta_lead_xdeg": list(self.eta_lead_xdeg),
            "nu_table": {str(s): v for s, v in self.nu_table.items()},
            "d_lo": self.d_lo,
        }

    @classmethod
    def from_json(cls, code, obj):
        F = code.field
        elem = F.from_digits
        poly = lambda p: ptrim([elem(c) for c in p])
        rbar = lambda f: [poly(p) for p in f]
        return cls(
            code=code,
            eta=[rbar(f) for f in obj["eta"]],
            footprint=[tuple(m) for m in obj["footprint"]],
            lagrange=[rbar(f) for f in obj["lagrange"]],
            encoder=[[elem(v) for v in row] for row in obj["encoder"]],
            eta_lead_xdeg=list(obj["eta_lead_xdeg"]),
            nu_table={int(s): v for s, v in obj["nu_table"].items()},
            d_lo=obj["d_lo"],
        )


def precompute(code):
    """Run the full precomputation pipeline for one code."""
    eta, footprint = compute_eta(code)
    eta_lead_xdeg = [pdeg(eta[i][i]) for i in range(code.gamma)]
    if sum(eta_lead_xdeg) != code.n:
        raise CodeDataError("kernel-basis lead degrees do not sum to n")
    lagrange = compute_lagrange(code, footprint)
    nu_table, d_lo = compute_dlo(code, eta_lead_xdeg)
    return PrecomputedCode(
        code=code,
        eta=eta,
        footprint=footprint,
        lagrange=lagrange,
        encoder=encoder_basis(code),
        eta_lead_xdeg=eta_lead_xdeg,
        nu_table=nu_table,
        d_lo=d_lo,
    )


# -- sidecar cache ---------------------------------------------------------


def _content_hash(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def precompute_cached(path, code=None):
    """precompute() with a sidecar cache file `<path>.pre.json`."""
    path = str(path)
    if code is None:
        code = CodeData.load(path)
    digest = _content_hash(path)
    sidecar = path + ".pre.json"
    try:
        with open(sidecar) as fh:
            obj = json.load(fh)
        if obj.get("content_hash") == digest:
            return PrecomputedCode.from_json(code, obj)
    except (OSError, json.JSONDecodeError, KeyError, ValueError):
        pass
    pc = precompute(code)
    obj = pc.to_json()
    obj["content_hash"] = digest
    try:
        with open(sidecar, "w") as fh:
            json.dump(obj, fh)
    except OSError:
        pass  # read-only location; caching is best-effort
    return pc
