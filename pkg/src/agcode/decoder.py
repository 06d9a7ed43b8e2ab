"""Interpolation decoder: iterate a Groebner basis of I_v down the weights.

The state holds 2*gamma rows spanning the interpolation module of the
current received word under the order >_s.  Each iteration runs three
steps: Pairing fixes the index bookkeeping (i', k_i, c_i), Voting elects
the message symbol w_s by weighted majority, and Rebasing updates the
rows to a Groebner basis for >_{s-1} after the substitution
z -> z + w * phi_s.  The message symbols collected over the nonpositive
weights of the code form the decoded message.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from agcode.polyring import (
    ModuleRow,
    coeff_at,
    paxpy,
    pdeg,
    plc,
    pscale,
    row_axpy,
    row_leading,
)


class DecoderInvariantError(AssertionError):
    """An internal decoder invariant failed; carries the iteration weight."""

    def __init__(self, s, detail):
        super().__init__(f"invariant violation at s = {s}: {detail}")
        self.s = s
        self.detail = detail


@dataclass
class DecoderState:
    s: int
    grows: list  # gamma ModuleRows, grows[i] leads in ybar-column i
    frows: list  # gamma ModuleRows, frows[i] leads in y_i z-column i
    nu: list  # gamma leading coefficients of grows[i].w[i]
    message: dict  # s -> elected symbol w_s
    trace: list | None  # per-iteration records when tracing


@dataclass
class PairingData:
    iprime: list
    k: list
    c: list
    cbar: list
    wi: list
    mui: list
    phase: int  # 1 or 2


@dataclass
class DecodeResult:
    message: list  # k symbols ordered by increasing s
    codeword: list  # re-encoded, length n
    residual_weight: int
    verified: bool
    iterations: int
    tie_flag: bool
    max_degree: int = 0
    trace: list | None = None


def init_state(v, pc, want_trace=False):
    """Groebner basis of I_v under >_N with N = delta(h_v)."""
    code = pc.code
    if len(v) != code.n:
        raise ValueError(f"received word has length {len(v)}, expected {code.n}")
    F, gamma = code.field, code.gamma
    hv = pc.compute_hv(v)
    support = code.message_support()
    if any(any(p) for p in hv):
        n_weight = code.rbar_delta(hv)
    else:
        # zero word: any starting weight >= s_0 works, 0 keeps phases intact
        n_weight = 0
    message = {}
    for s in support:
        if s > n_weight:
            message[s] = 0
    grows = []
    frows = []
    nu = []
    neg_hv = [pscale(F, p, F.neg(1)) for p in hv]
    for i in range(gamma):
        grows.append(ModuleRow([[] for _ in range(gamma)], [list(p) for p in pc.eta[i]]))
        u = [[] for _ in range(gamma)]
        u[i] = [1]
        frows.append(ModuleRow(u, code.mul_y(i, neg_hv)))
        nu.append(plc(pc.eta[i][i]))
    return DecoderState(
        s=n_weight,
        grows=grows,
        frows=frows,
        nu=nu,
        message=message,
        trace=[] if want_trace else None,
    )


def pairing(st, code):
    """Index bookkeeping for the current weight s."""
    gamma, s = code.gamma, st.s
    iprime, ks, cs, cbars = [], [], [], []
    for i in range(gamma):
        ip = (i + s) % gamma
        num = code.a[i] + s - code.b[ip]
        if num % gamma:
            raise DecoderInvariantError(s, f"(a_{i} + s - b_{ip}) not divisible by gamma")
        k = pdeg(st.frows[i].u[i]) + num // gamma
        c = pdeg(st.grows[ip].w[ip]) - k
        iprime.append(ip)
        ks.append(k)
        cs.append(c)
        cbars.append(max(c, 0))
    return PairingData(iprime, ks, cs, cbars, wi=[], mui=[], phase=0)


def voting(st, pd, pc):
    """Fill in w_i and mu_i, elect the winner; returns (w, tie)."""
    code = pc.code
    F, gamma, s = code.field, code.gamma, st.s
    second = s <= 0 and code.in_lambdabar(s)
    pd.phase = 2 if second else 1
    phi = code.phi_rbar(s) if second else None
    for i in range(gamma):
        ip, k = pd.iprime[i], pd.k[i]
        if second:
            prod = code.mul_y(i, phi)
            _, _, _, lead = code.rbar_lt(prod)
            mui = F.mul(plc(st.frows[i].u[i]), lead)
        else:
            mui = 1
        b = coeff_at(st.frows[i].w[ip], k) if k >= 0 else 0
        wi = F.neg(F.div(b, mui)) if b else 0
        pd.mui.append(mui)
        pd.wi.append(wi)
    if not second:
        return 0, False
    votes = {0: 0}
    for wi, cbar in zip(pd.wi, pd.cbar):
        votes[wi] = votes.get(wi, 0) + cbar
    best = max(votes.values())
    winners = sorted(c for c, v in votes.items() if v == best)
    w = winners[0]
    tie = len(winners) > 1
    st.message[s] = w
    return w, tie


def _substitute(row, w, k, m, code):
    """row after z -> z + w * phi_s with phi_s = x^k ybar_m."""
    if w == 0:
        return row.copy()
    F, gamma = code.field, code.gamma
    new_w = [list(p) for p in row.w]
    for j in range(gamma):
        uj = row.u[j]
        if not uj:
            continue
        for l in range(gamma):
            t = code.table[j][m][l]
            if t:
                prod = []
                for d, c in enumerate(uj):
                    if c:
                        prod = paxpy(F, prod, t, F.mul(c, w), d)
                new_w[l] = paxpy(F, new_w[l], prod, 1, k)
    return ModuleRow([list(p) for p in row.u], new_w)


def rebasing(st, pd, w, pc):
    """Update the rows to a Groebner basis for >_{s-1}; decrements s."""
    code = pc.code
    F, gamma, s = code.field, code.gamma, st.s
    if pd.phase == 2 and w != 0:
        k, m = code.phi_of(s)
        sub = lambda row: _substitute(row, w, k, m, code)
    else:
        sub = lambda row: row.copy()
    new_g = [None] * gamma
    new_f = [None] * gamma
    new_nu = list(st.nu)
    for i in range(gamma):
        ip, c = pd.iprime[i], pd.c[i]
        f_s = sub(st.frows[i])
        g_s = sub(st.grows[ip])
        if pd.wi[i] == w:
            new_g[ip] = g_s
            new_f[i] = f_s
        else:
            factor = F.mul(pd.mui[i], F.sub(w, pd.wi[i]))
            scale = F.neg(F.div(factor, st.nu[ip]))
            if c > 0:
                new_g[ip] = f_s
                new_f[i] = row_axpy(F, row_axpy(F, ModuleRow.zero(gamma), f_s, 1, c),
                                    g_s, scale, 0)
                new_nu[ip] = factor
            else:
                new_g[ip] = g_s
                new_f[i] = row_axpy(F, f_s, g_s, scale, -c)
    st.grows = new_g
    st.frows = new_f
    st.s = s - 1
    for i in range(gamma):
        d = st.grows[i].w[i]
        if not d:
            raise DecoderInvariantError(st.s, f"grows[{i}] lost its diagonal entry")
        lc = plc(d)
        if new_nu[i] != lc:
            raise DecoderInvariantError(
                st.s, f"nu[{i}] update rule gives {new_nu[i]}, recomputed {lc}"
            )
        st.nu[i] = lc
    return st


# -- invariant checks ------------------------------------------------------


def check_state(st, pc, v_s=None):
    """All structural DecoderState invariants; membership when v_s is given."""
    code = pc.code
    gamma, s, n = code.gamma, st.s, code.n
    for i in range(gamma):
        lt = row_leading(st.grows[i], s, code)
        if lt.has_z or lt.col != i:
            raise DecoderInvariantError(s, f"grows[{i}] does not lead in ybar-column {i}")
        lt = row_leading(st.frows[i], s, code)
        if not lt.has_z or lt.col != i:
            raise DecoderInvariantError(s, f"frows[{i}] does not lead in y_{i}z-column")
        if st.nu[i] != plc(st.grows[i].w[i]):
            raise DecoderInvariantError(s, f"nu[{i}] mismatch")
    total = sum(pdeg(st.frows[i].u[i]) for i in range(gamma))
    total += sum(pdeg(st.grows[i].w[i]) for i in range(gamma))
    if total != n:
        raise DecoderInvariantError(s, f"degree identity gives {total}, expected n = {n}")
    n_deg = pc.n_deg
    for row in st.grows + st.frows:
        if row.max_degree() > n_deg:
            raise DecoderInvariantError(s, f"row degree exceeds N_deg = {n_deg}")
    if v_s is not None:
        _check_membership(st, pc, v_s)


def _check_membership(st, pc, v_s):
    code = pc.code
    F = code.field
    import numpy as np

    add_t, mul_t = F.np_tables()
    xs = np.array(code.ev_x, dtype=np.intp)
    ys = np.array(code.ev_y, dtype=np.intp)
    ybars = np.array(code.ev_ybar, dtype=np.intp)
    vv = np.array(v_s, dtype=np.intp)

    def horner(p):
        acc = np.zeros(code.n, dtype=np.intp)
        for c in reversed(p):
            acc = add_t[mul_t[acc, xs], c].astype(np.intp)
        return acc

    for name, rows in (("g", st.grows), ("f", st.frows)):
        for i, row in enumerate(rows):
            acc = np.zeros(code.n, dtype=np.intp)
            for j in range(code.gamma):
                if row.u[j]:
                    term = mul_t[mul_t[horner(row.u[j]), ys[j]], vv].astype(np.intp)
                    acc = add_t[acc, term].astype(np.intp)
                if row.w[j]:
                    term = mul_t[horner(row.w[j]), ybars[j]].astype(np.intp)
                    acc = add_t[acc, term].astype(np.intp)
            if acc.any():
                raise DecoderInvariantError(
                    st.s, f"{name}-row {i} is not in the interpolation module"
                )


# -- driver ----------------------------------------------------------------


def decode(v, pc, want_trace=False, check="sampled"):
    """Decode a received word; check is 'all', 'sampled' or 'off'."""
    code = pc.code
    F = code.field
    support = code.message_support()
    s0 = support[0]
    st = init_state(v, pc, want_trace=want_trace)
    n_start = st.s
    iterations = n_start - s0 + 1
    if iterations > pc.n_iter:
        raise DecoderInvariantError(n_start, f"iteration count {iterations} exceeds N_iter")
    stride = 1 if check == "all" else max(1, iterations // 8)
    v_s = list(v)
    tie_flag = False
    max_degree = max(row.max_degree() for row in st.grows + st.frows)
    step = 0
    while st.s >= s0:
        do_check = check != "off" and (check == "all" or step % stride == 0)
        if do_check:
            check_state(st, pc, v_s)
        pd = pairing(st, code)
        w, tie = voting(st, pd, pc)
        tie_flag = tie_flag or tie
        if st.trace is not None:
            st.trace.append(
                {
                    "s": st.s,
                    "phase": pd.phase,
                    "entries": [
                        (i, pd.iprime[i], pd.c[i], pd.wi[i]) for i in range(code.gamma)
                    ],
                    "winner": w,
                }
            )
        if w != 0:
            # the elected symbol is peeled off the implicit received word
            delta_v = pc.encoder[support.index(st.s)]
            v_s = [F.sub(a, F.mul(w, d)) for a, d in zip(v_s, delta_v)]
        rebasing(st, pd, w, pc)
        max_degree = max(
            max_degree, max(row.max_degree() for row in st.grows + st.frows)
        )
        step += 1
    if check != "off":
        check_state(st, pc, v_s)
    message = [st.message.get(s, 0) for s in support]
    codeword = code.encode(message, pc.encoder)
    residual = sum(1 for a, b in zip(v, codeword) if a != b)
    return DecodeResult(
        message=message,
        codeword=codeword,
        residual_weight=residual,
        verified=residual <= (pc.d_lo - 1) // 2,
        iterations=iterations,
        tie_flag=tie_flag,
        max_degree=max_degree,
        trace=st.trace,
    )


def format_trace(trace, F):
    """Render trace records, one line per iteration."""
    lines = []
    for rec in trace:
        parts = [f"s={rec['s']}", f"phase={rec['phase']}"]
        for i, ip, c, wi in rec["entries"]:
            parts.append(f"i={i} i'={ip} c={c} w_i={F.format(wi)}")
        parts.append(f"winner={F.format(rec['winner'])}")
        lines.append(" ".join(parts))
    return "\n".join(lines)
