"""The curve-data model for one AG evaluation code.

A CodeData carries everything the decoder needs about a fixed code
C_L(D, G): the field, the length n and genus g, gamma (the smallest
positive pole order at the distinguished point Q), deg(G), the Apery
sequences a_i / b_i, the evaluation vectors of x, of the R-basis y_j and
of the Rbar-basis ybar_j at the points P_1..P_n, and the multiplication
table expressing each product y_i * ybar_m on the ybar basis.

Elements of Rbar are gamma-vectors of polynomials on the ybar basis
("RBarElement" in the file format); their weight delta is
max_j (gamma * deg f_j + b_j), which is exact because the b_j are
pairwise distinct mod gamma.

The canonical curve-data file is JSON with field elements serialized as
digit vectors and polynomials low degree first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from agcode.gf import GF
from agcode.polyring import ModuleRow, pdeg, peval, pmul, padd, ptrim


class CodeDataError(ValueError):
    """Malformed or inconsistent curve data."""


@dataclass
class CodeData:
    field: GF
    n: int
    genus: int
    gamma: int
    degG: int
    a: list  # Apery set of Lambda, a_0 = 0, a_i = i (mod gamma)
    b: list  # minimal delta per residue class of LambdaBar
    ev_x: list  # x(P_t), length n
    ev_y: list  # gamma x n, y_j(P_t)
    ev_ybar: list  # gamma x n, ybar_j(P_t)
    table: list  # table[i][m][j] in F[x]:  y_i * ybar_m = sum_j table[i][m][j] * ybar_j

    # -- bookkeeping ---------------------------------------------------

    def phi_of(self, s):
        """(k, m) with phi_s = x^k ybar_m; s is in LambdaBar iff k >= 0."""
        m = s % self.gamma
        k = (s - self.b[m]) // self.gamma
        return k, m

    def in_lambdabar(self, s):
        return self.phi_of(s)[0] >= 0

    def message_support(self):
        """Sorted nonpositive elements of LambdaBar; its size is dim C."""
        out = []
        for bm in self.b:
            s = bm
            while s <= 0:
                out.append(s)
                s += self.gamma
        out.sort()
        return out

    @property
    def k(self):
        return len(self.message_support())

    # -- Rbar elements -------------------------------------------------

    def rbar_zero(self):
        return [[] for _ in range(self.gamma)]

    def phi_rbar(self, s):
        """phi_s as an RBarElement; s must lie in LambdaBar."""
        k, m = self.phi_of(s)
        if k < 0:
            raise ValueError(f"s = {s} is not in LambdaBar")
        f = self.rbar_zero()
        f[m] = [0] * k + [1]
        return f

    def rbar_delta(self, f):
        """delta of a nonzero RBarElement (exact: no cross-column ties)."""
        best = None
        for j in range(self.gamma):
            if f[j]:
                d = self.gamma * pdeg(f[j]) + self.b[j]
                if best is None or d > best:
                    best = d
        if best is None:
            raise ValueError("delta of the zero element")
        return best

    def rbar_lt(self, f):
        """(delta, j, xdeg, coeff) of the leading term of a nonzero RBarElement."""
        best = None
        for j in range(self.gamma):
            if f[j]:
                d = self.gamma * pdeg(f[j]) + self.b[j]
                if best is None or d > best[0]:
                    best = (d, j, pdeg(f[j]), f[j][-1])
        if best is None:
            raise ValueError("leading term of the zero element")
        return best

    def mul_y(self, i, f):
        """The product y_i * f in ybar coordinates."""
        F = self.field
        out = self.rbar_zero()
        for m in range(self.gamma):
            fm = f[m]
            if not fm:
                continue
            for j in range(self.gamma):
                t = self.table[i][m][j]
                if t:
                    out[j] = padd(F, out[j], pmul(F, fm, t))
        return out

    def eval_rbar(self, f):
        """(f(P_1), ..., f(P_n))."""
        F = self.field
        out = [0] * self.n
        for j in range(self.gamma):
            fj = f[j]
            if not fj:
                continue
            evb = self.ev_ybar[j]
            for t in range(self.n):
                v = peval(F, fj, self.ev_x[t])
                if v:
                    out[t] = F.add(out[t], F.mul(v, evb[t]))
        return out

    def encode(self, message, basis):
        """Evaluate sum omega_{s_i} phi_{s_i}; basis holds the ev(phi_{s_i})."""
        if len(message) != len(basis):
            raise ValueError(
                f"message length {len(message)} != code dimension {len(basis)}"
            )
        F = self.field
        out = [0] * self.n
        for omega, row in zip(message, basis):
            if omega:
                for t in range(self.n):
                    out[t] = F.add(out[t], F.mul(omega, row[t]))
        return out

    # -- validation ----------------------------------------------------

    def validate(self):
        g, F, n = self.gamma, self.field, self.n
        if len(self.a) != g or len(self.b) != g:
            raise CodeDataError("a and b must have length gamma")
        if self.a[0] != 0:
            raise CodeDataError("a_0 must be 0")
        for i in range(g):
            if self.a[i] < 0 or self.a[i] % g != i:
                raise CodeDataError(f"a_{i} = {self.a[i]} violates the residue condition")
            if self.a[i] > 2 * self.genus + g - 1:
                raise CodeDataError(f"a_{i} = {self.a[i]} exceeds 2g + gamma - 1")
            if self.b[i] % g != i % g:
                raise CodeDataError(f"b_{i} = {self.b[i]} violates the residue condition")
        if len(self.ev_x) != n or len(self.ev_y) != g or len(self.ev_ybar) != g:
            raise CodeDataError("evaluation vectors have wrong shape")
        for row in self.ev_y + self.ev_ybar:
            if len(row) != n:
                raise CodeDataError("evaluation vectors have wrong shape")
        for v in self.ev_x:
            F.check(v)
        # table consistency, pointwise at every P_t, and degree consistency
        for i in range(g):
            for m in range(g):
                entry = self.table[i][m]
                if len(entry) != g:
                    raise CodeDataError("table entry has wrong rank")
                lead = None
                for j in range(g):
                    if entry[j]:
                        d = g * pdeg(entry[j]) + self.b[j]
                        lead = d if lead is None else max(lead, d)
                if lead != self.a[i] + self.b[m]:
                    raise CodeDataError(
                        f"table[{i}][{m}] has leading weight {lead}, "
                        f"expected a_{i} + b_{m} = {self.a[i] + self.b[m]}"
                    )
                for t in range(n):
                    lhs = 0
                    for j in range(g):
                        if entry[j]:
                            lhs = F.add(
                                lhs,
                                F.mul(peval(F, entry[j], self.ev_x[t]), self.ev_ybar[j][t]),
                            )
                    rhs = F.mul(self.ev_y[i][t], self.ev_ybar[m][t])
                    if lhs != rhs:
                        raise CodeDataError(
                            f"table[{i}][{m}] inconsistent at point {t + 1}"
                        )
        return self

    # -- serialization -------------------------------------------------

    def to_json(self):
        F = self.field
        elem = F.digits
        poly = lambda p: [elem(c) for c in p]
        return {
            "field": F.to_json(),
            "n": self.n,
            "genus": self.genus,
            "gamma": self.gamma,
            "degG": self.degG,
            "a": list(self.a),
            "b": list(self.b),
            "ev_x": [elem(v) for v in self.ev_x],
            "ev_y": [[elem(v) for v in row] for row in self.ev_y],
            "ev_ybar": [[elem(v) for v in row] for row in self.ev_ybar],
            "table": [
                [[poly(p) for p in entry] for entry in row] for row in self.table
            ],
        }

    @classmethod
    def from_json(cls, obj, validate=True):
        try:
            F = GF.from_json(obj["field"])
            elem = F.from_digits
            poly = lambda p: ptrim([elem(c) for c in p])
            code = cls(
                field=F,
                n=obj["n"],
                genus=obj["genus"],
                gamma=obj["gamma"],
                degG=obj["degG"],
                a=list(obj["a"]),
                b=list(obj["b"]),
                ev_x=[elem(v) for v in obj["ev_x"]],
                ev_y=[[elem(v) for v in row] for row in obj["ev_y"]],
                ev_ybar=[[elem(v) for v in row] for row in obj["ev_ybar"]],
                table=[
                    [[poly(p) for p in entry] for entry in row] for row in obj["table"]
                ],
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, CodeDataError):
                raise
            raise CodeDataError(f"malformed curve-data file: {exc}") from exc
        if validate:
            code.validate()
        return code

    @classmethod
    def load(cls, path, validate=True):
        with open(path) as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise CodeDataError(f"not valid JSON: {exc}") from exc
        return cls.from_json(obj, validate=validate)

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)
            fh.write("\n")


# -- shipped fixtures ------------------------------------------------------


def fixture_path(name):
    """Path of a shipped curve-data file, e.g. 'hermitian_f9_26'."""
    if not name.endswith(".json"):
        name += ".json"
    return resources.files("agcode").joinpath("data", name)


def list_fixtures():
    data = resources.files("agcode").joinpath("data")
    return sorted(p.name[:-5] for p in data.iterdir() if p.name.endswith(".json"))


def load_fixture(name, validate=True):
    return CodeData.from_json(json.loads(fixture_path(name).read_text()), validate=validate)
