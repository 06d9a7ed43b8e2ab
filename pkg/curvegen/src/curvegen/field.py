"""Finite fields GF(p^m) for the exporter.

Elements are ints encoding digit vectors in base p, low degree first, the
same convention the curve-data file format uses.  Multiplication goes
through exp/log tables.  A numpy (q x q) pair of add/mul tables supports
vectorized linear algebra over the field.
"""

from __future__ import annotations


def _prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    def __init__(self, p, m, modulus, generator):
        if not _prime(p):
            raise ValueError(f"{p} is not prime")
        if len(modulus) != m + 1 or modulus[-1] % p != 1:
            raise ValueError("modulus must be monic of degree m")
        self.p, self.m, self.q = p, m, p**m
        self.modulus = [c % p for c in modulus]
        g = self.from_digits(generator)
        self.generator = g
        exp = [1] * (self.q - 1)
        acc = 1
        for i in range(1, self.q - 1):
            acc = self._mul_raw(acc, g)
            if acc == 1:
                raise ValueError("generator order too small")
            exp[i] = acc
        if self._mul_raw(acc, g) != 1:
            raise ValueError("generator order too small")
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log
        self._np = None

    def digits(self, a):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, d):
        if len(d) > self.m:
            raise ValueError("too many digits")
        a = 0
        for c in reversed(list(d) + [0] * (self.m - len(d))):
            a = a * self.p + c % self.p
        return a

    def _mul_raw(self, a, b):
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        inv = pow(self.modulus[-1], -1, p)
        for i in range(len(prod) - 1, self.m - 1, -1):
            c = prod[i]
            if c:
                f = (c * inv) % p
                for j in range(self.m + 1):
                    prod[i - self.m + j] = (prod[i - self.m + j] - f * self.modulus[j]) % p
        return self.from_digits(prod[: self.m])

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p, s, mult = self.p, 0, 1
        while a or b:
            s += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return s

    def neg(self, a):
        if self.p == 2:
            return a
        p, s, mult = self.p, 0, 1
        while a:
            s += (-a % p) * mult
            a //= p
            mult *= p
        return s

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError
            return 0 if k else 1
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def from_power(self, k):
        return self._exp[k % (self.q - 1)]

    def np_tables(self):
        if self._np is None:
            import numpy as np

            q = self.q
            add = np.zeros((q, q), dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(a, q):
                    add[a, b] = add[b, a] = self.add(a, b)
                    mul[a, b] = mul[b, a] = self.mul(a, b)
            self._np = (add, mul)
        return self._np

    def to_json(self):
        return {
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "generator": self.digits(self.generator),
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["p"], obj["m"], obj["modulus"], obj["generator"])

    def __repr__(self):
        return f"Field({self.p}^{self.m})"
