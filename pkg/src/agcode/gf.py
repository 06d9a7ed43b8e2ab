"""Arithmetic in small finite fields GF(p^m).

Elements are plain Python ints in [0, p^m).  The int encodes the digit
vector (d_0, ..., d_{m-1}) of the residue-class representative
d_0 + d_1*t + ... + d_{m-1}*t^{m-1} as d_0 + d_1*p + ... + d_{m-1}*p^{m-1},
low degree first.  The zero element is 0 and the one element is 1 in every
field, so code that only adds and compares needs no field handle.

A GF instance fixes the modulus polynomial and a primitive element, so the
alpha-power notation used in curve-data files maps to concrete elements.
Multiplication and inversion go through exp/log tables built at
construction time.  Supported sizes are capped at p^m <= 2^16.
"""

from __future__ import annotations

MAX_ORDER = 1 << 16


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _polydiv_mod_p(num, den, p):
    """Remainder of num / den for digit-vector polynomials over GF(p)."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            q = (c * inv_lead) % p
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - q * den[j]) % p
    return [c % p for c in num[:dd]]


def _irreducible_mod_p(poly, p):
    """Trial division test; poly is a digit vector over GF(p), degree >= 1."""
    m = len(poly) - 1
    if m == 1:
        return True
    # enumerate monic divisors of degree 1 .. m // 2
    for d in range(1, m // 2 + 1):
        for idx in range(p**d):
            div = []
            k = idx
            for _ in range(d):
                div.append(k % p)
                k //= p
            div.append(1)
            if not any(_polydiv_mod_p(poly, div, p)):
                return False
    return True


class GF:
    """The field GF(p^m) with a fixed irreducible modulus and generator.

    Immutable after construction; all operations are pure functions of
    their arguments, so one instance can be shared freely.
    """

    def __init__(self, p, m, modulus, generator):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1 or len(modulus) != m + 1:
            raise ValueError("modulus must have degree exactly m")
        q = p**m
        if q > MAX_ORDER:
            raise ValueError(f"field size {q} exceeds supported cap {MAX_ORDER}")
        modulus = [c % p for c in modulus]
        if modulus[m] != 1:
            raise ValueError("modulus must be monic")
        if not _irreducible_mod_p(modulus, p):
            raise ValueError("modulus is reducible over GF(p)")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = tuple(modulus)
        self.generator = self.from_digits(generator)

        # exp/log tables for the cyclic group of order q - 1
        exp = [1] * (q - 1)
        g = self.generator
        acc = 1
        for i in range(1, q - 1):
            acc = self._raw_mul(acc, g)
            if acc == 1:
                raise ValueError("generator does not have multiplicative order q - 1")
            exp[i] = acc
        if self._raw_mul(acc, g) != 1:
            raise ValueError("generator does not have multiplicative order q - 1")
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log
        self._np = None

    # -- representation ------------------------------------------------

    def digits(self, a):
        """Digit vector (length m, low degree first) of an element."""
        self.check(a)
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, digits):
        if len(digits) != self.m:
            raise ValueError(f"expected {self.m} digits, got {len(digits)}")
        a = 0
        for d in reversed(digits):
            if not 0 <= d < self.p:
                raise ValueError(f"digit {d} out of range [0, {self.p})")
            a = a * self.p + d
        return a

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"malformed element {a!r} for GF({self.p}^{self.m})")
        return a

    def from_power(self, k):
        """generator**k; k is reduced mod q - 1.  k = None encodes 0."""
        if k is None:
            return 0
        return self._exp[k % (self.q - 1)]

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        s = 0
        mult = 1
        while a or b:
            s += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return s

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        s = 0
        mult = 1
        while a:
            s += (-a % p) * mult
            a //= p
            mult *= p
        return s

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _raw_mul(self, a, b):
        # digit-vector product reduced by the modulus; used to seed the tables
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _polydiv_mod_p(prod, list(self.modulus), p)
        return self.from_digits(rem + [0] * (self.m - len(rem)))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF")
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of 0 in GF")
            return 0 if k else 1
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def log(self, a):
        """Discrete log base the generator; a must be nonzero."""
        if a == 0:
            raise ZeroDivisionError("log of 0 in GF")
        return self._log[a]

    # -- text notation -------------------------------------------------

    def parse(self, text):
        """Parse an element: digit vector '[d0,d1,..]', power 'a^k', 'a', or an int."""
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unterminated digit vector: {text!r}")
            body = text[1:-1].strip()
            digits = [int(t) for t in body.split(",")] if body else []
            return self.from_digits(digits)
        if text in ("a", "g"):
            return self.generator
        if text.startswith("a^") or text.startswith("g^"):
            return self.from_power(int(text[2:]))
        v = int(text)
        if not -self.p < v < self.p:
            raise ValueError(f"bare integer {v} outside the prime subfield")
        return v % self.p

    def format(self, a):
        return "[" + ",".join(str(d) for d in self.digits(a)) + "]"

    # -- numpy lookup tables (internal, for vectorized self-tests) -----

    def np_tables(self):
        """(ADD, MUL) as q x q uint16 arrays, built on first use."""
        if self._np is None:
            import numpy as np

            q = self.q
            if q > 4096:
                raise ValueError(f"lookup tables not supported for field size {q}")
            add = np.zeros((q, q), dtype=np.uint16)
            mul = np.zeros((q, q), dtype=np.uint16)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
                    mul[a, b] = self.mul(a, b)
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

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.modulus == other.modulus
            and self.generator == other.generator
        )

    def __hash__(self):
        return hash((self.p, self.modulus, self.generator))

    def __repr__(self):
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"
