"""The tower F = GF(p) inside K = GF(p^r) and its Frobenius automorphism.

Elements of K are coded as integers: the element ``c_0 + c_1 g + ... +
c_{r-1} g^{r-1}`` of ``K = F[g]/(modulus)`` is the integer ``sum c_i p^i``.
With this coding the subfield F is exactly ``range(p)``.  All arithmetic
goes through precomputed tables, so the order of K is capped at
:data:`MAX_ORDER`.

:class:`FieldElement` is the user-facing wrapper; the rest of the library
passes plain integers around and calls the :class:`Field` methods.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import kernels
from .errors import CharacteristicDividesR, ConfigError, DivisionByZero

MAX_ORDER = 2048


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# Dense polynomials over GF(p), constant term first.  Only used to build
# the tables and to validate the modulus.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pmod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    for top in range(len(a) - 1, dm - 1, -1):
        c = a[top] * inv_lead % p
        if c:
            for k in range(dm + 1):
                a[top - dm + k] = (a[top - dm + k] - c * m[k]) % p
    return _trim(a[:dm] if len(a) > dm else a)


def _ppowmod(base, e, m, p):
    result, base = [1], _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(poly, p):
    """Rabin's test for a polynomial over GF(p) given constant-first."""
    f = _trim([c % p for c in poly])
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**n, f, p), x, p):
        return False
    for ell in _prime_factors(n):
        h = _psub(_ppowmod(x, p ** (n // ell), f, p), x, p)
        if len(_pgcd(f, h, p)) > 1:
            return False
    return True


@dataclass(frozen=True)
class FieldConfig:
    """Description of the tower: ``K = GF(p)[g]/(modulus)`` of degree r.

    ``s`` is the degree of F over GF(p); only ``s = 1`` is supported.
    """

    p: int
    s: int
    r: int
    modulus: tuple

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(int(data["p"]), int(data.get("s", 1)), int(data["r"]),
                       tuple(data["modulus"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"malformed field config: {exc}") from None

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"field config is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path):
        return cls.from_json(Path(path).read_text())

    def to_dict(self):
        return {"p": self.p, "s": self.s, "r": self.r, "modulus": list(self.modulus)}

    def validate(self):
        p, r = self.p, self.r
        if not is_prime(p):
            raise ConfigError(f"p = {p} is not prime")
        if self.s != 1:
            raise ConfigError("only prime base fields (s = 1) are supported")
        if r < 1:
            raise ConfigError("r must be at least 1")
        mod = [c % p for c in self.modulus]
        _trim(mod)
        if len(mod) - 1 != r:
            raise ConfigError(f"modulus has degree {len(mod) - 1}, expected r = {r}")
        if not is_irreducible(mod, p):
            raise ConfigError("modulus is not irreducible over GF(p)")
        if p**r > MAX_ORDER:
            raise ConfigError(f"field of order {p**r} exceeds MAX_ORDER = {MAX_ORDER}")


GF25 = FieldConfig(5, 1, 2, (3, 0, 1))
GF343 = FieldConfig(7, 1, 3, (5, 0, 0, 1))
GF4 = FieldConfig(2, 1, 2, (1, 1, 1))


class Field:
    """Table-driven arithmetic in K together with its Frobenius ``theta``.

    Use :func:`get_field` rather than the constructor so that every config
    maps to one shared instance.
    """

    def __init__(self, config: FieldConfig):
        config.validate()
        self.config = config
        self.p = p = config.p
        self.r = r = config.r
        self.q = p**config.s
        self.order = Q = p**r
        inv_lead = pow(config.modulus[-1] % p, -1, p)
        self._modulus = [c * inv_lead % p for c in config.modulus]
        _trim(self._modulus)

        digits = np.array([[(a // p**i) % p for i in range(r)] for a in range(Q)],
                          dtype=np.int64)
        weights = p ** np.arange(r, dtype=np.int64)
        add = np.zeros((Q, Q), dtype=np.int64)
        for i in range(r):
            add += ((digits[:, None, i] + digits[None, :, i]) % p) * weights[i]
        neg = ((-digits) % p) @ weights

        self.generator = gen = self._find_primitive()
        exp = np.empty(Q - 1, dtype=np.int64)
        log = np.zeros(Q, dtype=np.int64)
        a = 1
        for k in range(Q - 1):
            exp[k] = a
            log[a] = k
            a = self._slow_mul(a, gen)
        lsum = (log[:, None] + log[None, :]) % (Q - 1)
        mul = exp[lsum]
        mul[0, :] = 0
        mul[:, 0] = 0
        inv = np.zeros(Q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (Q - 1)]
        frob = np.empty((r, Q), dtype=np.int64)
        for k in range(r):
            frob[k, 0] = 0
            frob[k, 1:] = exp[(log[1:] * pow(self.q, k, Q - 1)) % (Q - 1)]

        self.tables = {
            "add": np.ascontiguousarray(add, dtype=np.int32),
            "mul": np.ascontiguousarray(mul, dtype=np.int32),
            "neg": np.ascontiguousarray(neg, dtype=np.int32),
            "inv": np.ascontiguousarray(inv, dtype=np.int32),
            "frob": np.ascontiguousarray(frob, dtype=np.int32),
        }
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._neg = neg.tolist()
        self._inv = inv.tolist()
        self._frob = frob.tolist()
        self._log = log.tolist()
        self._exp = exp.tolist()
        self._digits = [tuple(row) for row in digits.tolist()]
        self.kernel = kernels.KernelContext(self.tables, r)

    # -- construction helpers -------------------------------------------

    def _slow_mul(self, a, b):
        p, r = self.p, self.r
        da = [(a // p**i) % p for i in range(r)]
        db = [(b // p**i) % p for i in range(r)]
        prod = _pmod(_pmul(_trim(da), _trim(db), p), self._modulus, p)
        return sum(c * p**i for i, c in enumerate(prod))

    def _find_primitive(self):
        Q = self.order
        if Q == 2:
            return 1
        factors = _prime_factors(Q - 1)
        for cand in range(2, Q):
            if all(self._slow_pow(cand, (Q - 1) // ell) != 1 for ell in factors):
                return cand
        raise ConfigError("no primitive element found")  # pragma: no cover

    def _slow_pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    # -- integer-level arithmetic ----------------------------------------

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero in K")
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a][self.inv(b)]

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero in K")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frob(self, a, k=1):
        """theta^k(a) = a^(q^k); k may be negative."""
        return self._frob[k % self.r][a]

    def from_int(self, n):
        """Image of the integer n in the prime field."""
        return n % self.p

    def in_base(self, a):
        return a < self.p

    def trace(self, a):
        t = 0
        for k in range(self.r):
            t = self._add[t][self._frob[k][a]]
        return t

    def norm(self, a):
        t = 1
        for k in range(self.r):
            t = self._mul[t][self._frob[k][a]]
        return t

    def norm_partial(self, a, i):
        """N_i(a) = a theta(a) ... theta^{i-1}(a); negative i gives the inverse orbit."""
        if i < 0:
            return self.inv(self.frob(self.norm_partial(a, -i), i))
        t = 1
        for k in range(i):
            t = self._mul[t][self._frob[k % self.r][a]]
        return t

    def sum(self, values):
        t = 0
        for v in values:
            t = self._add[t][v]
        return t

    def digits(self, a):
        return self._digits[a]

    def encode(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.r:
            raise ValueError(f"expected at most {self.r} coordinates")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def gen(self):
        """The class of g in the power basis (equal to the prime-field
        element 0 when r = 1, where g is the root of the linear modulus)."""
        if self.r == 1:
            return (-self._modulus[0]) % self.p
        return self.p

    def trace_one(self):
        for i in range(self.r):
            b = self.p**i if self.r > 1 else 1
            t = self.trace(b)
            if t:
                return self.mul(b, self.inv(t))
        raise AssertionError("trace K -> F is surjective")  # pragma: no cover

    def format(self, a):
        """Canonical text: increasing powers of g, coefficients in 0..p-1."""
        if a == 0:
            return "0"
        terms = []
        for i, c in enumerate(self._digits[a]):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "g" if i == 1 else f"g^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms)

    def element(self, value):
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        """Integer code of an int (prime-field element) or a FieldElement."""
        if isinstance(value, FieldElement):
            if value.field is not self and value.field.config != self.config:
                raise ValueError("element belongs to another field")
            return value.value
        if isinstance(value, (int, np.integer)):
            return int(value) % self.p
        raise TypeError(f"cannot interpret {value!r} as an element of K")

    def elements(self):
        return range(self.order)

    def base_elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and other.config == self.config

    def __hash__(self):
        return hash(self.config)

    def __repr__(self):
        return f"Field(GF({self.p}^{self.r}) over GF({self.p}), modulus={list(self.config.modulus)})"


@lru_cache(maxsize=None)
def get_field(config: FieldConfig) -> Field:
    return Field(config)


class FieldElement:
    """An element of K, bound to its field."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    @property
    def coeffs(self):
        """Coordinates over F in the power basis of g, constant first."""
        return self.field.digits(self.value)

    def _other(self, other):
        if isinstance(other, FieldElement):
            return self.field.coerce(other)
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FieldElement(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __eq__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else self.value == b

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, i=1):
        return FieldElement(self.field, self.field.frob(self.value, i))

    def in_base_field(self):
        return self.field.in_base(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"FieldElement({self.field.format(self.value)})"


def frobenius_power(a: FieldElement, i: int) -> FieldElement:
    """theta^i(a) = a^(q^(i mod r))."""
    return a.frobenius(i)


def trace_K_F(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.trace(a.value))


def norm_K_F(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.norm(a.value))


def trace_one_element(field: Field) -> FieldElement:
    """First power-basis vector with nonzero trace, rescaled to trace 1."""
    return FieldElement(field, field.trace_one())


@lru_cache(maxsize=None)
def binomial_fraction(j, r, n, p):
    """binom(j/r, n) reduced mod p.

    The value lies in Z[1/r], so it is computed exactly over Q first; the
    naive recurrence would divide by p once n reaches p.
    """
    if r % p == 0:
        raise CharacteristicDividesR(f"p = {p} divides r = {r}")
    num = 1
    for k in range(n):
        num *= j - k * r
    val = Fraction(num, r**n * math.factorial(n))
    return val.numerator * pow(val.denominator, -1, p) % p


def binomial_fraction_coeffs(j: int, r: int, n_max: int, p: int) -> list:
    """Coefficients c_0..c_{n_max} of (1 + u)^(j/r) over GF(p)."""
    return [binomial_fraction(j, r, n, p) for n in range(n_max + 1)]
