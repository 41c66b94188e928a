"""Commutative (Laurent) polynomials and rational functions over K.

:class:`YPolynomial` plays two roles: elements of ``C = K[Y^{+-1}]`` and,
when all coefficients lie in F, central elements of the skew ring.  The
variable name is cosmetic (``Y`` by default, ``y`` after the substitution
``Y = y^r``).
"""

from __future__ import annotations

import math

from .errors import DivisionByZero, ZeroToNegativePower


def _strip(val, coeffs):
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return val + lo, tuple(coeffs[lo:hi])


class YPolynomial:
    __slots__ = ("field", "val", "coeffs", "var")

    def __init__(self, field, coeffs=(), val=0, var="Y"):
        self.field = field
        self.val, self.coeffs = _strip(val, list(coeffs))
        self.var = var

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, field, c, var="Y"):
        return cls(field, [c], 0, var)

    @classmethod
    def monomial(cls, field, c, k, var="Y"):
        return cls(field, [c], k, var)

    @classmethod
    def from_dict(cls, field, terms, var="Y"):
        if not terms:
            return cls(field, (), 0, var)
        lo, hi = min(terms), max(terms)
        out = [0] * (hi - lo + 1)
        for k, c in terms.items():
            out[k - lo] = field.add(out[k - lo], c)
        return cls(field, out, lo, var)

    def _new(self, coeffs, val=0):
        return YPolynomial(self.field, coeffs, val, self.var)

    # -- structure -------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self):
        return -math.inf if not self.coeffs else self.val + len(self.coeffs) - 1

    def valuation(self):
        return math.inf if not self.coeffs else self.val

    def __getitem__(self, k):
        i = k - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self):
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c}

    def dense(self):
        """Coefficients from Y^0 up to the degree (requires val >= 0)."""
        if not self.coeffs:
            return []
        if self.val < 0:
            raise ValueError("Laurent polynomial has negative powers")
        return [0] * self.val + list(self.coeffs)

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_polynomial(self):
        return not self.coeffs or self.val >= 0

    def is_central(self):
        """True when all coefficients lie in the fixed field F."""
        return all(self.field.in_base(c) for c in self.coeffs)

    def is_constant(self):
        return not self.coeffs or (self.val == 0 and len(self.coeffs) == 1)

    def with_var(self, var):
        return YPolynomial(self.field, self.coeffs, self.val, var)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, YPolynomial):
            return other
        if isinstance(other, int):
            return self._new([self.field.from_int(other)])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other.with_var(self.var)
        F = self.field
        lo = min(self.val, other.val)
        hi = max(self.degree(), other.degree())
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.val - lo + i] = c
        for i, c in enumerate(other.coeffs):
            k = other.val - lo + i
            out[k] = F.add(out[k], c)
        return self._new(out, lo)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return self._new([neg(c) for c in self.coeffs], self.val)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return self._new(())
        prod = self.field.kernel.skew_mul(list(self.coeffs), list(other.coeffs), 0, 0)
        return self._new(prod, self.val + other.val)

    __rmul__ = __mul__

    def scale(self, c):
        mul = self.field.mul
        return self._new([mul(c, x) for x in self.coeffs], self.val)

    def shift(self, k):
        """Multiply by Y^k."""
        return self._new(self.coeffs, self.val + k)

    def __pow__(self, e):
        if e < 0:
            if len(self.coeffs) == 1:
                return self._new([self.field.pow(self.coeffs[0], e)], self.val * e)
            if not self.coeffs:
                raise ZeroToNegativePower("0 raised to a negative power")
            raise ValueError("negative power of a non-monomial")
        result, base = self._new([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.val, self.coeffs))

    def divmod(self, other):
        """Euclidean division of polynomials (nonnegative valuations)."""
        if not other.coeffs:
            raise DivisionByZero("division by the zero polynomial")
        q, r = self.field.kernel.right_divmod(self.dense(), other.dense(), 0)
        return self._new(q), self._new(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        """Division known to be exact; Laurent inputs allowed."""
        if not other.coeffs:
            raise DivisionByZero("division by the zero polynomial")
        a = self._new(self.coeffs)
        b = other._new(other.coeffs)
        q, r = a.divmod(b)
        if r:
            raise ValueError("division is not exact")
        return q.shift(self.val - other.val)

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        """Evaluate at an integer-coded element of K."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        if self.val:
            acc = F.mul(acc, F.pow(x, self.val))
        return acc

    def derivative(self):
        F = self.field
        terms = {}
        for k, c in self.terms().items():
            d = F.mul(F.from_int(k), c)
            if d:
                terms[k - 1] = d
        return YPolynomial.from_dict(F, terms, self.var)

    def theta(self, k=1):
        frob = self.field.frob
        return self._new([frob(c, k) for c in self.coeffs], self.val)

    def compose_power(self, e, var=None):
        """Substitute Y -> y^e."""
        terms = {k * e: c for k, c in self.terms().items()}
        return YPolynomial.from_dict(self.field, terms, var or self.var)

    def taylor_shift(self, z):
        """Coefficients of P(z + T) as a polynomial in T (val >= 0)."""
        F = self.field
        out = []
        for c in reversed(self.dense()):
            # out <- out*(z+T) + c
            nxt = [0] * (len(out) + 1)
            for i, a in enumerate(out):
                nxt[i] = F.add(nxt[i], F.mul(a, z))
                nxt[i + 1] = F.add(nxt[i + 1], a)
            nxt[0] = F.add(nxt[0], c)
            out = nxt
        return YPolynomial(F, out, 0, "T")

    def root_multiplicity(self, z):
        """Multiplicity of the root z (a polynomial with val >= 0)."""
        if not self.coeffs:
            raise ValueError("zero polynomial")
        shifted = self.taylor_shift(z)
        return shifted.val

    def __repr__(self):
        return f"YPolynomial({format_ypoly(self)})"

    def __str__(self):
        return format_ypoly(self)


def format_ypoly(P):
    F = P.field
    if not P.coeffs:
        return "0"
    parts = []
    for k in sorted(P.terms(), reverse=True):
        c = P[k]
        cs = F.format(c)
        if k == 0:
            parts.append(cs if "+" not in cs else f"({cs})")
            continue
        mono = P.var if k == 1 else f"{P.var}^{k}"
        if c == 1:
            parts.append(mono)
        elif "+" in cs:
            parts.append(f"({cs})*{mono}")
        else:
            parts.append(f"{cs}*{mono}")
    return "+".join(parts)


class YRational:
    """A rational function num/den over K in lowest terms, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = YPolynomial(num.field, [1], 0, num.var)
        if not den.coeffs:
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num, self.den = num, den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def from_poly(cls, P):
        return cls(P)

    def is_zero(self):
        return not self.num.coeffs

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_polynomial(self):
        return self.den.is_constant()

    def is_central(self):
        return self.num.is_central() and self.den.is_central()

    def _coerce(self, other):
        if isinstance(other, YRational):
            return other
        if isinstance(other, YPolynomial):
            return YRational(other)
        if isinstance(other, int):
            return YRational(YPolynomial(self.field, [self.field.from_int(other)], 0, self.num.var))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return YRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return YRational(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return YRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.coeffs:
            raise DivisionByZero("inverse of zero")
        return YRational(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e):
        if e < 0:
            if not self.num.coeffs:
                raise ZeroToNegativePower("0 raised to a negative power")
            return YRational(self.den**-e, self.num**-e)
        return YRational(self.num**e, self.den**e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def theta(self, k=1):
        return YRational(self.num.theta(k), self.den.theta(k))

    def __call__(self, x):
        F = self.field
        d = self.den(x)
        if d == 0:
            raise DivisionByZero("evaluation at a pole")
        return F.div(self.num(x), d)

    def derivative(self):
        n, d = self.num, self.den
        return YRational(n.derivative() * d - n * d.derivative(), d * d)

    def compose_power(self, e, var=None):
        return YRational(self.num.compose_power(e, var), self.den.compose_power(e, var))

    def with_var(self, var):
        return YRational(self.num.with_var(var), self.den.with_var(var), _reduced=True)

    def central_form(self):
        """Rewrite as A/D with D in F[Y] monic, A in K[Y^{+-1}]."""
        r = self.field.r
        A, D = self.num, self.den
        for k in range(1, r):
            c = self.den.theta(k)
            A = A * c
            D = D * c
        lead = D.lead()
        inv = self.field.inv(lead)
        return A.scale(inv), D.scale(inv)

    def __repr__(self):
        return f"YRational({self})"

    def __str__(self):
        if self.den.is_constant():
            return format_ypoly(self.num)
        return f"({format_ypoly(self.num)})/({format_ypoly(self.den)})"


def _reduce(num, den):
    F = num.field
    if not num.coeffs:
        return num._new(()), YPolynomial(F, [1], 0, num.var)
    # move monomial parts into the valuation of num
    shift = num.val - den.val
    n = YPolynomial(F, num.coeffs, 0, num.var)
    d = YPolynomial(F, den.coeffs, 0, num.var)
    g = n.gcd(d)
    if g.degree() > 0:
        n = n.exact_div(g)
        d = d.exact_div(g)
    inv = F.inv(d.lead())
    return n.scale(inv).shift(shift), d.scale(inv)
