"""Laurent skew polynomials in K[X^{+-1}; theta] and their Euclidean structure.

A single class covers both the polynomial ring and its Laurent
localization: a value is ``X^val * (c_0 + c_1 X + ...)`` with the
coefficients written on the left, and the twist is ``X a = theta(a) X``.
"""

from __future__ import annotations

import math

from .errors import BothZero, DivisionByZero, NegativeValuation, ZeroInput
from .ypoly import YPolynomial, YRational, _strip


class SkewPolynomial:
    __slots__ = ("field", "val", "coeffs")

    def __init__(self, field, coeffs=(), val=0):
        self.field = field
        self.val, self.coeffs = _strip(val, list(coeffs))

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def monomial(cls, field, c, k):
        return cls(field, [c], k)

    @classmethod
    def X(cls, field, k=1):
        return cls(field, [1], k)

    @classmethod
    def from_dict(cls, field, terms):
        if not terms:
            return cls(field)
        lo, hi = min(terms), max(terms)
        out = [0] * (hi - lo + 1)
        for k, c in terms.items():
            out[k - lo] = field.add(out[k - lo], c)
        return cls(field, out, lo)

    @classmethod
    def from_central(cls, P: YPolynomial):
        """Embed a polynomial in Y = X^r (any coefficients over K)."""
        r = P.field.r
        return cls.from_dict(P.field, {k * r: c for k, c in P.terms().items()})

    @classmethod
    def from_sections(cls, field, sections):
        """Inverse of :func:`section`: ``sum_j sections[j] X^j``."""
        r = field.r
        terms = {}
        for j, S in enumerate(sections):
            for k, c in S.terms().items():
                terms[j + k * r] = field.add(terms.get(j + k * r, 0), c)
        return cls.from_dict(field, terms)

    def _new(self, coeffs, val=0):
        return SkewPolynomial(self.field, coeffs, val)

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
        if not self.coeffs:
            return []
        if self.val < 0:
            raise NegativeValuation("skew polynomial has negative powers of X")
        return [0] * self.val + list(self.coeffs)

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_polynomial(self):
        return not self.coeffs or self.val >= 0

    def is_central(self):
        r = self.field.r
        return all(k % r == 0 and self.field.in_base(c) for k, c in self.terms().items())

    def is_constant(self):
        return not self.coeffs or (self.val == 0 and len(self.coeffs) == 1)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SkewPolynomial):
            return other
        if isinstance(other, int):
            return self._new([self.field.from_int(other)])
        if isinstance(other, YPolynomial):
            return SkewPolynomial.from_central(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
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
        return skew_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return skew_mul(other, self)

    def __pow__(self, e):
        if e < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials have Laurent inverses")
            return self.monomial_inverse() ** (-e)
        result, base = self._new([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monomial_inverse(self):
        """(a X^k)^{-1} = theta^{-k}(a^{-1}) X^{-k}."""
        F = self.field
        if len(self.coeffs) != 1:
            raise ValueError("not a monomial")
        k = self.val
        return self._new([F.frob(F.inv(self.coeffs[0]), -k)], -k)

    def scale_left(self, c):
        mul = self.field.mul
        return self._new([mul(c, x) for x in self.coeffs], self.val)

    def shift(self, k):
        """Multiply on the right by X^k."""
        return self._new(self.coeffs, self.val + k)

    def theta(self, k=1):
        """Apply theta^k to every coefficient, i.e. conjugate by X^k."""
        frob = self.field.frob
        return self._new([frob(c, k) for c in self.coeffs], self.val)

    def monic(self):
        """Left-multiply by the inverse of the leading coefficient."""
        if not self.coeffs:
            return self
        return self.scale_left(self.field.inv(self.coeffs[-1]))

    def right_monic(self):
        """Right-multiply by the unit making the leading coefficient 1."""
        if not self.coeffs:
            return self
        F = self.field
        u = F.frob(F.inv(self.coeffs[-1]), -self.degree())
        return self * SkewPolynomial.constant(F, u)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.val, self.coeffs))

    def __repr__(self):
        from .parsing import format_skew

        return f"SkewPolynomial({format_skew(self)})"

    def __str__(self):
        from .parsing import format_skew

        return format_skew(self)


def skew_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    if not f.coeffs or not g.coeffs:
        return SkewPolynomial(f.field)
    prod = f.field.kernel.skew_mul(list(f.coeffs), list(g.coeffs), f.val, 1)
    return SkewPolynomial(f.field, prod, f.val + g.val)


def _check_division(A, B):
    if not B.coeffs:
        raise DivisionByZero("division by the zero skew polynomial")
    if not A.is_polynomial() or not B.is_polynomial():
        raise NegativeValuation("Euclidean division needs nonnegative valuations")


def right_divide(A: SkewPolynomial, B: SkewPolynomial):
    """(Q, R) with A = Q*B + R and deg R < deg B."""
    _check_division(A, B)
    q, r = A.field.kernel.right_divmod(A.dense(), B.dense(), 1)
    return SkewPolynomial(A.field, q), SkewPolynomial(A.field, r)


def left_divide(A: SkewPolynomial, B: SkewPolynomial):
    """(Q, R) with A = B*Q + R and deg R < deg B."""
    _check_division(A, B)
    q, r = A.field.kernel.left_divmod(A.dense(), B.dense(), 1)
    return SkewPolynomial(A.field, q), SkewPolynomial(A.field, r)


def _euclid_right(f, g):
    """Extended Euclid with right divisions.

    Returns (d, u, v, s, t) with u f + v g = d and s f + t g = 0, where the
    last relation is the one produced when the remainder vanishes.
    """
    F = f.field
    one, zero = SkewPolynomial.one(F), SkewPolynomial.zero(F)
    r0, r1 = f, g
    u0, v0, u1, v1 = one, zero, zero, one
    while r1:
        q, rem = right_divide(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return r0, u0, v0, u1, v1


def _euclid_left(f, g):
    F = f.field
    one, zero = SkewPolynomial.one(F), SkewPolynomial.zero(F)
    r0, r1 = f, g
    u0, v0, u1, v1 = one, zero, zero, one
    while r1:
        q, rem = left_divide(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - u1 * q
        v0, v1 = v1, v0 - v1 * q
    return r0, u0, v0, u1, v1


def euclid(kind, f: SkewPolynomial, g: SkewPolynomial):
    """gcd/lcm in the four flavours.

    ``rgcd``: monic d with A f + A g = A d; returns (d, u, v), u f + v g = d.
    ``lgcd``: monic d with f A + g A = d A; returns (d, u, v), f u + g v = d.
    ``llcm``: monic generator of A f cap A g.
    ``rlcm``: monic generator of f A cap g A.
    """
    F = f.field
    if kind in ("rgcd", "lgcd"):
        if not f and not g:
            raise BothZero("gcd of two zero polynomials")
        if kind == "rgcd":
            d, u, v, _, _ = _euclid_right(f, g)
            inv = SkewPolynomial.constant(F, F.inv(d.lead()))
            return inv * d, inv * u, inv * v
        d, u, v, _, _ = _euclid_left(f, g)
        c = SkewPolynomial.constant(F, F.frob(F.inv(d.lead()), -d.degree()))
        return d * c, u * c, v * c
    if kind in ("llcm", "rlcm"):
        if not f or not g:
            raise ZeroInput("lcm needs two nonzero polynomials")
        if kind == "llcm":
            _, _, _, s, _ = _euclid_right(f, g)
            return (s * f).monic()
        _, _, _, s, _ = _euclid_left(f, g)
        return (f * s).right_monic()
    raise ValueError(f"unknown kind {kind!r}")


def rgcd(f, g):
    return euclid("rgcd", f, g)[0]


def lgcd(f, g):
    return euclid("lgcd", f, g)[0]


def llcm(f, g):
    return euclid("llcm", f, g)


def rlcm(f, g):
    return euclid("rlcm", f, g)


def central_right_multiple(f: SkewPolynomial):
    """(g, N) with f g = N = g f and N in F[Y] monic of minimal degree."""
    if not f.coeffs:
        raise ZeroInput("central multiple of zero")
    F = f.field
    p, r = F.p, F.r
    if not f.is_polynomial():
        raise NegativeValuation("central_right_multiple needs a polynomial")
    n = f.degree()
    # Remainders of Y^i modulo f on the left (Y^i = f Q + R), as F-vectors.
    dim = r * n
    rows = []  # echelon rows: (vector, combination over Y^0..Y^i)
    pivots = []
    Yi = SkewPolynomial.one(F)
    i = 0
    while True:
        _, R = left_divide(Yi, f)
        dense = R.dense()
        dense += [0] * (n - len(dense))
        vec = []
        for c in dense:
            vec.extend(F.digits(c))
        combo = [0] * (i + 1)
        combo[i] = 1
        for (row, rc), piv in zip(rows, pivots):
            a = vec[piv]
            if a:
                for k in range(dim):
                    vec[k] = (vec[k] - a * row[k]) % p
                for k in range(len(rc)):
                    combo[k] = (combo[k] - a * rc[k]) % p
        piv = next((k for k in range(dim) if vec[k]), None)
        if piv is None:
            break
        inv = pow(vec[piv], -1, p)
        rows.append(([x * inv % p for x in vec], [x * inv % p for x in combo]))
        pivots.append(piv)
        Yi = Yi.shift(r)
        i += 1
    N = YPolynomial(F, combo)
    g, R = left_divide(SkewPolynomial.from_central(N), f)
    assert not R
    return g, N


def section(f: SkewPolynomial, j: int) -> YPolynomial:
    """sec_j(f) = sum_i a_{j + i r} Y^i."""
    r = f.field.r
    terms = {}
    for k, c in f.terms().items():
        if (k - j) % r == 0:
            terms[(k - j) // r] = c
    return YPolynomial.from_dict(f.field, terms)


def sections(f: SkewPolynomial):
    return [section(f, j) for j in range(f.field.r)]


def _as_rational(C):
    if isinstance(C, YRational):
        return C
    if isinstance(C, YPolynomial):
        return YRational(C)
    raise TypeError("expected a YPolynomial or YRational")


def twisted_norm(C, n: int):
    """N_n(C): C theta(C) ... theta^{n-1}(C); N_{-n}(C) = theta^{-n}(N_n(C))^{-1}."""
    from .errors import ZeroToNegativePower

    polynomial = isinstance(C, YPolynomial)
    if n >= 0:
        acc = None
        for k in range(n):
            t = C.theta(k)
            acc = t if acc is None else acc * t
        if acc is None:
            F = C.field
            one = YPolynomial(F, [1])
            return one if polynomial else YRational(one)
        return acc
    if not C:
        raise ZeroToNegativePower("twisted norm of 0 with negative index")
    Cr = _as_rational(C)
    pos = twisted_norm(Cr, -n).theta(n)
    res = pos.inverse()
    if polynomial and res.den.is_constant():
        return res.num
    return res


def twisted_trace(C, n: int):
    """Tr_n(C): C + theta(C) + ... ; Tr_{-n}(C) = -(theta^{-1}(C) + ... + theta^{-n}(C))."""
    if n >= 0:
        acc = C * 0
        for k in range(n):
            acc = acc + C.theta(k)
        return acc
    acc = C * 0
    for k in range(1, -n + 1):
        acc = acc - C.theta(-k)
    return acc
