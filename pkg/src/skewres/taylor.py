"""Taylor expansions of skew rational functions at Y = z, at 0 and at infinity.

Elements of the quotient ``A/N^m A`` (``N = Y - z``, z a nonzero element of
F) are stored by their sections written in ``T = Y - z``: ``r`` rows of ``m``
coefficients in K.  Since N is central with coefficients in F, theta acts
on these rows coefficientwise, which keeps all the arithmetic local.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .commutative import series_div
from .errors import (
    CharacteristicDividesR,
    InsufficientPrecision,
    MixedModuli,
    ZeroPoint,
    ZeroToPrecision,
)
from .field import binomial_fraction
from .rational import SkewRationalFunction
from .skew import SkewPolynomial, section, twisted_norm
from .ypoly import YPolynomial

# -- truncated series over K -----------------------------------------------


def _smul(a, b, n, F):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            row = F._mul[x]
            for j in range(min(len(b), n - i)):
                if b[j]:
                    out[i + j] = F._add[out[i + j]][row[b[j]]]
    return out


def _pad(a, n):
    a = list(a[:n])
    return a + [0] * (n - len(a))


def laurent_at(P: YPolynomial, z, m):
    """P(z + T) mod T^m for a Laurent polynomial P in Y (z != 0)."""
    F = P.field
    if m <= 0 or not P.coeffs:
        return [0] * max(m, 0)
    P0 = YPolynomial(F, P.coeffs)
    base = _pad(P0.taylor_shift(z).dense(), m)
    v = P.val
    if v == 0:
        return base
    lin = YPolynomial(F, [z, 1])
    pw = _pad((lin ** abs(v)).dense(), m)
    if v > 0:
        return _smul(base, pw, m, F)
    return series_div(base, pw, m, F)


# -- quotient algebra A/N^m A ------------------------------------------------


class QuotientElement:
    """An element of A/(Y - z)^m A."""

    __slots__ = ("field", "z", "m", "rows")

    def __init__(self, field, z, m, rows):
        self.field = field
        self.z = z
        self.m = m
        self.rows = tuple(tuple(_pad(row, m)) for row in rows)

    @classmethod
    def reduce(cls, f, z, m):
        """Canonical image of a Laurent skew polynomial."""
        if isinstance(f, SkewRationalFunction):
            raise TypeError("reduce a polynomial; fractions go through expand_*")
        F = f.field
        if z == 0:
            raise ZeroPoint("the point must be nonzero")
        return cls(F, z, m, [laurent_at(section(f, j), z, m) for j in range(F.r)])

    @classmethod
    def zero(cls, field, z, m):
        return cls(field, z, m, [[0] * m for _ in range(field.r)])

    @classmethod
    def one(cls, field, z, m):
        rows = [[0] * m for _ in range(field.r)]
        if m:
            rows[0][0] = 1
        return cls(field, z, m, rows)

    @property
    def rep(self) -> SkewPolynomial:
        """Representative of X-degree < r m."""
        F = self.field
        T = YPolynomial(F, [F.neg(self.z), 1])
        secs = []
        for row in self.rows:
            acc = YPolynomial(F, [])
            for c in reversed(row):
                acc = acc * T + YPolynomial(F, [c])
            secs.append(acc)
        return SkewPolynomial.from_sections(F, secs)

    def partial(self, j):
        """sec_j evaluated at Y = z (the T^0 entry of row j)."""
        return self.rows[j][0] if self.m else 0

    def __bool__(self):
        return any(any(row) for row in self.rows)

    def _check(self, other):
        if self.z != other.z or self.m != other.m or self.field != other.field:
            raise MixedModuli("quotient elements live modulo different powers")

    def __add__(self, other):
        self._check(other)
        F = self.field
        return QuotientElement(F, self.z, self.m,
                               [[F.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        F = self.field
        return QuotientElement(F, self.z, self.m, [[F.neg(a) for a in row] for row in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return quotient_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return (self.z, self.m, self.rows) == (other.z, other.m, other.rows)

    def __hash__(self):
        return hash((self.z, self.m, self.rows))

    def __repr__(self):
        return f"QuotientElement(z={self.z}, m={self.m}, rep={self.rep})"


def _rows_mul(F, z, m, A, B):
    r = F.r
    zT = _pad([z, 1], m)
    out = [[0] * m for _ in range(r)]
    for i in range(r):
        if not any(A[i]):
            continue
        for j in range(r):
            if not any(B[j]):
                continue
            tb = [F.frob(c, i) for c in B[j]]
            prod = _smul(A[i], tb, m, F)
            k = i + j
            if k >= r:
                k -= r
                prod = _smul(prod, zT, m, F)
            out[k] = [F.add(a, b) for a, b in zip(out[k], prod)]
    return out


def quotient_mul(u: QuotientElement, v: QuotientElement) -> QuotientElement:
    u._check(v)
    return QuotientElement(u.field, u.z, u.m, _rows_mul(u.field, u.z, u.m, u.rows, v.rows))


# -- series ------------------------------------------------------------------


@dataclass
class TaylorSeries:
    """sum_n coeffs[n] T^(valuation + n) + O(T^prec) over A/NA.

    Each coefficient is an r-tuple: its sections evaluated at Y = z.
    """

    field: object
    z: int
    valuation: int
    data: list
    prec: int

    def __post_init__(self):
        r = self.field.r
        data = [tuple(c) for c in self.data]
        n_keep = max(0, self.prec - self.valuation)
        data = data[:n_keep]
        while data and not any(data[0]):
            data.pop(0)
            self.valuation += 1
        while data and not any(data[-1]):
            data.pop()
        if not data:
            self.valuation = self.prec
        self.data = data
        self._zero = (0,) * r

    def coefficient(self, n):
        i = n - self.valuation
        if n >= self.prec:
            raise InsufficientPrecision(f"T^{n} is beyond the precision O(T^{self.prec})")
        return self.data[i] if 0 <= i < len(self.data) else self._zero

    @property
    def coeffs(self):
        return [QuotientElement(self.field, self.z, 1, [[c] for c in row]) for row in self.data]

    def is_zero(self):
        return not self.data

    def terms(self):
        return {self.valuation + i: c for i, c in enumerate(self.data) if any(c)}

    def __mul__(self, other):
        F = self.field
        if self.z != other.z:
            raise MixedModuli("series at different points")
        v = self.valuation + other.valuation
        prec = min(self.prec + other.valuation, other.prec + self.valuation)
        if self.is_zero() or other.is_zero():
            return TaylorSeries(F, self.z, prec, [], prec)
        n = prec - v
        out = []
        for k in range(max(n, 0)):
            acc = [0] * F.r
            for i in range(k + 1):
                if i < len(self.data) and k - i < len(other.data):
                    prod = _rows_mul(F, self.z, 1, [[c] for c in self.data[i]], [[c] for c in other.data[k - i]])
                    acc = [F.add(a, b[0]) for a, b in zip(acc, prod)]
            out.append(acc)
        return TaylorSeries(F, self.z, v, out, prec)

    def same_to(self, other, prec=None):
        """Equality of all coefficients below a common precision."""
        top = min(self.prec, other.prec) if prec is None else prec
        lo = min(self.valuation, other.valuation)
        return all(self.coefficient(n) == other.coefficient(n) for n in range(lo, top))

    def section(self, j):
        """sec_j of the series as {exponent: element of K}."""
        return {self.valuation + i: c[j] for i, c in enumerate(self.data) if c[j]}


@dataclass
class XSeries:
    """Truncated Laurent series in X (chart 'zero') or in X~ = X^{-1} (chart 'infinity')."""

    field: object
    chart: str
    valuation: int
    data: list
    prec: int

    def __post_init__(self):
        data = list(self.data)[: max(0, self.prec - self.valuation)]
        while data and data[0] == 0:
            data.pop(0)
            self.valuation += 1
        while data and data[-1] == 0:
            data.pop()
        if not data:
            self.valuation = self.prec
        self.data = data

    def coefficient(self, n):
        if n >= self.prec:
            raise InsufficientPrecision(f"exponent {n} is beyond the precision {self.prec}")
        i = n - self.valuation
        return self.data[i] if 0 <= i < len(self.data) else 0

    def is_zero(self):
        return not self.data

    def terms(self):
        return {self.valuation + i: c for i, c in enumerate(self.data) if c}


# -- Hensel lift ---------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibleLift:
    """C = 1 + a Z with N(C X) = N_r(C) Y - z divisible by (Y - z)^m."""

    z: int
    m: int
    C: YPolynomial
    a: int
    Z: YPolynomial = dc_field(compare=False, default=None)

    @property
    def field(self):
        return self.C.field


def hensel_lift(z, m, field) -> AdmissibleLift:
    F = field
    if z == 0:
        raise ZeroPoint("hensel_lift needs z != 0")
    if m < 1:
        raise ValueError("m must be at least 1")
    a = F.trace_one()
    r = F.r
    N = YPolynomial(F, [F.neg(z), 1])
    Yp = YPolynomial(F, [0, 1])
    Z = YPolynomial(F, [])
    one = YPolynomial(F, [1])
    Nk = N
    for k in range(1, m):
        C = one + Z.scale(a)
        E = twisted_norm(C, r) * Yp - YPolynomial(F, [z])
        S = E.exact_div(Nk)
        Zc = F.neg(F.div(S(z), z))
        Z = Z + Nk.scale(Zc)
        Nk = Nk * N
    return AdmissibleLift(z, m, one + Z.scale(a), a, Z)


def lift_defect(lift: AdmissibleLift) -> YPolynomial:
    """N(C X) = N_r(C) Y - z, which must vanish modulo (Y - z)^m."""
    F = lift.field
    return twisted_norm(lift.C, F.r) * YPolynomial(F, [0, 1]) - YPolynomial(F, [lift.z])


# -- expansions at z -----------------------------------------------------------


def _pole_order(f: SkewRationalFunction, z):
    return f.den.root_multiplicity(z)


def _central_tail(f, z, k, n):
    """u^{-1} mod T^n where den(z + T) = T^k u(T)."""
    F = f.field
    shifted = f.den.taylor_shift(z).dense()
    u = shifted[k:]
    return series_div([1], u, n, F)


def _finish(F, z, k, prec, rows, f):
    """Multiply numerator rows by the central u^{-1}, shift by T^{-k}."""
    n = prec + k
    if n <= 0:
        return TaylorSeries(F, z, prec, [], prec)
    uinv = _central_tail(f, z, k, n)
    rows = [_smul(row, uinv, n, F) for row in rows]
    data = [tuple(rows[j][t] for j in range(F.r)) for t in range(n)]
    return TaylorSeries(F, z, -k, data, prec)


def _check_point(F, z):
    if z == 0:
        raise ZeroPoint("expansion point must be nonzero")
    if not F.in_base(z):
        raise ValueError("expansion point must lie in F")


def expand_admissible(f, lift: AdmissibleLift, prec) -> TaylorSeries:
    """tau_z(f) for the Taylor map attached to the lift, up to O(T^prec)."""
    f = SkewRationalFunction.coerce(f)
    F = f.field
    z = lift.z
    _check_point(F, z)
    k = _pole_order(f, z)
    n = prec + k
    if lift.m < n:
        raise InsufficientPrecision(f"lift precision m = {lift.m} < prec + pole order = {n}")
    if n <= 0:
        return TaylorSeries(F, z, prec, [], prec)
    rows = admissible_rows(f.num, lift, n)
    return _finish(F, z, k, prec, rows, f)


def _iota_rows(lift, n):
    F = lift.field
    return [laurent_at(twisted_norm(lift.C, j), lift.z, n) for j in range(F.r)]


def admissible_rows(num: SkewPolynomial, lift, n):
    """Series coefficients of tau(num) mod T^n, section by section.

    Peels off g_0 = R mod N, then R <- (R - iota(g_0)) / N, where
    iota(sum b_j X^j) = sum b_j N_j(C) X^j.
    """
    F = num.field
    R = QuotientElement.reduce(num, lift.z, n).rows
    R = [list(row) for row in R]
    iota = _iota_rows(lift, n)
    out = [[0] * n for _ in range(F.r)]
    for t in range(n):
        for j in range(F.r):
            g = R[j][0]
            out[j][t] = g
            row = R[j]
            if g:
                w = iota[j]
                row = [F.sub(a, F.mul(g, b)) for a, b in zip(row, w)]
            R[j] = row[1:] + [0]
    return out


def admissible_inverse(series: TaylorSeries, lift: AdmissibleLift, m) -> QuotientElement:
    """sum_n iota(g_n) N^n in A/N^m A, for a series without negative powers."""
    F = series.field
    if series.valuation < 0 and not series.is_zero():
        raise ValueError("series has a pole")
    iota = _iota_rows(lift, m)
    rows = [[0] * m for _ in range(F.r)]
    for e, c in series.terms().items():
        if e >= m:
            continue
        for j in range(F.r):
            if c[j]:
                for t in range(m - e):
                    rows[j][t + e] = F.add(rows[j][t + e], F.mul(c[j], iota[j][t]))
    return QuotientElement(F, lift.z, m, rows)


def canonical_rows(num: SkewPolynomial, z, n):
    """Coefficient of T^t is the n-th divided power of num reduced mod N."""
    F = num.field
    r, p = F.r, F.p
    out = [[0] * n for _ in range(F.r)]
    for i, a in num.terms().items():
        q, j = divmod(i, r)
        for t in range(n):
            c = binomial_fraction(i, r, t, p)
            if c:
                w = F.mul(a, F.mul(c, F.pow(z, q - t)))
                out[j][t] = F.add(out[j][t], w)
    return out


def expand_canonical(f, z, prec) -> TaylorSeries:
    f = SkewRationalFunction.coerce(f)
    F = f.field
    if F.r % F.p == 0:
        raise CharacteristicDividesR(f"p = {F.p} divides r = {F.r}")
    _check_point(F, z)
    k = _pole_order(f, z)
    n = prec + k
    if n <= 0:
        return TaylorSeries(F, z, prec, [], prec)
    return _finish(F, z, k, prec, canonical_rows(f.num, z, n), f)


def expand(f, z, prec, method="canonical"):
    """Dispatch on the method name ("canonical" or "hensel")."""
    f = SkewRationalFunction.coerce(f)
    if method == "canonical":
        return expand_canonical(f, z, prec)
    if method == "hensel":
        _check_point(f.field, z)
        k = _pole_order(f, z)
        return expand_admissible(f, hensel_lift(z, max(prec + k, 1), f.field), prec)
    raise ValueError(f"unknown method {method!r}")


# -- expansions at 0 and infinity -----------------------------------------------


def _inverse_series(P: YPolynomial, n):
    F = P.field
    return series_div([1], P.dense(), max(n, 0), F)


def expand_at_zero(f, prec) -> XSeries:
    """Expansion in K((X; theta)) up to O(X^prec)."""
    f = SkewRationalFunction.coerce(f)
    F = f.field
    r = F.r
    if not f.num.coeffs:
        return XSeries(F, "zero", prec, [], prec)
    v = f.num.val
    nterms = (prec - v + r - 1) // r if prec > v else 0
    s = _inverse_series(f.den, nterms)
    out = {}
    for i, a in f.num.terms().items():
        for kk, c in enumerate(s):
            e = i + r * kk
            if e >= prec:
                break
            if c:
                out[e] = F.add(out.get(e, 0), F.mul(a, c))
    return _xseries(F, "zero", out, prec)


def expand_at_infinity(f, prec) -> XSeries:
    """Expansion in X~ = X^{-1} (twist theta^{-1}) up to O(X~^prec)."""
    f = SkewRationalFunction.coerce(f)
    F = f.field
    r = F.r
    if not f.num.coeffs:
        return XSeries(F, "infinity", prec, [], prec)
    d = f.den.degree()
    rev = YPolynomial(F, list(reversed(f.den.dense())))
    # den^{-1} = Y~^d / rev(Y~)
    top = -f.num.degree()
    nterms = (prec - top + r - 1) // r if prec > top else 0
    s = [0] * d + _inverse_series(rev, max(nterms - d, 0))
    out = {}
    for i, a in f.num.terms().items():
        for kk, c in enumerate(s[:nterms]):
            e = -i + r * kk
            if e >= prec:
                break
            if c:
                out[e] = F.add(out.get(e, 0), F.mul(a, c))
    return _xseries(F, "infinity", out, prec)


def _xseries(F, chart, terms, prec):
    if not terms:
        return XSeries(F, chart, prec, [], prec)
    lo = min(terms)
    data = [0] * (max(terms) - lo + 1)
    for e, c in terms.items():
        data[e - lo] = c
    return XSeries(F, chart, lo, data, prec)


# -- orders and principal parts -----------------------------------------------


@dataclass
class OrderRecord:
    ord: int
    ord_j: dict
    principal: object
    principal_j: dict


def order_and_principal(series) -> OrderRecord:
    """ord, per-section orders, principal part and partial principal parts.

    ``ord_j[j]`` is None when section j vanishes to the available precision.
    """
    if series.is_zero():
        raise ZeroToPrecision("series is zero to its precision")
    F = series.field
    r = F.r
    if isinstance(series, TaylorSeries):
        ord_j, pj = {}, {}
        for j in range(r):
            sec = series.section(j)
            if sec:
                e = min(sec)
                ord_j[j], pj[j] = e, sec[e]
            else:
                ord_j[j], pj[j] = None, 0
        o = series.valuation
        principal = QuotientElement(F, series.z, 1, [[c] for c in series.data[0]])
        return OrderRecord(o, ord_j, principal, pj)
    terms = series.terms()
    ord_j, pj = {}, {}
    for j in range(r):
        es = [e for e in terms if e % r == j]
        if es:
            e = min(es)
            ord_j[j], pj[j] = (e - j) // r, terms[e]
        else:
            ord_j[j], pj[j] = None, 0
    return OrderRecord(series.valuation, ord_j, series.data[0], pj)
