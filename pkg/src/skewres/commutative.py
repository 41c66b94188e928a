"""Classical residues of rational functions of one variable over K.

This is the independent oracle that the skew residues are compared with.
Points are integer codes of elements of K, or :data:`INF`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsplitDenominator
from .ypoly import YPolynomial, YRational

INF = "inf"


def series_div(num, den, n, field):
    """First n coefficients of num/den as power series (den[0] != 0)."""
    F = field
    out = []
    inv0 = F.inv(den[0])
    rem = list(num[:n]) + [0] * max(0, n - len(num))
    for k in range(n):
        c = F.mul(rem[k], inv0)
        out.append(c)
        if c:
            for i in range(1, min(len(den), n - k)):
                if den[i]:
                    rem[k + i] = F.sub(rem[k + i], F.mul(c, den[i]))
    return out


def _polynomial_pair(C: YRational):
    n, d = C.num, C.den
    if n.coeffs and n.val < 0:
        d = d.shift(-n.val)
        n = n.shift(-n.val)
    return n, d


def split_multiplicities(D: YPolynomial):
    """Root multiplicities of D over the prime field, zero included."""
    F = D.field
    out = {}
    for z in F.base_elements():
        e = D.root_multiplicity(z)
        if e:
            out[z] = e
    return out


def check_split(D: YPolynomial):
    deg = D.degree()
    if deg <= 0:
        return
    if sum(split_multiplicities(D).values()) != deg:
        raise UnsplitDenominator(f"denominator {D} does not split over the prime field")


def residue_at(C: YRational, z, check=True):
    """res_z(C dY)."""
    if isinstance(C, YPolynomial):
        C = YRational(C)
    F = C.field
    if not C.num.coeffs:
        return 0
    n, d = _polynomial_pair(C)
    if check:
        check_split(d)
    if z == INF:
        dn, dd = n.degree(), d.degree()
        k = dn - dd + 1
        if k < 0:
            return 0
        rn = list(reversed(n.dense()))
        rd = list(reversed(d.dense()))
        return F.neg(series_div(rn, rd, k + 1, F)[k])
    ds = d.taylor_shift(z)
    e = ds.val
    if e == 0:
        return 0
    ns = n.taylor_shift(z).dense()
    u = list(ds.coeffs)
    return series_div(ns, u, e, F)[e - 1]


@dataclass(frozen=True)
class RhoValue:
    coords: tuple


def rho(C: YRational, z, check=True) -> RhoValue:
    """Coordinates res_z(theta^i(C) dY) for i = 0..r-1."""
    if isinstance(C, YPolynomial):
        C = YRational(C)
    r = C.field.r
    return RhoValue(tuple(residue_at(C.theta(i), z, check) for i in range(r)))


def substitute_root(C: YRational) -> YRational:
    """Replace Y by y^r."""
    if isinstance(C, YPolynomial):
        C = YRational(C)
    return C.compose_power(C.field.r, "y")


def residue_at_zeta(C: YRational, zeta):
    """res_zeta(C dy) for C already written in y (no splitting needed)."""
    return residue_at(C, zeta, check=False)
