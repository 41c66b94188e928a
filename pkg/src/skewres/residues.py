"""Skew residues at rational points, at 0 and at infinity, and the checks
relating them to classical residues.

Points are nonzero integer codes of elements of F, or the tags
:data:`ZERO` and :data:`INF` for the two special charts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .commutative import INF, check_split, residue_at, residue_at_zeta, substitute_root
from .errors import (
    CharacteristicDividesR,
    NonCentralCoefficient,
    NotRegular,
    SimplePoleRequired,
    ZeroPoint,
)
from .morphisms import apply_morphism
from .rational import SkewRationalFunction, central_fraction, frac_mul, frac_section
from .skew import twisted_norm
from .taylor import QuotientElement, expand, expand_at_infinity, expand_at_zero, order_and_principal
from .ypoly import YPolynomial, YRational

ZERO = "0"

__all__ = [
    "ZERO", "INF", "ResidueRecord", "sres", "sres_zero", "sres_infinity",
    "bridge_check", "residue_sum", "zeta_root_check", "gamma_star",
    "is_gamma_regular", "chvar_check", "quotient_morphism_exists", "pole_support",
]


@dataclass(frozen=True)
class ResidueRecord:
    """Residue data at one point.

    ``full`` is the T^{-1} coefficient in A/NA (None at 0 and infinity);
    ``partial[j]`` is its j-th section evaluated at Y = z.
    """

    point: object
    full: QuotientElement | None
    partial: tuple

    def rebuild_full(self, field):
        """Reassemble sum_j partial_j X^j as an element of A/NA."""
        if self.point in (ZERO, INF):
            return None
        return QuotientElement(field, self.point, 1, [[c] for c in self.partial])


class Comparison(NamedTuple):
    lhs: object
    rhs: object
    equal: bool


def _frac(f):
    return SkewRationalFunction.coerce(f)


def _finite_point(F, z):
    if z == 0:
        raise ZeroPoint("use the ZERO tag for the chart at 0")
    if not F.in_base(z):
        raise ValueError("rational points must lie in F")


def sres(f, z, method="canonical") -> ResidueRecord:
    f = _frac(f)
    F = f.field
    if z == ZERO:
        return ResidueRecord(ZERO, None, tuple(sres_zero(f, j) for j in range(F.r)))
    if z == INF:
        return ResidueRecord(INF, None, tuple(sres_infinity(f, j) for j in range(F.r)))
    _finite_point(F, z)
    if method == "canonical" and F.r % F.p == 0:
        raise CharacteristicDividesR(f"p = {F.p} divides r = {F.r}")
    series = expand(f, z, 0, method)
    coeff = series.coefficient(-1)
    full = QuotientElement(F, z, 1, [[c] for c in coeff])
    return ResidueRecord(z, full, tuple(coeff))


def sres_zero(f, j):
    """Coefficient of X^{j-r} in the expansion at 0."""
    f = _frac(f)
    r = f.field.r
    return expand_at_zero(f, j - r + 1).coefficient(j - r)


def sres_infinity(f, j):
    """Opposite of the coefficient of X~^{r-j} in the expansion at infinity."""
    f = _frac(f)
    F = f.field
    r = F.r
    return F.neg(expand_at_infinity(f, r - j + 1).coefficient(r - j))


def default_method(F):
    return "canonical" if F.r % F.p else "hensel"


def pole_support(f):
    """Finite nonzero poles with their orders."""
    f = _frac(f)
    F = f.field
    out = {}
    for z in range(1, F.p):
        k = f.den.root_multiplicity(z)
        if k:
            out[z] = k
    return out


def _partial_order(f, z, j, method):
    k = f.den.root_multiplicity(z)
    if k == 0:
        return None
    series = expand(f, z, 0, method)
    if series.is_zero():
        return None
    return order_and_principal(series).ord_j[j]


def bridge_check(f, z, j, method=None) -> Comparison:
    """Partial skew residue against the classical residue of sec_j(f)."""
    f = _frac(f)
    F = f.field
    method = method or default_method(F)
    check_split(f.den)
    S = frac_section(f, j)
    if z == ZERO:
        skew = sres_zero(f, j)
        comm = residue_at(S, 0)
    elif z == INF:
        skew = sres_infinity(f, j)
        comm = residue_at(S, INF)
    else:
        _finite_point(F, z)
        if j % F.r:
            o = _partial_order(f, z, j, method)
            if o is not None and o < -1:
                raise SimplePoleRequired(f"partial order {o} < -1 at z = {z}")
        skew = sres(f, z, method).partial[j]
        comm = residue_at(S, z)
    return Comparison(skew, comm, skew == comm)


def residue_sum(f, j, method=None):
    """Sum of the j-th partial residues over F \\ {0}, 0 and infinity.

    Returns (sum, breakdown); the breakdown lists the finite poles in
    increasing order, then ZERO, then INF.
    """
    f = _frac(f)
    F = f.field
    if not f.num.coeffs:
        return 0, {}
    method = method or default_method(F)
    check_split(f.den)
    poles = pole_support(f)
    if j % F.r:
        bad = [z for z, k in poles.items() if k > 1]
        if bad:
            raise SimplePoleRequired(f"pole of order > 1 at z = {bad[0]}")
    breakdown = {}
    for z in sorted(poles):
        breakdown[z] = sres(f, z, method).partial[j]
    breakdown[ZERO] = sres_zero(f, j)
    breakdown[INF] = sres_infinity(f, j)
    return F.sum(breakdown.values()), breakdown


def zeta_root_check(f, j, zeta) -> Comparison:
    """Canonical partial residue at zeta^r against r zeta^{-j} res_zeta(y^{j+r-1} sec_j(f)(y^r) dy)."""
    f = _frac(f)
    F = f.field
    r = F.r
    if r % F.p == 0:
        raise CharacteristicDividesR(f"p = {F.p} divides r = {F.r}")
    if zeta == 0:
        raise ZeroPoint("zeta must be nonzero")
    z = F.pow(zeta, r)
    lhs = sres(f, z, "canonical").partial[j]
    S = substitute_root(frac_section(f, j))
    S = YRational(S.num.shift(j + r - 1), S.den)
    res = residue_at_zeta(S, zeta)
    rhs = F.mul(F.mul(F.from_int(r), F.pow(zeta, -j)), res)
    return Comparison(lhs, rhs, lhs == rhs)


def _rational(C):
    if isinstance(C, YRational):
        return C
    if isinstance(C, YPolynomial):
        return YRational(C)
    raise TypeError("C must be a YPolynomial or a YRational")


def gamma_Z(C) -> YRational:
    """Z = gamma(Y) = N_r(C) Y."""
    C = _rational(C)
    F = C.field
    N = twisted_norm(C, F.r)
    return _rational(N) * YRational(YPolynomial(F, [0, 1]))


def is_gamma_regular(C, z) -> bool:
    C = _rational(C)
    if z == 0 or not C:
        return False
    if C.den(z) == 0:
        return False
    return C.num(z) != 0


def gamma_star(C, z):
    """The value Z(z) taken by Z = N_r(C) Y at a regular point."""
    if not is_gamma_regular(C, z):
        raise NotRegular(f"C has a zero or a pole at z = {z}")
    return gamma_Z(C)(z)


def chvar_check(C, z, f, method="canonical") -> Comparison:
    """Residue of f at gamma*z pushed through gamma, against sres_z(gamma(f) dZ/dY).

    ``method`` is "canonical" (central C, p not dividing r, any pole order)
    or "simple-pole" (f has at most a simple pole at gamma*z).
    """
    C = _rational(C)
    f = _frac(f)
    F = f.field
    if method == "canonical":
        if F.r % F.p == 0:
            raise CharacteristicDividesR(f"p = {F.p} divides r = {F.r}")
        if not C.is_central():
            raise NonCentralCoefficient("the canonical change of variables needs a central C")
        expansion = "canonical"
    elif method == "simple-pole":
        expansion = default_method(F)
    else:
        raise ValueError(f"unknown method {method!r}")
    w = gamma_star(C, z)
    Z = gamma_Z(C)
    dZ = Z.derivative()
    if dZ(z) == 0:
        # Y -> Z is ramified at z: residues pick up the ramification index
        raise NotRegular(f"dZ/dY vanishes at z = {z}")
    if method == "simple-pole" and f.den.root_multiplicity(w) > 1:
        raise SimplePoleRequired(f"f has a pole of order > 1 at {w}")
    rec = sres(f, w, expansion)
    cz = C(z)
    pushed = tuple(F.mul(b, F.norm_partial(cz, i)) for i, b in enumerate(rec.partial))
    lhs = ResidueRecord(z, QuotientElement(F, z, 1, [[c] for c in pushed]), pushed)
    g = frac_mul(apply_morphism(C, f), central_fraction(dZ))
    rhs = sres(g, z, expansion)
    return Comparison(lhs, rhs, lhs.partial == rhs.partial)


def quotient_morphism_exists(z1, z2, field):
    """(True, c) with N_{K/F}(c) = z1/z2, c the smallest code that works."""
    F = field
    if z1 == 0 or z2 == 0:
        raise ZeroPoint("points must be nonzero")
    target = F.div(z1, z2)
    for c in range(1, F.order):
        if F.norm(c) == target:
            return True, c
    return False, None  # pragma: no cover - the norm is onto
