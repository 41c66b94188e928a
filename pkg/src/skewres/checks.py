"""Randomized invariant suite behind ``skewres selftest``.

Each check draws its own instances from a seeded generator and returns the
number of trials that held.  A failing trial is reported, not raised.
"""

from __future__ import annotations

from . import sampling
from .errors import CharacteristicDividesR
from .field import get_field
from .morphisms import apply_derivation, apply_morphism, canonical_divided_power
from .parsing import format_fraction, parse_fraction
from .rational import SkewRationalFunction, frac_inverse
from .residues import gamma_Z, bridge_check, chvar_check, residue_sum, zeta_root_check, ZERO, INF
from .skew import central_right_multiple, euclid, left_divide, right_divide, section
from .taylor import expand_admissible, expand_canonical, hensel_lift, lift_defect
from .ypoly import YPolynomial


def check_division(F, R):
    A = sampling.skew_poly(R, F, 8)
    B = sampling.skew_poly(R, F, 4, nonzero=True)
    Q, Rm = right_divide(A, B)
    Q2, R2 = left_divide(A, B)
    return (Q * B + Rm == A and Rm.degree() < B.degree()
            and B * Q2 + R2 == A and R2.degree() < B.degree())


def check_gcd(F, R):
    f = sampling.skew_poly(R, F, 5, nonzero=True)
    g = sampling.skew_poly(R, F, 5, nonzero=True)
    d, u, v = euclid("rgcd", f, g)
    ok = u * f + v * g == d and not right_divide(f, d)[1] and not right_divide(g, d)[1]
    d2, u2, v2 = euclid("lgcd", f, g)
    ok = ok and f * u2 + g * v2 == d2 and not left_divide(f, d2)[1]
    m = euclid("llcm", f, g)
    ok = ok and not right_divide(m, f)[1] and not right_divide(m, g)[1]
    ok = ok and m.degree() == f.degree() + g.degree() - d.degree()
    m2 = euclid("rlcm", f, g)
    ok = ok and not left_divide(m2, f)[1] and not left_divide(m2, g)[1]
    return ok


def check_bound(F, R):
    f = sampling.skew_poly(R, F, 5, nonzero=True)
    g, N = central_right_multiple(f)
    from .skew import SkewPolynomial

    NN = SkewPolynomial.from_central(N)
    return N.is_central() and f * g == NN and g * f == NN


def check_inverse(F, R):
    f = sampling.fraction(R, F)
    if not f:
        return True
    inv = frac_inverse(f)
    return f * inv == 1 and inv * f == 1


def check_sections(F, R):
    f = sampling.laurent_poly(R, F)
    from .skew import SkewPolynomial

    return SkewPolynomial.from_sections(F, [section(f, j) for j in range(F.r)]) == f


def check_morphism(F, R):
    C = sampling.y_poly(R, F, 2)
    if not C:
        return True
    f = sampling.laurent_poly(R, F, 4, 1)
    g = sampling.laurent_poly(R, F, 4, 1)
    return apply_morphism(C, f * g) == apply_morphism(C, f) * apply_morphism(C, g)


def check_derivation(F, R):
    C = sampling.y_poly(R, F, 2)
    f = sampling.laurent_poly(R, F, 4, 1)
    g = sampling.laurent_poly(R, F, 4, 1)
    lhs = apply_derivation(C, f * g)
    return lhs == apply_derivation(C, f) * g + f * apply_derivation(C, g)


def check_canonical_nilpotent(F, R):
    if F.r % F.p == 0:
        return True
    f = SkewRationalFunction(sampling.laurent_poly(R, F))
    for _ in range(F.p):
        f = canonical_divided_power(f, 1)
    return not f


def check_taylor(F, R):
    if F.r % F.p == 0:
        return True
    z = sampling.base_element(R, F, nonzero=True)
    f = sampling.split_fraction(R, F, 2)
    g = sampling.split_fraction(R, F, 2)
    prec = 4
    kf, kg = f.den.root_multiplicity(z), g.den.root_multiplicity(z)
    L = hensel_lift(z, prec + kf + kg + 2, F)
    ok = (expand_canonical(f * g, z, prec).same_to(expand_canonical(f, z, prec + kg) * expand_canonical(g, z, prec + kf)))
    ok = ok and expand_admissible(f * g, L, prec).same_to(
        expand_admissible(f, L, prec + kg) * expand_admissible(g, L, prec + kf))
    return ok


def check_hensel(F, R):
    z = sampling.base_element(R, F, nonzero=True)
    m = R.randint(1, 6)
    d = lift_defect(hensel_lift(z, m, F))
    return not d or d.root_multiplicity(z) >= m


def check_residue_j0(F, R):
    f = sampling.split_fraction(R, F, 3)
    return residue_sum(f, 0)[0] == 0


def check_residue_all_j(F, R):
    f = sampling.split_fraction(R, F, 1, simple=True)
    return all(residue_sum(f, j)[0] == 0 for j in range(F.r))


def check_bridge(F, R):
    f = sampling.split_fraction(R, F, 1, simple=True)
    points = [ZERO, INF] + list(range(1, F.p))
    return all(bridge_check(f, z, j).equal for z in points for j in range(F.r))


def check_zeta(F, R):
    if F.r % F.p == 0:
        return True
    f = sampling.split_fraction(R, F, 3)
    zeta = sampling.base_element(R, F, nonzero=True)
    j = R.randrange(F.r)
    return zeta_root_check(f, j, zeta).equal


def check_chvar(F, R):
    if F.r % F.p == 0:
        return True
    while True:
        C = YPolynomial(F, [sampling.base_element(R, F, True)] + [sampling.base_element(R, F) for _ in range(R.randint(0, 1))])
        z = sampling.base_element(R, F, nonzero=True)
        if C(z) and gamma_Z(C).derivative()(z):
            break
    f = sampling.split_fraction(R, F, 3)
    return chvar_check(C, z, f, "canonical").equal


def check_roundtrip(F, R):
    f = sampling.fraction(R, F)
    return parse_fraction(format_fraction(f), F) == f


CHECKS = {
    "division": check_division,
    "ideals": check_gcd,
    "central-bound": check_bound,
    "inverse": check_inverse,
    "sections": check_sections,
    "morphism": check_morphism,
    "derivation": check_derivation,
    "canonical-nilpotent": check_canonical_nilpotent,
    "taylor-multiplicative": check_taylor,
    "hensel": check_hensel,
    "residue-j0": check_residue_j0,
    "residue-all-j": check_residue_all_j,
    "bridge": check_bridge,
    "zeta-root": check_zeta,
    "chvar": check_chvar,
    "print-parse": check_roundtrip,
}


def run_suite(config, seed=0, trials=10):
    """{check name: [passed, total]} for every check."""
    F = get_field(config)
    R = sampling.rng(seed)
    report = {}
    for name, fn in CHECKS.items():
        passed = 0
        for _ in range(trials):
            try:
                ok = fn(F, R)
            except CharacteristicDividesR:
                ok = True
            passed += bool(ok)
        report[name] = [passed, trials]
    return report
