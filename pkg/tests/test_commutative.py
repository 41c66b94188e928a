from skewres import INF, YPolynomial, YRational, residue_at, residue_at_zeta, rho, sampling, substitute_root
from skewres.commutative import series_div, split_multiplicities


def lin(F, z):
    return YPolynomial(F, [F.neg(z), 1])


def R(num, den):
    return YRational(num, den)


def test_examples(F25):
    F = F25
    one = YPolynomial(F, [1])
    assert residue_at(R(one, lin(F, 1) * lin(F, 2)), 1) == F.neg(1)
    for z in range(1, F.p):
        assert residue_at(R(one, lin(F, z)), z) == 1
        assert residue_at(R(one, lin(F, z)), INF) == F.neg(1)
        assert residue_at(YRational(YPolynomial(F, [1, 2, 3])), z) == 0


def test_rho(F25):
    F = F25
    g = F.gen()
    C = R(YPolynomial(F, [g]), lin(F, 2))
    assert rho(C, 2).coords == (g, F.mul(4, g))
    C = R(YPolynomial(F, [3]), lin(F, 2))
    assert rho(C, 2).coords == (3, 3)
    assert rho(C, 1).coords == (0, 0)


def test_residues_sum_to_zero(desk):
    F = desk
    Rng = sampling.rng(1)
    for _ in range(30):
        num = sampling.y_poly(Rng, F, 5)
        den = sampling.split_denominator(Rng, F)
        C = R(num, den)
        total = residue_at(C, INF)
        for z in range(F.p):
            total = F.add(total, residue_at(C, z))
        assert total == 0


def test_zeta_relation(F25):
    # res_{zeta^r}(C dY) = r res_zeta(y^{r-1} C(y^r) dy)
    F = F25
    Rng = sampling.rng(2)
    for _ in range(30):
        C = R(sampling.y_poly(Rng, F, 3), sampling.split_denominator(Rng, F, allow_zero=False))
        for zeta in range(1, F.order):
            z = F.pow(zeta, F.r)
            if not F.in_base(z):
                continue
            S = substitute_root(C)
            S = R(S.num.shift(F.r - 1), S.den)
            assert residue_at(C, z) == F.mul(F.r, residue_at_zeta(S, zeta))


def test_zeta_example(F25):
    F = F25
    for zeta in (1, 2, 3, 4):
        z = F.pow(zeta, 2)
        C = R(YPolynomial(F, [1]), lin(F, z))
        S = substitute_root(C)
        S = R(S.num.shift(1), S.den)
        assert residue_at_zeta(S, zeta) == F.inv(2)


def test_series_div_and_multiplicities(F25):
    F = F25
    # 1/(1 - Y) = 1 + Y + Y^2 + ...
    assert series_div([1], [1, F.neg(1)], 5, F) == [1] * 5
    D = lin(F, 1) ** 2 * lin(F, 3) * YPolynomial(F, [0, 1])
    assert split_multiplicities(D) == {0: 1, 1: 2, 3: 1}
