import pytest

from skewres import SkewPolynomial, SkewRationalFunction, YPolynomial, format_fraction, format_skew, parse
from skewres import parse_fraction, sampling
from skewres.errors import ExpressionSyntaxError, NonCentralDenominator, UnknownSymbol
from skewres.parsing import (
    decode_fraction,
    encode_fraction,
    format_series,
    format_skew_canonical,
    parse_polynomial,
    tokenize,
)
from skewres.taylor import expand_canonical


def test_examples(F25):
    F = F25
    g = F.gen()
    assert parse("X*g", F) == SkewPolynomial(F, [0, F.frob(g)])
    assert parse("X / (Y - 1)", F) == SkewRationalFunction(SkewPolynomial.X(F), YPolynomial(F, [4, 1]))
    assert parse("g*X^2 + X + 1", F).coeffs == (1, 1, g)


def test_order_is_kept(F25):
    assert parse("g*X", F25) != parse("X*g", F25)


def test_extensions(F25):
    F = F25
    assert parse("-X", F) == -SkewPolynomial.X(F)
    assert parse("X^-1", F) == SkewPolynomial.X(F, -1)
    assert parse("Y", F) == SkewPolynomial.X(F, F.r)
    assert parse("(X+1)^0", F) == SkewPolynomial.one(F)
    assert parse("7", F) == SkewPolynomial.constant(F, 2)
    assert parse("X/Y/Y", F) == parse("X/(Y^2)", F)


@pytest.mark.parametrize("text,pos", [("1 +", 3), ("(X", 2), ("X ** 2", 3), ("X $ 2", 2), ("", 0), ("X^g", 2)])
def test_syntax_errors(F25, text, pos):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse(text, F25)
    assert exc.value.position == pos


def test_unknown_symbol(F25):
    with pytest.raises(UnknownSymbol):
        parse("Z + 1", F25)


@pytest.mark.parametrize("text", ["1/X", "1/(X*X)", "1/(g + Y)", "1/g"])
def test_non_central_divisor(F25, text):
    with pytest.raises(NonCentralDenominator):
        parse(text, F25)


def test_polynomial_expected(F25):
    with pytest.raises(NonCentralDenominator):
        parse_polynomial("1/(Y-1)", F25)


def test_tokenize_positions():
    toks = tokenize("g*X + 12")
    assert [t[2] for t in toks] == [0, 1, 2, 4, 6, 8]


def test_printers(F25):
    F = F25
    g = F.gen()
    f = SkewPolynomial(F, [F.add(1, F.mul(4, g)), 0, g, 1])
    assert format_skew(f) == "X^3+g*X^2+1+4*g"
    assert format_skew_canonical(f) == "(1+4*g)*X^0 + (g)*X^2 + (1)*X^3"
    assert format_skew(SkewPolynomial.zero(F)) == "0"
    h = SkewRationalFunction(SkewPolynomial.X(F, -1), YPolynomial(F, [4, 1]))
    assert format_fraction(h) == "X/(Y^2+4*Y)"
    assert format_series(expand_canonical(parse("Y", F), 1, 2)) == "1 + T"


def test_round_trip(anyfield):
    F = anyfield
    R = sampling.rng(7)
    for _ in range(500):
        f = sampling.fraction(R, F)
        assert parse_fraction(format_fraction(f), F) == f


def test_json_encoding(desk):
    R = sampling.rng(8)
    for _ in range(20):
        f = sampling.fraction(R, desk)
        assert decode_fraction(encode_fraction(f), desk) == f
