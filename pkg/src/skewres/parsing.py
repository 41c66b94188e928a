"""Expression front-end: tokenizer, AST, evaluation and printers.

Grammar (whitespace ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' ['-'] uint)?
    atom   := uint | 'g' | 'X' | 'Y' | '(' expr ')'

Products keep their operand order.  A divisor must not mention X and must
evaluate to an element of F(Y), so every value is num * den^{-1} with den
central.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ExpressionSyntaxError, NonCentralDenominator, UnknownSymbol
from .rational import SkewRationalFunction, frac_inverse
from .skew import SkewPolynomial
from .ypoly import YPolynomial, format_ypoly

# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str  # 'g', 'X' or 'Y'


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
SYMBOLS = ("g", "X", "Y")


def tokenize(text):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(3)
        if m.group(1):
            out.append(("num", int(m.group(1)), start))
        elif m.group(2):
            name = m.group(2)
            if name not in SYMBOLS:
                raise UnknownSymbol(f"unknown symbol {name!r} at position {start}")
            out.append(("sym", name, start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[0] != "op" or t[1] != value:
            raise ExpressionSyntaxError(f"expected {value!r}", t[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise ExpressionSyntaxError("empty expression", 0)
        node = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ExpressionSyntaxError(f"unexpected {t[1]!r}", t[2])
        return node

    def expr(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            node = Neg(self.term())
        else:
            node = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                node = BinOp(t[1], node, self.term())
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "*/":
                self.take()
                node = BinOp(t[1], node, self.factor())
            else:
                return node

    def factor(self):
        node = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            sign = 1
            t = self.peek()
            if t[0] == "op" and t[1] == "-":
                self.take()
                sign = -1
            t = self.take()
            if t[0] != "num":
                raise ExpressionSyntaxError("expected an exponent", t[2])
            node = Pow(node, sign * t[1])
        return node

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return Num(t[1])
        if t[0] == "sym":
            return Sym(t[1])
        if t[0] == "op" and t[1] == "(":
            node = self.expr()
            self.expect(")")
            return node
        if t[0] == "end":
            raise ExpressionSyntaxError("unexpected end of expression", t[2])
        raise ExpressionSyntaxError(f"unexpected {t[1]!r}", t[2])


def parse_ast(text):
    return _Parser(text).parse()


def _mentions_x(node):
    if isinstance(node, Sym):
        return node.name == "X"
    if isinstance(node, Num):
        return False
    if isinstance(node, Neg):
        return _mentions_x(node.operand)
    if isinstance(node, Pow):
        return _mentions_x(node.base)
    return _mentions_x(node.left) or _mentions_x(node.right)


def evaluate(node, field) -> SkewRationalFunction:
    F = field
    if isinstance(node, Num):
        return SkewRationalFunction(SkewPolynomial.constant(F, F.from_int(node.value)))
    if isinstance(node, Sym):
        if node.name == "g":
            return SkewRationalFunction(SkewPolynomial.constant(F, F.gen()))
        k = 1 if node.name == "X" else F.r
        return SkewRationalFunction(SkewPolynomial.X(F, k))
    if isinstance(node, Neg):
        return -evaluate(node.operand, F)
    if isinstance(node, Pow):
        return evaluate(node.base, F) ** node.exp
    a = evaluate(node.left, F)
    if node.op == "/":
        if _mentions_x(node.right):
            raise NonCentralDenominator("a divisor may not contain X")
        b = evaluate(node.right, F)
        if not b.num.is_central():
            raise NonCentralDenominator("a divisor must have coefficients in F")
        return a * frac_inverse(b)
    b = evaluate(node.right, F)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    return a * b


def parse(text, field):
    """Parse to a SkewPolynomial when the value has no denominator, else to a fraction."""
    value = evaluate(parse_ast(text), field)
    if value.den.is_constant():
        return value.num
    return value


def parse_fraction(text, field) -> SkewRationalFunction:
    return evaluate(parse_ast(text), field)


def parse_polynomial(text, field) -> SkewPolynomial:
    value = evaluate(parse_ast(text), field)
    if not value.den.is_constant():
        raise NonCentralDenominator("a polynomial was expected, got a fraction")
    return value.num


# -- printers -----------------------------------------------------------------


def _mono(var, k):
    return "" if k == 0 else var if k == 1 else f"{var}^{k}"


def _coef_term(cs, mono):
    if not mono:
        return cs
    if cs == "1":
        return mono
    if "+" in cs:
        return f"({cs})*{mono}"
    return f"{cs}*{mono}"


def format_skew(f: SkewPolynomial) -> str:
    """Compact form, decreasing powers of X: ``g*X+4``."""
    F = f.field
    if not f.coeffs:
        return "0"
    parts = [_coef_term(F.format(c), _mono("X", k)) for k, c in sorted(f.terms().items(), reverse=True)]
    return "+".join(parts)


def format_skew_canonical(f: SkewPolynomial) -> str:
    """Increasing powers with explicit parentheses: ``(2+4*g)*X^0 + (1)*X^1``."""
    F = f.field
    if not f.coeffs:
        return "0"
    return " + ".join(f"({F.format(c)})*X^{k}" for k, c in sorted(f.terms().items()))


def _wrap(s):
    return f"({s})" if "+" in s else s


def format_fraction(f) -> str:
    if isinstance(f, SkewPolynomial):
        return format_skew(f)
    F = f.field
    num, den = f.num, f.den
    if num.coeffs and num.val < 0:
        k = -(num.val // F.r)
        num = num.shift(F.r * k)
        den = den.shift(k)
    if den.is_constant():
        return format_skew(num)
    return f"{_wrap(format_skew(num))}/{_wrap(format_ypoly(den))}"


def format_value(v):
    if isinstance(v, (SkewPolynomial, SkewRationalFunction)):
        return format_fraction(v)
    if isinstance(v, YPolynomial):
        return format_ypoly(v)
    return str(v)


def format_quotient_coeff(field, coeff) -> str:
    """An element of A/NA given by its r sections at Y = z."""
    return format_skew(SkewPolynomial(field, list(coeff)))


def format_series(series, var="T") -> str:
    """``1 + T``; coefficients of 1 are omitted and T^0 is dropped."""
    F = series.field
    terms = series.terms()
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms):
        c = terms[e]
        cs = format_quotient_coeff(F, c) if isinstance(c, tuple) else F.format(c)
        parts.append(_coef_term(cs, _mono(var, e)))
    return " + ".join(parts)


# -- JSON encodings ----------------------------------------------------------------


def encode_element(field, a):
    return list(field.digits(a))


def encode_skew(f: SkewPolynomial):
    """{"val": v, "coeffs": [[digits of c_0], ...]} constant first."""
    F = f.field
    return {"val": f.val, "coeffs": [encode_element(F, c) for c in f.coeffs]}


def decode_skew(data, field) -> SkewPolynomial:
    return SkewPolynomial(field, [field.encode(c) for c in data["coeffs"]], data["val"])


def encode_fraction(f):
    f = SkewRationalFunction.coerce(f)
    return {"num": encode_skew(f.num), "den": [encode_element(f.field, c)[0] for c in f.den.dense()]}


def decode_fraction(data, field):
    num = decode_skew(data["num"], field)
    den = YPolynomial(field, [int(c) % field.p for c in data["den"]])
    return SkewRationalFunction(num, den)
