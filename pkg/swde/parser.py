from typing import List, Tuple

import pyparsing as pp
from sympy import Poly, QQ

from swde.algebra.fpoly import FPoly
from swde.algebra.rational import F, Z, RationalFunction
from swde.equation.equation import SchwarzEquation
from swde.errors import CorpusError, EquationSyntaxError, InputError, ZeroDenominator

"""
    Equation grammar:

        equation := "S(f" [",z"] ")" ["^" ["-"] INT] "=" expr
        expr     := term (("+" | "-") term)*
        term     := signed (("*" | "/") signed)*
        signed   := ("+" | "-")* power
        power    := atom ["^" INT]
        atom     := INT | "f" | "z" | "(" expr ")"

    Every product is written with '*'. A signed exponent after S(f) is parsed
    so that it can be rejected as non-positive.

    Standalone expressions in z (Schwarzian input, rational candidates) use a
    lenient dialect: juxtaposition multiplies, "2z" is 2*z and "z(z + 1)" is
    z*(z + 1), and exponents may be negative. A sign never starts an implicit
    factor, so "2 -z" is a difference.
"""


class _Quotient:
    """
    Intermediate parse value: num/den with both polynomials in QQ[f, z].
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    @staticmethod
    def of(expr) -> "_Quotient":
        return _Quotient(Poly(expr, F, Z, domain=QQ), Poly(1, F, Z, domain=QQ))

    def __add__(self, other: "_Quotient") -> "_Quotient":
        return _Quotient(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "_Quotient") -> "_Quotient":
        return _Quotient(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: "_Quotient") -> "_Quotient":
        return _Quotient(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "_Quotient") -> "_Quotient":
        if other.num.is_zero:
            raise ZeroDenominator("expression")
        return _Quotient(self.num * other.den, self.den * other.num)

    def __neg__(self) -> "_Quotient":
        return _Quotient(-self.num, self.den)

    def __pow__(self, exponent: int) -> "_Quotient":
        if exponent < 0:
            if self.num.is_zero:
                raise ZeroDenominator("negative power of zero")
            return _Quotient(self.den ** (-exponent), self.num ** (-exponent))
        return _Quotient(self.num ** exponent, self.den ** exponent)


def _fold_signed(toks):
    value = toks[-1]
    if sum(1 for t in toks[:-1] if t == "-") % 2:
        value = -value
    return value


def _fold_power(toks):
    if len(toks) == 1:
        return toks[0]
    return toks[0] ** toks[2]


def _fold_binary(toks):
    value = toks[0]
    for op, operand in zip(toks[1::2], toks[2::2]):
        if op == "+":
            value = value + operand
        elif op == "-":
            value = value - operand
        elif op == "*":
            value = value * operand
        else:
            value = value / operand
    return value


def make_grammar(strict: bool = True) -> Tuple[pp.ParserElement, pp.ParserElement]:
    integer = pp.Word(pp.nums).set_parse_action(lambda toks: int(toks[0]))
    signed_integer = pp.Combine(pp.Optional(pp.Literal("-")) + pp.Word(pp.nums)).set_parse_action(
        lambda toks: int(toks[0])
    )
    lpar = pp.Suppress("(")
    rpar = pp.Suppress(")")

    expr = pp.Forward()
    number = integer.copy().add_parse_action(lambda toks: _Quotient.of(toks[0]))
    variable = pp.Literal("z")
    if strict:
        variable = variable | pp.Literal("f")
    variable = variable.copy().set_parse_action(
        lambda toks: _Quotient.of(Z if toks[0] == "z" else F)
    )
    atom = number | variable | (lpar + expr + rpar)
    exponent = integer if strict else signed_integer
    power = (atom + pp.Optional(pp.Literal("^") + exponent)).set_parse_action(_fold_power)
    signed = (pp.ZeroOrMore(pp.one_of("+ -")) + power).set_parse_action(_fold_signed)
    factor = pp.one_of("* /") + signed
    if not strict:
        implicit = pp.Empty().set_parse_action(lambda: "*")
        factor = factor | (implicit + power)
    term = (signed + pp.ZeroOrMore(factor)).set_parse_action(_fold_binary)
    expr <<= (term + pp.ZeroOrMore(pp.one_of("+ -") + term)).set_parse_action(_fold_binary)

    header = (
        pp.Suppress(pp.Literal("S") + pp.Literal("(") + pp.Literal("f"))
        + pp.Suppress(pp.Optional(pp.Literal(",") + pp.Literal("z")))
        + pp.Suppress(")")
        + pp.Optional(pp.Suppress("^") + signed_integer, default=1)
        + pp.Suppress("=")
    )
    equation = header + expr
    return equation, expr


_EQUATION, _EQUATION_EXPR = make_grammar(strict=True)
_, _Z_EXPR = make_grammar(strict=False)


def _parse(grammar: pp.ParserElement, text: str):
    try:
        return grammar.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise EquationSyntaxError(str(e.msg), e.loc, text)


def parse_equation(text: str) -> SchwarzEquation:
    """
    Parse "S(f)^m = EXPR" into an equation in coprime form; m defaults to 1.

    :raises EquationSyntaxError: with the failing position.
    :raises NonPositiveExponent: for m <= 0.
    :raises ZeroDenominator: when EXPR divides by zero.
    """
    m, value = _parse(_EQUATION, text)
    if value.den.is_zero:
        raise ZeroDenominator("equation")
    return SchwarzEquation(m, FPoly.from_poly(value.num), FPoly.from_poly(value.den))


def parse_rational_function(text: str) -> RationalFunction:
    """
    Parse a rational function of z alone; any occurrence of f is a syntax error.
    """
    (value,) = _parse(_Z_EXPR, text)
    return RationalFunction(
        Poly(value.num.as_expr(), Z, domain=QQ), Poly(value.den.as_expr(), Z, domain=QQ)
    )


def parse_corpus(text: str, filename: str = "<corpus>") -> List[Tuple[int, str, SchwarzEquation]]:
    """
    One equation per line; '#' starts a comment, blank lines are skipped.
    Every line is parsed before failing so the error lists all bad lines.
    """
    entries = []
    errors = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            entries.append((lineno, content, parse_equation(content)))
        except InputError as e:
            errors.append((lineno, str(e)))
    if errors:
        raise CorpusError(filename, errors)
    return entries


def read_corpus(path: str) -> List[Tuple[int, str, SchwarzEquation]]:
    with open(path, "r") as corpus:
        return parse_corpus(corpus.read(), path)
