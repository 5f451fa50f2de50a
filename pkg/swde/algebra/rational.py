from fractions import Fraction
from typing import List, Union

import sympy
from sympy import Poly, QQ

from swde.errors import DivisionByZero, SingularPoint, ZeroFunction
from swde.utils import rat_str

Z = sympy.Symbol("z")
F = sympy.Symbol("f")

"""
    Scalars are Python fractions: arbitrary precision numerator,
    positive denominator, always in lowest terms.
"""
Rat = Fraction
Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def to_rational(value) -> sympy.Rational:
    v = Fraction(value)
    return sympy.Rational(v.numerator, v.denominator)


def z_poly(value) -> Poly:
    if isinstance(value, Poly):
        if value.gens == (Z,) and value.domain == QQ:
            return value
        return Poly(value.as_expr(), Z, domain=QQ)
    if isinstance(value, (int, Fraction)):
        return Poly(to_rational(value), Z, domain=QQ)
    return Poly(value, Z, domain=QQ)


def taylor_coefficients(p: Poly, z0: Scalar) -> List[Fraction]:
    """
    Coefficients of p(z0 + x) in increasing powers of x.
    """
    if p.is_zero:
        return [Fraction(0)]
    shifted = p.shift(to_rational(z0))
    return [to_fraction(c) for c in reversed(shifted.all_coeffs())]


def _power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def render_poly(poly: Poly) -> str:
    """
    Render a polynomial over QQ in the equation grammar:
    explicit '*', '^' for powers, rational literals as quotients.
    """
    if poly.is_zero:
        return "0"
    parts = []
    for monom, coeff in poly.terms():
        c = to_fraction(coeff)
        powers = [_power(str(g), e) for g, e in zip(poly.gens, monom) if e]
        magnitude = abs(c)
        if powers:
            body = "*".join(powers)
            if magnitude != 1:
                body = f"{rat_str(magnitude)}*{body}"
        else:
            body = rat_str(magnitude)
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _is_single_term(poly: Poly) -> bool:
    return len(poly.terms()) == 1 and to_fraction(poly.terms()[0][1]) > 0


def _multiplicity(p: Poly, z0: Scalar) -> int:
    linear = Poly(Z - to_rational(z0), Z, domain=QQ)
    k = 0
    while True:
        q, r = p.div(linear)
        if not r.is_zero:
            return k
        p = q
        k += 1


class RationalFunction:
    """
    Exact quotient num/den of polynomials in z over QQ.

    Kept canonical on construction: gcd(num, den) = 1, den monic,
    and the zero function is 0/1. Equality is therefore structural.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        num = z_poly(num)
        den = z_poly(den)
        if den.is_zero:
            raise DivisionByZero()
        if num.is_zero:
            self._num = Poly(0, Z, domain=QQ)
            self._den = Poly(1, Z, domain=QQ)
            return
        g = num.gcd(den)
        num = num.exquo(g)
        den = den.exquo(g)
        lc = den.LC()
        self._num = num * (1 / lc)
        self._den = den.monic()

    @staticmethod
    def constant(value: Scalar) -> "RationalFunction":
        return RationalFunction(value)

    @staticmethod
    def z() -> "RationalFunction":
        return RationalFunction(Poly(Z, Z, domain=QQ))

    @staticmethod
    def from_expr(expr) -> "RationalFunction":
        num, den = sympy.fraction(sympy.together(sympy.sympify(expr)))
        return RationalFunction(Poly(num, Z, domain=QQ), Poly(den, Z, domain=QQ))

    @staticmethod
    def coerce(value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return RationalFunction(value)

    @property
    def num(self) -> Poly:
        return self._num

    @property
    def den(self) -> Poly:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    @property
    def is_constant(self) -> bool:
        return (self._num.is_zero or self._num.degree() == 0) and self._den.degree() == 0

    @property
    def is_polynomial(self) -> bool:
        return self._den.degree() == 0

    def constant_value(self) -> Fraction:
        assert self.is_constant
        return to_fraction(self._num.LC()) if not self.is_zero else Fraction(0)

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        return RationalFunction(
            self._num * other._den + other._num * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self._num, self._den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other.is_zero:
            raise DivisionByZero()
        return RationalFunction(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return RationalFunction(1) / (self ** (-exponent))
        return RationalFunction(self._num ** exponent, self._den ** exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash(
            (
                tuple(to_fraction(c) for c in self._num.all_coeffs()),
                tuple(to_fraction(c) for c in self._den.all_coeffs()),
            )
        )

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self._num.diff(Z) * self._den - self._num * self._den.diff(Z),
            self._den * self._den,
        )

    def order_at(self, z0: Scalar) -> int:
        """
        Zero multiplicity (positive), pole order (negative) or 0 at z0.
        """
        if self.is_zero:
            raise ZeroFunction("order_at")
        return _multiplicity(self._num, z0) - _multiplicity(self._den, z0)

    def is_regular_at(self, z0: Scalar) -> bool:
        return self._den.eval(to_rational(z0)) != 0

    def evaluate(self, z0: Scalar) -> Fraction:
        den = self._den.eval(to_rational(z0))
        if den == 0:
            raise SingularPoint(rat_str(z0), f"pole of {self.render()}")
        return to_fraction(self._num.eval(to_rational(z0))) / to_fraction(den)

    def as_expr(self):
        return self._num.as_expr() / self._den.as_expr()

    def render(self) -> str:
        num = render_poly(self._num)
        if self.is_polynomial:
            return num
        den = render_poly(self._den)
        if not _is_single_term(self._num):
            num = f"({num})"
        if not _is_single_term(self._den):
            den = f"({den})"
        return f"{num}/{den}"

    def serialize(self) -> str:
        return self.render()

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RationalFunction({self.render()})"
