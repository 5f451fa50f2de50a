import functools
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy import Poly, QQ

from swde.algebra.rational import (
    F,
    Z,
    RationalFunction,
    Scalar,
    _power,
    to_fraction,
    to_rational,
    z_poly,
)
from swde.errors import Unsplittable
from swde.utils import rat_str


def _signed_piece(c: RationalFunction) -> Tuple[str, str, bool]:
    """
    Split a coefficient into (sign, body, is_unit) for rendering.
    Single-term polynomials carry their own sign, everything else is parenthesized.
    """
    if c.is_polynomial and len(c.num.terms()) == 1:
        (monom, coeff), = c.num.terms()
        value = to_fraction(coeff)
        sign = "-" if value < 0 else "+"
        magnitude = abs(value)
        powers = _power("z", monom[0]) if monom[0] else ""
        if powers:
            body = powers if magnitude == 1 else f"{rat_str(magnitude)}*{powers}"
        else:
            body = rat_str(magnitude)
        return sign, body, magnitude == 1 and not powers
    return "+", f"({c.render()})", False


class FPoly:
    """
    Polynomial in the dependent variable f over the field of rational functions in z.
    Coefficients are indexed by the power of f, trailing zeros removed.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Sequence = ()):
        coeffs = [RationalFunction.coerce(c) for c in coefficients]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self._coefficients: Tuple[RationalFunction, ...] = tuple(coeffs)

    @staticmethod
    def f() -> "FPoly":
        return FPoly([0, 1])

    @staticmethod
    def constant(value) -> "FPoly":
        return FPoly([value])

    @staticmethod
    def linear(root) -> "FPoly":
        """
        The monic factor f - root.
        """
        return FPoly([-RationalFunction.coerce(root), 1])

    @staticmethod
    def from_poly(p: Poly) -> "FPoly":
        if p.gens != (F, Z):
            p = Poly(p.as_expr(), F, Z, domain=QQ)
        by_power: dict = {}
        for (i, j), c in p.terms():
            by_power.setdefault(i, {})[(j,)] = c
        if not by_power:
            return FPoly()
        degree = max(by_power)
        return FPoly(
            [
                RationalFunction(Poly.from_dict(by_power[i], Z, domain=QQ))
                if i in by_power
                else RationalFunction(0)
                for i in range(degree + 1)
            ]
        )

    @staticmethod
    def from_expr(expr) -> "FPoly":
        return FPoly.from_poly(Poly(sympy.sympify(expr), F, Z, domain=QQ))

    def to_poly(self) -> Tuple[Poly, Poly]:
        """
        Clear denominators: returns (C, D) with C in QQ[f, z], D in QQ[z]
        and self = C / D.
        """
        if self.is_zero:
            return Poly(0, F, Z, domain=QQ), Poly(1, Z, domain=QQ)
        denominator = functools.reduce(lambda a, b: a.lcm(b), (c.den for c in self._coefficients))
        terms = {}
        for i, c in enumerate(self._coefficients):
            if c.is_zero:
                continue
            scaled = c.num * denominator.exquo(c.den)
            for (j,), value in scaled.terms():
                terms[(i, j)] = value
        return Poly.from_dict(terms, F, Z, domain=QQ), denominator

    @property
    def coefficients(self) -> Tuple[RationalFunction, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        return len(self._coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return len(self._coefficients) == 0

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def leading(self) -> RationalFunction:
        return self._coefficients[-1] if self._coefficients else RationalFunction(0)

    def coefficient(self, power: int) -> RationalFunction:
        if 0 <= power < len(self._coefficients):
            return self._coefficients[power]
        return RationalFunction(0)

    @property
    def has_constant_coefficients(self) -> bool:
        return all(c.is_constant for c in self._coefficients)

    def monic(self) -> "FPoly":
        if self.is_zero:
            return self
        return self.scale(RationalFunction(1) / self.leading)

    def scale(self, value) -> "FPoly":
        value = RationalFunction.coerce(value)
        return FPoly([c * value for c in self._coefficients])

    def __add__(self, other) -> "FPoly":
        other = _coerce(other)
        n = max(len(self._coefficients), len(other._coefficients))
        return FPoly([self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "FPoly":
        return FPoly([-c for c in self._coefficients])

    def __sub__(self, other) -> "FPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "FPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "FPoly":
        if not isinstance(other, FPoly):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return FPoly()
        out = [RationalFunction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self._coefficients):
            if a.is_zero:
                continue
            for j, b in enumerate(other._coefficients):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return FPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FPoly":
        result = FPoly([1])
        base = self
        while exponent > 0:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: "FPoly") -> Tuple["FPoly", "FPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial in f")
        remainder = list(self._coefficients)
        quotient = [RationalFunction(0)] * max(self.degree - other.degree + 1, 0)
        lead = other.leading
        for shift in range(self.degree - other.degree, -1, -1):
            c = remainder[shift + other.degree] / lead
            quotient[shift] = c
            if c.is_zero:
                continue
            for j, b in enumerate(other._coefficients):
                remainder[shift + j] = remainder[shift + j] - c * b
        return FPoly(quotient), FPoly(remainder)

    def exquo(self, other: "FPoly") -> "FPoly":
        q, r = divmod(self, other)
        assert r.is_zero, "inexact division in f"
        return q

    def __eq__(self, other) -> bool:
        if not isinstance(other, FPoly):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def derivative_f(self) -> "FPoly":
        return FPoly([c * i for i, c in enumerate(self._coefficients)][1:])

    def derivative_z(self) -> "FPoly":
        return FPoly([c.derivative() for c in self._coefficients])

    def evaluate(self, value) -> RationalFunction:
        """
        Substitute f = value (a rational function or a constant), Horner scheme.
        """
        value = RationalFunction.coerce(value)
        result = RationalFunction(0)
        for c in reversed(self._coefficients):
            result = result * value + c
        return result

    def render(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in reversed(range(len(self._coefficients))):
            c = self._coefficients[i]
            if c.is_zero:
                continue
            sign, body, unit = _signed_piece(c)
            if i > 0:
                body = _power("f", i) if unit else f"{body}*{_power('f', i)}"
            parts.append((sign, body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def serialize(self) -> str:
        return self.render()

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"FPoly({self.render()})"


def _coerce(value) -> FPoly:
    if isinstance(value, FPoly):
        return value
    if isinstance(value, (int, Fraction, RationalFunction)):
        return FPoly([value])
    raise TypeError(f"cannot interpret {value!r} as a polynomial in f")


class FactoredFPoly:
    """
    unit * prod(factor ** multiplicity) with factors monic in f of degree 1 or 2,
    pairwise coprime, ordered by (degree, rendering).
    """

    def __init__(self, unit: RationalFunction, factors: Sequence[Tuple[FPoly, int]]):
        self._unit = unit
        self._factors = tuple(sorted(factors, key=lambda fm: (fm[0].degree, fm[0].render())))

    @property
    def unit(self) -> RationalFunction:
        return self._unit

    @property
    def factors(self) -> Tuple[Tuple[FPoly, int], ...]:
        return self._factors

    def multiplicities(self) -> List[int]:
        return sorted(k for _, k in self._factors)

    def expand(self) -> FPoly:
        result = FPoly([self._unit])
        for factor, k in self._factors:
            result = result * factor ** k
        return result

    def serialize(self) -> dict:
        return {
            "unit": self._unit.render(),
            "factors": [{"factor": f.render(), "multiplicity": k} for f, k in self._factors],
        }


def discriminant(quadratic: FPoly) -> RationalFunction:
    assert quadratic.degree == 2
    a0, a1, a2 = quadratic.coefficients
    return a1 * a1 - a0 * a2 * 4


def fp_gcd(p: FPoly, q: FPoly) -> FPoly:
    """
    Monic-in-f greatest common divisor over the rational-function field.
    A gcd in QQ[f, z] differs from it only by a unit in z (Gauss lemma).
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    cp, _ = p.to_poly()
    cq, _ = q.to_poly()
    return FPoly.from_poly(cp.gcd(cq)).monic()


def squarefree_factor(p: FPoly) -> FactoredFPoly:
    """
    Square-free decomposition followed by a split of each square-free part into
    monic linear and irreducible monic quadratic factors.

    :raises Unsplittable: for an irreducible part of degree >= 3 in f.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    cleared, denominator = p.to_poly()
    coeff, parts = cleared.sqf_list()
    unit = RationalFunction(z_poly(coeff)) / RationalFunction(denominator)
    factors: List[Tuple[FPoly, int]] = []
    for part, k in parts:
        content, irreducibles = part.factor_list()
        unit = unit * RationalFunction(z_poly(content)) ** k
        for g, e in irreducibles:
            multiplicity = e * k
            if g.degree(F) == 0:
                unit = unit * RationalFunction(z_poly(g)) ** multiplicity
                continue
            factor = FPoly.from_poly(g)
            if factor.degree >= 3:
                raise Unsplittable(factor.render(), multiplicity, factor.degree)
            unit = unit * factor.leading ** multiplicity
            factors.append((factor.monic(), multiplicity))
    return FactoredFPoly(unit, factors)


def sqf_parts(p: FPoly) -> List[Tuple[FPoly, int]]:
    """
    Square-free parts of positive degree in f, with their multiplicities.
    A root of multiplicity k over the algebraic closure lies in the part of index k.
    """
    if p.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    cleared, _ = p.to_poly()
    _, parts = cleared.sqf_list()
    return [(FPoly.from_poly(g).monic(), k) for g, k in parts if g.degree(F) > 0]


def is_square_fpoly(p: FPoly) -> bool:
    """
    Whether p / lc(p) is the square of a monic polynomial in f.
    """
    return all(k % 2 == 0 for _, k in sqf_parts(p))


def max_root_multiplicity(p: FPoly) -> int:
    parts = sqf_parts(p)
    return max((k for _, k in parts), default=0)


def _fraction_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, exact_num = sympy.integer_nthroot(value.numerator, 2)
    den, exact_den = sympy.integer_nthroot(value.denominator, 2)
    if exact_num and exact_den:
        return Fraction(int(num), int(den))
    return None


def _poly_sqrt(p: Poly) -> Optional[Poly]:
    if p.is_zero:
        return p
    _, parts = p.sqf_list()
    root = Poly(1, Z, domain=QQ)
    for g, k in parts:
        if k % 2:
            return None
        root = root * g ** (k // 2)
    rest = p.exquo(root ** 2)
    scalar = _fraction_sqrt(to_fraction(rest.LC()))
    if scalar is None:
        return None
    return root * to_rational(scalar)


def is_square(a: Scalar) -> Optional[RationalFunction]:
    """
    A rational function r with r^2 = a, or None when a is not a square
    in the field of rational functions over QQ.
    """
    a = RationalFunction.coerce(a)
    num = _poly_sqrt(a.num)
    den = _poly_sqrt(a.den)
    if num is None or den is None:
        return None
    return RationalFunction(num, den)
