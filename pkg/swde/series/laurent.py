from fractions import Fraction
from typing import List, Sequence, Union

from swde.algebra.fpoly import FPoly
from swde.algebra.rational import RationalFunction, Scalar, taylor_coefficients
from swde.errors import (
    BasePointMismatch,
    ConstantInput,
    DivisionByZeroSeries,
    TruncationExhausted,
)
from swde.utils import rat_str

"""
    Truncated Laurent series sum_{k >= min_order} c_k (z - z0)^k + O((z - z0)^trunc_order).

    Every coefficient with power below trunc_order is exact; nothing is known
    about powers at or beyond it. A series whose known coefficients all vanish
    is stored as min_order = trunc_order - 1 with the single coefficient 0.
"""


class LaurentSeries:

    __slots__ = ("_base_point", "_min_order", "_coefficients", "_trunc_order")

    def __init__(
        self,
        base_point: Scalar,
        min_order: int,
        coefficients: Sequence[Scalar],
        trunc_order: Union[int, None] = None,
    ):
        coeffs: List[Fraction] = [Fraction(c) for c in coefficients]
        if trunc_order is None:
            trunc_order = min_order + len(coeffs)
        # coefficients past the truncation are not trustworthy, missing ones are exact zeros
        length = max(trunc_order - min_order, 0)
        coeffs = coeffs[:length] + [Fraction(0)] * (length - len(coeffs))
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        if lead == len(coeffs):
            self._min_order = trunc_order - 1
            self._coefficients: tuple = (Fraction(0),)
        else:
            self._min_order = min_order + lead
            self._coefficients = tuple(coeffs[lead:])
        self._trunc_order = trunc_order
        self._base_point = Fraction(base_point)

    @staticmethod
    def zero(base_point: Scalar, trunc_order: int) -> "LaurentSeries":
        return LaurentSeries(base_point, trunc_order - 1, [], trunc_order)

    @staticmethod
    def constant(value: Scalar, base_point: Scalar, trunc_order: int) -> "LaurentSeries":
        return LaurentSeries(base_point, 0, [value], trunc_order)

    @staticmethod
    def monomial(
        value: Scalar, power: int, base_point: Scalar, trunc_order: int
    ) -> "LaurentSeries":
        return LaurentSeries(base_point, power, [value], trunc_order)

    @staticmethod
    def from_rational_function(
        a: RationalFunction, base_point: Scalar, precision: int
    ) -> "LaurentSeries":
        """
        Expansion of an exact rational function keeping `precision` coefficients
        counted from its valuation at the base point.
        """
        a = RationalFunction.coerce(a)
        if a.is_zero:
            return LaurentSeries.zero(base_point, precision)
        num = taylor_coefficients(a.num, base_point)
        den = taylor_coefficients(a.den, base_point)
        vn = next(i for i, c in enumerate(num) if c != 0)
        vd = next(i for i, c in enumerate(den) if c != 0)
        num, den = num[vn:], den[vd:]
        quotient: List[Fraction] = []
        for k in range(precision):
            acc = num[k] if k < len(num) else Fraction(0)
            for j in range(1, min(k, len(den) - 1) + 1):
                acc -= den[j] * quotient[k - j]
            quotient.append(acc / den[0])
        valuation = vn - vd
        return LaurentSeries(base_point, valuation, quotient, valuation + precision)

    @property
    def base_point(self) -> Fraction:
        return self._base_point

    @property
    def min_order(self) -> int:
        return self._min_order

    @property
    def coefficients(self) -> tuple:
        return self._coefficients

    @property
    def trunc_order(self) -> int:
        return self._trunc_order

    @property
    def is_zero(self) -> bool:
        return self._coefficients[0] == 0

    @property
    def valuation(self) -> int:
        return self._trunc_order if self.is_zero else self._min_order

    @property
    def precision(self) -> int:
        """
        Number of trustworthy coefficients counted from the valuation.
        """
        return 0 if self.is_zero else self._trunc_order - self._min_order

    @property
    def is_analytic(self) -> bool:
        return self.valuation >= 0

    def coefficient(self, power: int) -> Fraction:
        if power >= self._trunc_order:
            raise TruncationExhausted(f"coefficient of power {power}")
        if power < self._min_order:
            return Fraction(0)
        return self._coefficients[power - self._min_order]

    def _known(self, power: int) -> Fraction:
        if power < self._min_order or power >= self._trunc_order:
            return Fraction(0)
        return self._coefficients[power - self._min_order]

    def _check(self, other: "LaurentSeries"):
        if self._base_point != other._base_point:
            raise BasePointMismatch(rat_str(self._base_point), rat_str(other._base_point))

    def truncate(self, trunc_order: int) -> "LaurentSeries":
        trunc = min(trunc_order, self._trunc_order)
        return LaurentSeries(self._base_point, self._min_order, self._coefficients, trunc)

    def __add__(self, other) -> "LaurentSeries":
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other, self._base_point, self._trunc_order)
        self._check(other)
        trunc = min(self._trunc_order, other._trunc_order)
        lo = min(self._min_order, other._min_order)
        coeffs = [self._known(k) + other._known(k) for k in range(lo, trunc)]
        return LaurentSeries(self._base_point, lo, coeffs, trunc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return self.scale(-1)

    def __sub__(self, other) -> "LaurentSeries":
        return self + (-other)

    def __rsub__(self, other) -> "LaurentSeries":
        return (-self) + other

    def scale(self, value: Scalar) -> "LaurentSeries":
        value = Fraction(value)
        if value == 0:
            return LaurentSeries.zero(self._base_point, self._trunc_order)
        return LaurentSeries(
            self._base_point,
            self._min_order,
            [c * value for c in self._coefficients],
            self._trunc_order,
        )

    def __mul__(self, other) -> "LaurentSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        valuation = self.valuation + other.valuation
        precision = min(self.precision, other.precision)
        if precision == 0:
            return LaurentSeries.zero(self._base_point, valuation)
        a, b = self._coefficients, other._coefficients
        coeffs = [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(precision)]
        return LaurentSeries(self._base_point, valuation, coeffs, valuation + precision)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentSeries":
        if self.is_zero:
            raise DivisionByZeroSeries()
        a = self._coefficients
        q = [Fraction(1) / a[0]]
        for k in range(1, self.precision):
            acc = sum(a[j] * q[k - j] for j in range(1, k + 1))
            q.append(-acc / a[0])
        return LaurentSeries(
            self._base_point, -self._min_order, q, -self._min_order + self.precision
        )

    def __truediv__(self, other) -> "LaurentSeries":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZeroSeries()
            return self.scale(Fraction(1) / Fraction(other))
        self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "LaurentSeries":
        return self.inverse().scale(other)

    def __pow__(self, exponent: int) -> "LaurentSeries":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return LaurentSeries.constant(1, self._base_point, max(self.precision, 1))
        result = self
        for _ in range(exponent - 1):
            result = result * self
        return result

    def derivative(self) -> "LaurentSeries":
        if self.is_zero:
            return LaurentSeries.zero(self._base_point, self._trunc_order - 1)
        coeffs = [
            k * c
            for k, c in zip(range(self._min_order, self._trunc_order), self._coefficients)
        ]
        return LaurentSeries(
            self._base_point, self._min_order - 1, coeffs, self._trunc_order - 1
        )

    def compose(self, inner: "LaurentSeries") -> "LaurentSeries":
        """
        self(inner(z)) where self is expanded at w0 = inner(z0).
        The error term O((w - w0)^t) becomes O((z - z0)^(t * v)), v the valuation of inner - w0.
        """
        shifted = inner - self._base_point
        if shifted.is_zero:
            raise TruncationExhausted("inner series of the composition")
        step = shifted.valuation
        if step < 1:
            raise BasePointMismatch(
                rat_str(self._base_point), f"inner series of valuation {step}"
            )
        cap = self._trunc_order * step
        result = LaurentSeries.zero(inner.base_point, cap)
        for power, c in zip(range(self._min_order, self._trunc_order), self._coefficients):
            if c == 0:
                continue
            if power == 0:
                result = result + LaurentSeries.constant(c, inner.base_point, cap)
            else:
                result = result + (shifted ** power).scale(c)
        return result.truncate(cap)

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """
        Equality on every coefficient trustworthy in both series.
        """
        self._check(other)
        trunc = min(self._trunc_order, other._trunc_order)
        lo = min(self._min_order, other._min_order)
        return all(self._known(k) == other._known(k) for k in range(lo, trunc))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self._base_point == other._base_point
            and self._min_order == other._min_order
            and self._coefficients == other._coefficients
            and self._trunc_order == other._trunc_order
        )

    def __hash__(self) -> int:
        return hash((self._base_point, self._min_order, self._coefficients, self._trunc_order))

    def render(self) -> str:
        x = "z" if self._base_point == 0 else f"(z - {rat_str(self._base_point)})"
        if self._base_point < 0:
            x = f"(z + {rat_str(-self._base_point)})"
        terms = []
        for power, c in zip(range(self._min_order, self._trunc_order), self._coefficients):
            if c == 0:
                continue
            if power == 0:
                terms.append(rat_str(c))
            else:
                terms.append(f"{rat_str(c)}*{x}^{power}" if power != 1 else f"{rat_str(c)}*{x}")
        terms.append(f"O({x}^{self._trunc_order})")
        return " + ".join(terms)

    def serialize(self) -> dict:
        return {
            "base_point": rat_str(self._base_point),
            "min_order": self._min_order,
            "coefficients": [rat_str(c) for c in self._coefficients],
            "trunc_order": self._trunc_order,
        }

    @staticmethod
    def deserialize(cached_config: dict) -> "LaurentSeries":
        return LaurentSeries(
            Fraction(cached_config["base_point"]),
            cached_config["min_order"],
            [Fraction(c) for c in cached_config["coefficients"]],
            cached_config["trunc_order"],
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentSeries({self.render()})"


def schwarzian_series(f: LaurentSeries) -> LaurentSeries:
    """
    S(f, z) along a series. The log-derivative form (f''/f')' - (f''/f')^2/2 is
    returned after checking it against f'''/f' - 3/2 (f''/f')^2.

    :raises ConstantInput: when f' vanishes up to its truncation.
    """
    d1 = f.derivative()
    if d1.is_zero:
        raise ConstantInput("series")
    d2 = d1.derivative()
    d3 = d2.derivative()
    ratio = d2 / d1
    log_form = ratio.derivative() - (ratio * ratio).scale(Fraction(1, 2))
    classic = d3 / d1 - (ratio * ratio).scale(Fraction(3, 2))
    assert log_form.agrees_with(classic), "Schwarzian formulas disagree"
    return log_form


def mobius_series(a: Scalar, b: Scalar, c: Scalar, d: Scalar, s: LaurentSeries) -> LaurentSeries:
    """
    (a*s + b) / (c*s + d) with constant entries.
    """
    return (s.scale(a) + Fraction(b)) / (s.scale(c) + Fraction(d))


def rational_along(
    a: RationalFunction, base_point: Scalar, precision: int
) -> LaurentSeries:
    return LaurentSeries.from_rational_function(a, base_point, precision)


def fpoly_along(p: FPoly, u: LaurentSeries) -> LaurentSeries:
    """
    p(z, u(z)) as a series at the base point of u.
    """
    # generous relative precision so coefficient expansions never limit the result
    precision = u.precision + abs(u.valuation) * (p.degree + 1) + 2
    result = LaurentSeries.zero(u.base_point, u.trunc_order + abs(u.valuation) * p.degree + 2)
    power = LaurentSeries.constant(1, u.base_point, precision)
    for i, c in enumerate(p.coefficients):
        if i > 0:
            power = power * u if i > 1 else u
        if c.is_zero:
            continue
        result = result + rational_along(c, u.base_point, precision) * power
    return result


def equation_rhs_along(P: FPoly, Q: FPoly, u: LaurentSeries) -> LaurentSeries:
    """
    R(z, u) = P(z, u) / Q(z, u) along u.
    """
    return fpoly_along(P, u) / fpoly_along(Q, u)
