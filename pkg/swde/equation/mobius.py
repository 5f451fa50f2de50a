from typing import Tuple

from swde.algebra.fpoly import FPoly
from swde.algebra.rational import RationalFunction
from swde.equation.equation import SchwarzEquation
from swde.errors import AnalysisError, DegenerateMap, NonConstantMap
from swde.series.laurent import LaurentSeries, mobius_series


class MobiusMap:
    """
    u = (a f + b) / (c f + d) with ad - bc != 0.
    """

    def __init__(self, a, b, c, d):
        self._a = RationalFunction.coerce(a)
        self._b = RationalFunction.coerce(b)
        self._c = RationalFunction.coerce(c)
        self._d = RationalFunction.coerce(d)
        if self.determinant.is_zero:
            raise DegenerateMap()

    @staticmethod
    def identity() -> "MobiusMap":
        return MobiusMap(1, 0, 0, 1)

    @staticmethod
    def shift_map(t) -> "MobiusMap":
        """
        u = f / (f - t), the degree-balancing map.
        """
        return MobiusMap(1, 0, 1, -RationalFunction.coerce(t))

    @property
    def entries(self) -> Tuple[RationalFunction, ...]:
        return (self._a, self._b, self._c, self._d)

    @property
    def determinant(self) -> RationalFunction:
        return self._a * self._d - self._b * self._c

    @property
    def is_constant(self) -> bool:
        return all(x.is_constant for x in self.entries)

    @property
    def is_identity(self) -> bool:
        return self._b.is_zero and self._c.is_zero and self._a == self._d

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self._d, -self._b, -self._c, self._a)

    def compose(self, inner: "MobiusMap") -> "MobiusMap":
        """
        self after inner, as a product of coefficient matrices.
        """
        a, b, c, d = self.entries
        e, f, g, h = inner.entries
        return MobiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def equivalent(self, other: "MobiusMap") -> bool:
        """
        Projective equality: the matrices agree up to a common factor.
        """
        mine, theirs = self.entries, other.entries
        return all(
            mine[i] * theirs[j] == mine[j] * theirs[i] for i in range(4) for j in range(i + 1, 4)
        )

    def apply(self, value) -> RationalFunction:
        value = RationalFunction.coerce(value)
        return (self._a * value + self._b) / (self._c * value + self._d)

    def apply_series(self, s: LaurentSeries) -> LaurentSeries:
        if not self.is_constant:
            raise NonConstantMap()
        a, b, c, d = (x.constant_value() for x in self.entries)
        return mobius_series(a, b, c, d, s)

    def render(self) -> str:
        if self.is_identity:
            return "u = f"
        a, b, c, d = self.entries
        return f"u = ({FPoly([b, a]).render()})/({FPoly([d, c]).render()})"

    def serialize(self) -> dict:
        a, b, c, d = self.entries
        return {
            "a": a.render(),
            "b": b.render(),
            "c": c.render(),
            "d": d.render(),
            "map": self.render(),
        }

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MobiusMap({self.render()})"


def _substitute(p: FPoly, numerator: FPoly, denominator: FPoly, degree: int) -> FPoly:
    """
    denominator^degree * p(numerator / denominator).
    """
    result = FPoly()
    for i, c in enumerate(p.coefficients):
        if not c.is_zero:
            result = result + numerator ** i * denominator ** (degree - i) * c
    return result


def apply_mobius(eq: SchwarzEquation, mobius: MobiusMap) -> SchwarzEquation:
    """
    Rewrite the equation for u = M(f). The left side is invariant, so only
    R(z, f) changes: f = (d u - b) / (-c u + a) is substituted and both sides
    are multiplied by (-c u + a)^max(deg P, deg Q).

    :raises NonConstantMap: for maps with coefficients depending on z.
    """
    if not mobius.is_constant:
        raise NonConstantMap()
    a, b, c, d = mobius.entries
    numerator = FPoly([-b, d])
    denominator = FPoly([a, -c])
    degree = max(eq.deg_P, eq.deg_Q)
    return SchwarzEquation(
        eq.m,
        _substitute(eq.P, numerator, denominator, degree),
        _substitute(eq.Q, numerator, denominator, degree),
    )


def normalize_degrees(
    eq: SchwarzEquation, max_shift: int = 64
) -> Tuple[SchwarzEquation, MobiusMap]:
    """
    Balance deg_f P and deg_f Q with u = f / (f - t), t the smallest positive
    integer with P(z, t) and Q(z, t) both nonzero. Balanced inputs and P = 0
    come back unchanged with the identity map.
    """
    if eq.is_balanced:
        return eq, MobiusMap.identity()
    for t in range(1, max_shift + 1):
        if eq.P.evaluate(t).is_zero or eq.Q.evaluate(t).is_zero:
            continue
        mobius = MobiusMap.shift_map(t)
        balanced = apply_mobius(eq, mobius)
        assert balanced.is_balanced, "shift map failed to balance degrees"
        return balanced, mobius
    raise AnalysisError(f"no shift t <= {max_shift} avoids the roots of P and Q")
