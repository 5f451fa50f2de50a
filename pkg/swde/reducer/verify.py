from fractions import Fraction

from swde.algebra.rational import RationalFunction, Scalar
from swde.equation.equation import SchwarzEquation
from swde.errors import SingularPoint
from swde.series.candidates import Candidate
from swde.series.laurent import (
    LaurentSeries,
    equation_rhs_along,
    rational_along,
    schwarzian_series,
)
from swde.utils import exact_numbers, rat_str


class VerificationResult:
    """
    Residual S(f)^m - R(z, f) of a candidate along its series at z0.
    """

    def __init__(self, candidate: Candidate, base_point: Fraction, residual: LaurentSeries):
        self._candidate = candidate
        self._base_point = base_point
        self._residual = residual

    @property
    def candidate(self) -> Candidate:
        return self._candidate

    @property
    def residual(self) -> LaurentSeries:
        return self._residual

    @property
    def verified(self) -> bool:
        return self._residual.is_zero

    @property
    def transcendental(self) -> bool:
        return self._candidate.transcendental

    @property
    def flags(self) -> list:
        if self.transcendental:
            return []
        return ["candidate is not transcendental"]

    def serialize(self) -> dict:
        return exact_numbers(
            {
                "candidate": self._candidate.serialize(),
                "at": rat_str(self._base_point),
                "residual": self._residual.serialize(),
                "trunc_order": self._residual.trunc_order,
                "verified": self.verified,
                "transcendental": self.transcendental,
                "flags": self.flags,
            }
        )


def verify_candidate(
    eq: SchwarzEquation, candidate: Candidate, z0: Scalar, trunc: int
) -> VerificationResult:
    """
    Expand the candidate at z0 keeping `trunc` coefficients and substitute it
    into both sides of the equation.

    :raises SingularPoint: when z0 is singular for the candidate or the coefficients.
    """
    z0 = Fraction(z0)
    if not eq.is_regular_at(z0):
        raise SingularPoint(rat_str(z0), "pole of an equation coefficient")
    series = candidate.series(z0, trunc)
    if series.valuation < 0:
        raise SingularPoint(rat_str(z0), f"pole of the candidate {candidate}")
    lhs = schwarzian_series(series) ** eq.m
    residual = lhs - equation_rhs_along(eq.P, eq.Q, series)
    return VerificationResult(candidate, z0, residual)


def riccati_residual(
    u: LaurentSeries, a: RationalFunction, b: RationalFunction, c: RationalFunction
) -> LaurentSeries:
    """
    u' - (a + b u + c u^2) along u.
    """
    precision = u.precision + abs(u.valuation) + 2
    z0 = u.base_point
    rhs = (
        rational_along(RationalFunction.coerce(a), z0, precision)
        + rational_along(RationalFunction.coerce(b), z0, precision) * u
        + rational_along(RationalFunction.coerce(c), z0, precision) * u * u
    )
    return u.derivative() - rhs
