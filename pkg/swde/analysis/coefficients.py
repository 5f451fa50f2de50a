from fractions import Fraction
from typing import List, Optional, Tuple

from swde.algebra.fpoly import FPoly
from swde.algebra.rational import RationalFunction, Scalar
from swde.classifier.classify import classify_Q
from swde.classifier.forms import QTag
from swde.equation.equation import SchwarzEquation
from swde.errors import NoAuxiliary, NotAZero, SingularCoefficient
from swde.series.laurent import LaurentSeries, fpoly_along, schwarzian_series
from swde.utils import rat_str


def leading_schwarzian_coeff(k: int, m: int) -> Fraction:
    """
    ((1 - k^2)/2)^m: the coefficient of (z - z0)^(-2m) in S(u)^m when
    u - u(z0) has a zero of order k, or u has a pole of order k.
    """
    if k < 2:
        raise ValueError(f"order must be at least 2, got {k}")
    return (Fraction(1 - k * k, 2)) ** m


def _log_derivative_at(a: RationalFunction, z0: Scalar) -> Fraction:
    a = RationalFunction.coerce(a)
    if a.is_zero or a.order_at(z0) != 0:
        raise SingularCoefficient(a.render(), rat_str(z0))
    return a.derivative().evaluate(z0) / a.evaluate(z0)


def pole_ratio_relation(n: int, m: int, b0: RationalFunction, z0: Scalar) -> Fraction:
    """
    c_{-n+1} / c_{-n} forced at a pole of order n of u when S(u)^m has
    b0(z) u^(2m/n) as its leading term in u.
    """
    return -Fraction(n, 4 * m) * _log_derivative_at(b0, z0)


def zero_ratio_relation(n2: int, m: int, bk: RationalFunction, z0: Scalar) -> Fraction:
    """
    c_{n2+1} / c_{n2} forced at a zero of order n2 of u when
    S(u)^m = P1(z, u) / u^(2m/n2) with bk = P1(z, 0).
    """
    return Fraction(n2, 4 * m) * _log_derivative_at(bk, z0)


class MatchingReport:
    """
    Both sides of each coefficient identity at one expansion point.
    """

    def __init__(self, kind: str, point: Fraction, order: int):
        self._kind = kind
        self._point = point
        self._order = order
        self._checks: List[Tuple[str, Fraction, Fraction]] = []
        self._notes: List[str] = []

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def point(self) -> Fraction:
        return self._point

    @property
    def order(self) -> int:
        return self._order

    @property
    def checks(self) -> List[Tuple[str, Fraction, Fraction]]:
        return self._checks

    def add_check(self, name: str, lhs: Fraction, rhs: Fraction):
        self._checks.append((name, lhs, rhs))

    def add_note(self, note: str):
        self._notes.append(note)

    def check(self, name: str) -> Tuple[Fraction, Fraction]:
        for check_name, lhs, rhs in self._checks:
            if check_name == name:
                return lhs, rhs
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self._checks)

    def serialize(self) -> dict:
        return {
            "kind": self._kind,
            "point": rat_str(self._point),
            "order": self._order,
            "checks": [
                {"name": name, "lhs": rat_str(lhs), "rhs": rat_str(rhs), "agree": lhs == rhs}
                for name, lhs, rhs in self._checks
            ],
            "notes": self._notes,
            "passed": self.passed,
        }


def zero_matching_check(eq: SchwarzEquation, u: LaurentSeries) -> MatchingReport:
    """
    Coefficient matching at a zero z0 of u + b for S(u)^m = P0(z, u) / (u + b)^(2m).
    With k the order of u - u(z0) and c_j the Taylor coefficients of u + b:
    c_j = b_j for j < k, the leading identity ((1 - k^2)/2)^m = P0(z0, -b(z0)) / c_1^(2m)
    and the next-order identity relating (c_{k+1} - b_{k+1}) / (c_k - b_k) to c_2.

    :raises NotAZero: when u + b does not vanish at z0 or k = 1.
    """
    qclass = classify_Q(eq)
    if qclass.tag != QTag.QE3:
        raise NoAuxiliary(qclass.tag.value, "zero matching needs a (f + b)^2m denominator")
    m = eq.m
    z0 = u.base_point
    b: RationalFunction = qclass.params["b"]
    P0 = eq.P.scale(RationalFunction(1) / qclass.params["c"])
    if not b.is_regular_at(z0) or not eq.is_regular_at(z0):
        raise SingularCoefficient(b.render(), rat_str(z0))
    if u.valuation < 0:
        raise NotAZero("u has a pole at the expansion point")

    precision = u.trunc_order + 2
    b_series = LaurentSeries.from_rational_function(b, z0, precision).truncate(u.trunc_order)
    w = u + b_series
    if w.valuation < 1:
        raise NotAZero("u + b does not vanish at the expansion point")
    shifted = u - u.coefficient(0)
    k = shifted.valuation
    if k == 1:
        raise NotAZero("u' does not vanish, the zero of u + b has k = 1")
    if k >= u.trunc_order - 1:
        raise NotAZero("u - u(z0) vanishes up to the truncation order")

    report = MatchingReport("zero", z0, k)
    for j in range(1, k):
        report.add_check(f"c_{j} = b_{j}", w.coefficient(j), b_series.coefficient(j))

    minus_b0 = RationalFunction(-b.evaluate(z0))
    p0_value = P0.evaluate(minus_b0).evaluate(z0)
    dz_p0_value = P0.derivative_z().evaluate(minus_b0).evaluate(z0)
    c1, c2 = w.coefficient(1), w.coefficient(2)
    leading = leading_schwarzian_coeff(k, m)
    report.add_check("leading", leading, p0_value / c1 ** (2 * m))

    ratio = shifted.coefficient(k + 1) / shifted.coefficient(k)
    report.add_check(
        "next order",
        Fraction(2 * m, k) * leading * ratio,
        (dz_p0_value * c1 - 2 * m * p0_value * c2) / c1 ** (2 * m + 1),
    )
    # c_2 is only determined by the local data, no closed form is asserted for it
    report.add_note(f"c_2 = {rat_str(c2)}")
    return report


def pole_matching_check(
    P1: FPoly, m: int, u: LaurentSeries, denominator_power: int = 0
) -> MatchingReport:
    """
    Two-sided coefficient extraction at a pole of u for
    S(u)^m = P1(z, u) / u^denominator_power: the orders -2m and -2m + 1 of both
    sides, and the observed ratio c_{-n+1}/c_{-n} against the forced one.
    """
    n = -u.valuation
    if n < 2:
        raise NotAZero(f"expected a pole of order at least 2, got valuation {u.valuation}")
    z0 = u.base_point
    report = MatchingReport("pole", z0, n)
    if n * (P1.degree - denominator_power) != 2 * m:
        report.add_note(
            f"pole order {n} is inconsistent with degree {P1.degree - denominator_power}"
        )
    lhs = schwarzian_series(u) ** m
    rhs = fpoly_along(P1, u)
    if denominator_power:
        rhs = rhs / u ** denominator_power
    report.add_check("leading", lhs.coefficient(-2 * m), rhs.coefficient(-2 * m))
    report.add_check("next order", lhs.coefficient(-2 * m + 1), rhs.coefficient(-2 * m + 1))
    observed = u.coefficient(-n + 1) / u.coefficient(-n)
    report.add_check("ratio", observed, pole_ratio_relation(n, m, P1.leading, z0))
    return report


def two_root_zero_matching_check(
    P1: FPoly, m: int, u: LaurentSeries, denominator_power: int
) -> MatchingReport:
    """
    Counterpart of pole_matching_check at a zero of u of order n2 for
    S(u)^m = P1(z, u) / u^denominator_power.
    """
    n2 = u.valuation
    if n2 < 2:
        raise NotAZero(f"expected a zero of order at least 2, got valuation {n2}")
    z0 = u.base_point
    report = MatchingReport("zero of u", z0, n2)
    lhs = schwarzian_series(u) ** m
    rhs = fpoly_along(P1, u) / u ** denominator_power
    report.add_check("leading", lhs.coefficient(-2 * m), rhs.coefficient(-2 * m))
    report.add_check("next order", lhs.coefficient(-2 * m + 1), rhs.coefficient(-2 * m + 1))
    observed = u.coefficient(n2 + 1) / u.coefficient(n2)
    report.add_check("ratio", observed, zero_ratio_relation(n2, m, P1.coefficient(0), z0))
    return report


class PoleMultiplicityReport:
    def __init__(self, n: int, m: int, deg_P: int, deg_Q: int):
        self.n = n
        self.m = m
        self.deg_P = deg_P
        self.deg_Q = deg_Q

    @property
    def admissible(self) -> bool:
        if self.n == 1:
            return self.deg_P <= self.deg_Q
        return self.n * (self.deg_P - self.deg_Q) == 2 * self.m

    @property
    def reason(self) -> Optional[str]:
        if self.admissible:
            return None
        if self.n == 1:
            return "R(z, f) has a pole where S(f) is analytic"
        return f"{self.n} * ({self.deg_P} - {self.deg_Q}) != 2 * {self.m}"

    def serialize(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "degP": self.deg_P,
            "degQ": self.deg_Q,
            "admissible": self.admissible,
            "reason": self.reason,
        }


def pole_multiplicity_check(eq: SchwarzEquation, n: int) -> PoleMultiplicityReport:
    """
    At a pole of f of order n where the coefficients are regular, S(f)^m has
    order -2m for n >= 2 and is analytic for n = 1, while R(z, f) has order
    -n (deg P - deg Q).
    """
    if n < 1:
        raise ValueError(f"pole order must be positive, got {n}")
    return PoleMultiplicityReport(n, eq.m, eq.deg_P, eq.deg_Q)
