from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from swde.algebra.rational import RationalFunction
from swde.errors import EquationSyntaxError, UnsupportedCandidate
from swde.series.laurent import LaurentSeries, mobius_series
from swde.utils import rat_str


class CandidateKind(Enum):
    EXP = "exp"
    TAN = "tan"
    MOBIUS_EXP = "mobius-exp"
    MOBIUS_TAN = "mobius-tan"
    RATIONAL = "rational"

    @staticmethod
    def deserialize(val: str) -> "CandidateKind":
        for member in CandidateKind:
            if member.value == val:
                return member
        raise UnsupportedCandidate(val)


def exp_coefficients(k: Fraction, count: int) -> List[Fraction]:
    """
    exp(k x) = sum k^j / j! x^j
    """
    coeffs = [Fraction(1)]
    for j in range(1, count):
        coeffs.append(coeffs[-1] * k / j)
    return coeffs


def tan_coefficients(k: Fraction, count: int) -> List[Fraction]:
    """
    tan(k x) from t(0) = 0 and t' = k (1 + t^2).
    """
    coeffs = [Fraction(0)]
    for j in range(0, count - 1):
        square = sum(coeffs[i] * coeffs[j - i] for i in range(j + 1))
        if j == 0:
            square += 1
        coeffs.append(k * square / (j + 1))
    return coeffs[:count]


class Candidate:
    """
    Closed-form candidate solution. Exponential and tangent candidates are
    anchored at the expansion point: exp(k (z - z0)) and tan(k (z - z0)).
    """

    def __init__(
        self,
        kind: CandidateKind,
        k: Fraction = Fraction(0),
        mobius: Optional[Tuple[Fraction, Fraction, Fraction, Fraction]] = None,
        rational: Optional[RationalFunction] = None,
    ):
        self._kind = kind
        self._k = Fraction(k)
        self._mobius = mobius
        self._rational = rational
        if mobius is not None:
            a, b, c, d = mobius
            if a * d - b * c == 0:
                raise UnsupportedCandidate(self.serialize(), "degenerate Möbius map")

    @property
    def kind(self) -> CandidateKind:
        return self._kind

    @property
    def k(self) -> Fraction:
        return self._k

    @property
    def mobius(self) -> Optional[Tuple[Fraction, Fraction, Fraction, Fraction]]:
        return self._mobius

    @property
    def rational(self) -> Optional[RationalFunction]:
        return self._rational

    @property
    def transcendental(self) -> bool:
        return self._kind != CandidateKind.RATIONAL and self._k != 0

    def series(self, base_point: Fraction, precision: int) -> LaurentSeries:
        if self._kind == CandidateKind.RATIONAL:
            assert self._rational is not None
            return LaurentSeries.from_rational_function(self._rational, base_point, precision)
        if self._kind in (CandidateKind.EXP, CandidateKind.MOBIUS_EXP):
            coeffs = exp_coefficients(self._k, precision)
        else:
            coeffs = tan_coefficients(self._k, precision)
        base = LaurentSeries(base_point, 0, coeffs, precision)
        if self._mobius is None:
            return base
        return mobius_series(*self._mobius, base)

    def serialize(self) -> str:
        if self._kind == CandidateKind.RATIONAL:
            assert self._rational is not None
            return f"rational:{self._rational.render()}"
        out = f"{self._kind.value}:{rat_str(self._k)}"
        if self._mobius is not None:
            out += ":" + ":".join(rat_str(x) for x in self._mobius)
        return out

    @staticmethod
    def deserialize(descriptor: str) -> "Candidate":
        """
        Accepted forms: exp:k, tan:k, mobius-exp:k:a:b:c:d, mobius-tan:k:a:b:c:d,
        rational:EXPR with EXPR a rational function of z.
        """
        family, _, rest = descriptor.strip().partition(":")
        kind = CandidateKind.deserialize(family)
        if kind == CandidateKind.RATIONAL:
            # parser depends on the series package through the equation module
            from swde.parser import parse_rational_function

            try:
                return Candidate(kind, rational=parse_rational_function(rest))
            except EquationSyntaxError as e:
                raise UnsupportedCandidate(descriptor, str(e))
        fields = rest.split(":") if rest else []
        expected = 1 if kind in (CandidateKind.EXP, CandidateKind.TAN) else 5
        if len(fields) != expected:
            raise UnsupportedCandidate(
                descriptor, f"expected {expected} parameter(s), got {len(fields)}"
            )
        try:
            values = [Fraction(x) for x in fields]
        except (ValueError, ZeroDivisionError):
            raise UnsupportedCandidate(descriptor, "parameters must be rational numbers")
        if expected == 1:
            return Candidate(kind, values[0])
        return Candidate(kind, values[0], (values[1], values[2], values[3], values[4]))

    def __str__(self) -> str:
        return self.serialize()
