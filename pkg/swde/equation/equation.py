from typing import Optional

from sympy import Poly, QQ

from swde.algebra.fpoly import FactoredFPoly, FPoly, fp_gcd, squarefree_factor
from swde.algebra.rational import F, Z, Scalar, render_poly
from swde.errors import NonPositiveExponent, ZeroDenominator


def _wrap(poly: Poly) -> str:
    text = render_poly(poly)
    if len(poly.terms()) == 1 and poly.LC() > 0:
        return text
    return f"({text})"


class SchwarzEquation:
    """
    S(f, z)^m = P(z, f) / Q(z, f) with P and Q coprime in f.

    The common factor of the inputs is cancelled on construction and
    `coprime` records whether one was present. The factored form of Q is
    computed once, on first use.
    """

    def __init__(self, m: int, P: FPoly, Q: FPoly):
        if m <= 0:
            raise NonPositiveExponent(m)
        if Q.is_zero:
            raise ZeroDenominator("Q")
        self._coprime = True
        if P.is_zero:
            self._coprime = Q.is_constant
            Q = FPoly([1])
        else:
            common = fp_gcd(P, Q)
            if common.degree > 0:
                self._coprime = False
                P = P.exquo(common)
                Q = Q.exquo(common)
        self._m = m
        self._P = P
        self._Q = Q
        self._factored_Q: Optional[FactoredFPoly] = None

    @property
    def m(self) -> int:
        return self._m

    @property
    def P(self) -> FPoly:
        return self._P

    @property
    def Q(self) -> FPoly:
        return self._Q

    @property
    def deg_P(self) -> int:
        return max(self._P.degree, 0)

    @property
    def deg_Q(self) -> int:
        return self._Q.degree

    @property
    def coprime(self) -> bool:
        return self._coprime

    @property
    def is_balanced(self) -> bool:
        return self._P.is_zero or self._P.degree == self._Q.degree

    @property
    def factored_Q(self) -> FactoredFPoly:
        """
        :raises Unsplittable: when Q has an irreducible factor of degree >= 3.
        """
        if self._factored_Q is None:
            self._factored_Q = squarefree_factor(self._Q)
        return self._factored_Q

    def is_regular_at(self, z0: Scalar) -> bool:
        return all(
            c.is_regular_at(z0) for c in self._P.coefficients + self._Q.coefficients
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchwarzEquation):
            return NotImplemented
        return self._m == other._m and self._P * other._Q == other._P * self._Q

    __hash__ = None  # type: ignore

    def render(self) -> str:
        return render_equation(self)

    def serialize(self) -> dict:
        return {"m": self._m, "P": self._P.render(), "Q": self._Q.render()}

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SchwarzEquation({self.render()})"


def render_equation(eq: SchwarzEquation) -> str:
    """
    Printer in the equation grammar; parse_equation(render_equation(eq)) == eq.
    """
    lhs = "S(f)" if eq.m == 1 else f"S(f)^{eq.m}"
    p_cleared, p_den = eq.P.to_poly()
    q_cleared, q_den = eq.Q.to_poly()
    num = p_cleared * Poly(q_den.as_expr(), F, Z, domain=QQ)
    den = q_cleared * Poly(p_den.as_expr(), F, Z, domain=QQ)
    if num.is_zero:
        return f"{lhs} = 0"
    if den.is_ground:
        # fold a constant denominator into the numerator
        num = num * (1 / den.LC())
        return f"{lhs} = {render_poly(num)}"
    return f"{lhs} = {_wrap(num)}/{_wrap(den)}"
