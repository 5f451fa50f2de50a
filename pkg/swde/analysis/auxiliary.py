from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from swde.algebra.fpoly import FPoly, sqf_parts
from swde.algebra.rational import RationalFunction
from swde.classifier.classify import QClass, Root, render_param
from swde.classifier.forms import QTag
from swde.equation.equation import SchwarzEquation
from swde.equation.mobius import MobiusMap, apply_mobius
from swde.errors import ConstantInput, NoAuxiliary, TruncationExhausted
from swde.series.laurent import LaurentSeries, fpoly_along


class AuxKind(Enum):
    PHI1 = "phi1"
    PHI2 = "phi2"
    PSI1 = "psi1"
    PSI2 = "psi2"
    XI1 = "xi1"
    XI2 = "xi2"
    XI3 = "xi3"
    POLE_H = "pole_h"
    POLE_ROOT_H = "pole_root_h"
    ZERO_RICCATI_H = "zero_riccati_h"
    ZERO_LOG_H = "zero_log_h"
    TWO_ROOT_POLE_H = "two_root_pole_h"
    TWO_ROOT_ZERO_H = "two_root_zero_h"

    @staticmethod
    def deserialize(val: str) -> "AuxKind":
        for member in AuxKind:
            if member.value == val:
                return member
        raise Exception(f"Unknown auxiliary function {val}")


"""
    Exponents of (f - tau_i) in the denominators of the root-product auxiliaries;
    the numerator is (f')^power.
"""
ROOT_PRODUCTS: Dict[AuxKind, Tuple[int, Tuple[int, ...]]] = {
    AuxKind.PSI2: (2, (1, 1, 1, 1)),
    AuxKind.XI1: (6, (3, 4, 5)),
    AuxKind.XI2: (3, (2, 2, 2)),
    AuxKind.XI3: (4, (2, 3, 3)),
}

ROOT_PRODUCT_TAGS = {
    QTag.QE6: AuxKind.PSI2,
    QTag.QE11: AuxKind.XI1,
    QTag.QE12: AuxKind.XI2,
    QTag.QE13: AuxKind.XI3,
}


class AuxExpression:
    """
    An auxiliary function of the equation, evaluated along a solution f.
    The frame is the constant Moebius map u = M(f) the formula is written in;
    the identity for the forms handled directly in f.
    """

    def __init__(
        self, kind: AuxKind, params: Dict[str, Any], frame: Optional[MobiusMap] = None
    ):
        self._kind = kind
        self._params = params
        self._frame = frame or MobiusMap.identity()

    @property
    def kind(self) -> AuxKind:
        return self._kind

    @property
    def params(self) -> Dict[str, Any]:
        return self._params

    @property
    def frame(self) -> MobiusMap:
        return self._frame

    def serialize(self) -> dict:
        return {
            "kind": self._kind.value,
            "params": {key: render_param(value) for key, value in self._params.items()},
            "frame": self._frame.render(),
        }

    def __repr__(self) -> str:
        return f"AuxExpression({self._kind.value})"


def _root_product(roots: Sequence[Root], exponents: Sequence[int]) -> FPoly:
    """
    prod (f - tau_i)^e_i; the two conjugate roots of a constant quadratic factor
    contribute the factor once and must carry the same exponent.
    """
    product = FPoly.constant(1)
    pending: Dict[str, Tuple[FPoly, int]] = {}
    for root, e in zip(roots, exponents):
        if isinstance(root, FPoly):
            key = root.render()
            if key not in pending:
                pending[key] = (root, e)
                continue
            factor, first = pending.pop(key)
            if first != e:
                raise NoAuxiliary(
                    "root product", f"conjugate roots of {key} carry exponents {first} and {e}"
                )
            product = product * factor ** e
        else:
            product = product * FPoly.linear(root) ** e
    if pending:
        raise NoAuxiliary("root product", "unpaired algebraic root")
    return product


def _require_rational_roots(qclass: QClass) -> List[Fraction]:
    taus = qclass.taus
    for tau in taus:
        if isinstance(tau, FPoly):
            raise NoAuxiliary(qclass.tag.value, "the Moebius frame needs rational roots")
    return [Fraction(tau) for tau in taus]


def pole_frame(eq: SchwarzEquation, qclass: QClass) -> Tuple[MobiusMap, FPoly]:
    """
    u = 1/(f - tau) turns Q = c (f - tau)^(2m/n) into a constant:
    S(u)^m = P1(z, u) with P1 polynomial in u.
    """
    (tau,) = _require_rational_roots(qclass)
    frame = MobiusMap(0, 1, 1, -tau)
    transformed = apply_mobius(eq, frame)
    if transformed.Q.degree != 0:
        raise NoAuxiliary(qclass.tag.value, "denominator is not constant after 1/(f - tau)")
    return frame, transformed.P.scale(RationalFunction(1) / transformed.Q.coefficient(0))


def two_root_frame(eq: SchwarzEquation, qclass: QClass) -> Tuple[MobiusMap, FPoly, int]:
    """
    u = (f - tau2)/(f - tau1) gives S(u)^m = P1(z, u) / u^(2m/n2): poles of u
    are tau1-points of order n1, zeros of u are tau2-points of order n2.
    """
    tau1, tau2 = _require_rational_roots(qclass)
    frame = MobiusMap(1, -tau2, 1, -tau1)
    transformed = apply_mobius(eq, frame)
    power = transformed.Q.degree
    if any(not transformed.Q.coefficient(i).is_zero for i in range(power)):
        raise NoAuxiliary(qclass.tag.value, "denominator is not a power of u in the frame")
    scale = RationalFunction(1) / transformed.Q.coefficient(power)
    return frame, transformed.P.scale(scale), power


def single_root(P1: FPoly) -> Optional[RationalFunction]:
    """
    alpha when P1 = b0 (u - alpha)^d with alpha a rational function of z.
    """
    if P1.degree < 1:
        return None
    parts = sqf_parts(P1)
    if len(parts) != 1:
        return None
    part, k = parts[0]
    if part.degree != 1 or k != P1.degree:
        return None
    return -part.coefficient(0)


def zero_branch(eq: SchwarzEquation, qclass: QClass) -> dict:
    """
    For Q = c (f + b)^2m, D = 1/(b')^2m - (-3/2)^m / P0(z, -b) with P0 = P/c
    selects the auxiliary: the Riccati-shaped one when D is not identically
    zero, the logarithmic one otherwise.
    """
    m = eq.m
    b: RationalFunction = qclass.params["b"]
    P0 = eq.P.scale(RationalFunction(1) / qclass.params["c"])
    db = b.derivative()
    at_minus_b = P0.evaluate(-b)
    if at_minus_b.is_zero:
        raise NoAuxiliary(qclass.tag.value, "P vanishes identically along f = -b")
    D = RationalFunction(1) / db ** (2 * m) - RationalFunction(Fraction(-3, 2) ** m) / at_minus_b
    kind = AuxKind.ZERO_LOG_H if D.is_zero else AuxKind.ZERO_RICCATI_H
    return {"D": D.render(), "vanishes": D.is_zero, "auxiliary": kind.value}


def build_aux(qclass: QClass, eq: SchwarzEquation) -> AuxExpression:
    """
    The primary auxiliary function of a classified equation.

    :raises NoAuxiliary: for forms without one.
    """
    tag, params = qclass.tag, qclass.params
    if tag == QTag.QE1:
        return AuxExpression(AuxKind.PHI1, {"b1": params["b1"], "b2": params["b2"]})
    if tag == QTag.QE2:
        return AuxExpression(AuxKind.PHI2, {"a0": params["a0"], "a1": params["a1"]})
    if tag == QTag.QE4:
        return AuxExpression(
            AuxKind.PSI1, {"b": params["b"], "tau1": params["tau1"], "tau2": params["tau2"]}
        )
    if tag in ROOT_PRODUCT_TAGS:
        taus = {f"tau{i}": tau for i, tau in enumerate(qclass.taus, start=1)}
        return AuxExpression(ROOT_PRODUCT_TAGS[tag], taus)
    if tag == QTag.QE3:
        branch = zero_branch(eq, qclass)
        P0 = eq.P.scale(RationalFunction(1) / params["c"])
        return AuxExpression(
            AuxKind.deserialize(branch["auxiliary"]), {"m": eq.m, "b": params["b"], "P0": P0}
        )
    if tag == QTag.QE15:
        frame, P1 = pole_frame(eq, qclass)
        return AuxExpression(
            AuxKind.POLE_H, {"n": params["n"], "m": eq.m, "b0": P1.leading}, frame
        )
    if tag == QTag.QE14:
        frame, P1, _ = two_root_frame(eq, qclass)
        return AuxExpression(
            AuxKind.TWO_ROOT_POLE_H,
            {"n1": params["n1"], "n2": params["n2"], "m": eq.m, "b0": P1.leading},
            frame,
        )
    raise NoAuxiliary(tag.value)


def auxiliaries(qclass: QClass, eq: SchwarzEquation) -> List[AuxExpression]:
    """
    The primary auxiliary followed by the secondary ones its form defines.
    """
    primary = build_aux(qclass, eq)
    result = [primary]
    if qclass.tag == QTag.QE15:
        _, P1 = pole_frame(eq, qclass)
        alpha = single_root(P1)
        if alpha is not None:
            result.append(
                AuxExpression(
                    AuxKind.POLE_ROOT_H, {"n": qclass.params["n"], "alpha": alpha}, primary.frame
                )
            )
    elif qclass.tag == QTag.QE14:
        _, P1, _ = two_root_frame(eq, qclass)
        bk = P1.coefficient(0)
        if not bk.is_zero:
            params = dict(primary.params)
            del params["b0"]
            params["bk"] = bk
            result.append(AuxExpression(AuxKind.TWO_ROOT_ZERO_H, params, primary.frame))
    return result


class _Along:
    """
    Series building blocks of one evaluation: u and its derivatives, and
    rational coefficients expanded with enough precision to never limit u.
    """

    def __init__(self, u: LaurentSeries):
        self.u = u
        self.d1 = u.derivative()
        if self.d1.is_zero:
            raise ConstantInput("series")
        self.d2 = self.d1.derivative()
        self.precision = u.precision + abs(u.valuation) + 4

    def rf(self, a) -> LaurentSeries:
        return LaurentSeries.from_rational_function(
            RationalFunction.coerce(a), self.u.base_point, self.precision
        )

    def log_derivative(self) -> LaurentSeries:
        return self.d2 / self.d1


def _riccati_form(V: LaurentSeries, weight: Fraction) -> LaurentSeries:
    return V * V - V.derivative().scale(weight)


def _gamma(m: int, numerator: int, denominator: int, b: RationalFunction) -> RationalFunction:
    """(numerator / (4 m denominator)) b'/b"""
    return b.derivative() / b * Fraction(numerator, 4 * m * denominator)


def _evaluate(aux: AuxExpression, u: LaurentSeries) -> LaurentSeries:
    p = aux.params
    at = _Along(u)
    kind = aux.kind
    if kind == AuxKind.PHI1:
        denominator = FPoly([p["b1"], 1]) * FPoly([p["b2"], 1])
        return at.d1 / fpoly_along(denominator, u)
    if kind == AuxKind.PHI2:
        return at.d1 / fpoly_along(FPoly([p["a0"], p["a1"], 1]), u)
    if kind == AuxKind.PSI1:
        denominator = FPoly([p["b"], 1]) ** 2 * _root_product((p["tau1"], p["tau2"]), (1, 1))
        return at.d1 ** 2 / fpoly_along(denominator, u)
    if kind in ROOT_PRODUCTS:
        power, exponents = ROOT_PRODUCTS[kind]
        taus = [p[f"tau{i}"] for i in range(1, len(exponents) + 1)]
        return at.d1 ** power / fpoly_along(_root_product(taus, exponents), u)
    if kind == AuxKind.POLE_H:
        n, m = p["n"], p["m"]
        V = at.log_derivative() + at.rf(_gamma(m, n - 1, 1, p["b0"]))
        return _riccati_form(V, Fraction(n + 1))
    if kind == AuxKind.POLE_ROOT_H:
        n, alpha = p["n"], RationalFunction.coerce(p["alpha"])
        shifted = u - at.rf(alpha)
        return at.log_derivative().scale(n) - (
            (at.d1 - at.rf(alpha.derivative())) / shifted
        ).scale(n + 1)
    if kind == AuxKind.TWO_ROOT_POLE_H:
        n1, n2, m = p["n1"], p["n2"], p["m"]
        V = (
            at.log_derivative()
            - (at.d1 / u).scale(Fraction(n2 - 1, n2))
            + at.rf(_gamma(m, n1 - n2, n2, p["b0"]))
        )
        return _riccati_form(V, Fraction(n1 + n2, n2))
    if kind == AuxKind.TWO_ROOT_ZERO_H:
        n1, n2, m = p["n1"], p["n2"], p["m"]
        W = (
            at.log_derivative()
            - (at.d1 / u).scale(Fraction(n1 + 1, n1))
            + at.rf(_gamma(m, n2 - n1, n1, p["bk"]))
        )
        return _riccati_form(W, Fraction(n1 + n2, n1))

    m, b = p["m"], RationalFunction.coerce(p["b"])
    db = b.derivative()
    w = u + at.rf(b)
    if kind == AuxKind.ZERO_LOG_H:
        return at.log_derivative() - ((at.d1 + at.rf(db)) / w).scale(2) + at.rf(db) / w
    ddb = db.derivative()
    gamma = ddb * m / db ** (m + 2) + ddb / (db ** (m + 2) * 2)
    K = RationalFunction(Fraction(-3, 2) ** m) / (db * p["P0"].evaluate(-b))
    X = at.rf(RationalFunction(1) / db ** m) / w + at.rf(gamma)
    Y = at.rf(RationalFunction(1) / db ** (2 * m + 1)) / w
    return X * X + Y.derivative() + at.rf(K) * at.d1 / (w * w)


def eval_aux(aux: AuxExpression, f: LaurentSeries) -> LaurentSeries:
    """
    The auxiliary along a series of f, mapped through the frame first.
    It is analytic at the base point exactly when the result has
    nonnegative valuation.

    :raises ConstantInput: when the framed series has a vanishing derivative.
    :raises TruncationExhausted: when no coefficient of the result is trustworthy.
    """
    u = f if aux.frame.is_identity else aux.frame.apply_series(f)
    result = _evaluate(aux, u)
    if result.trunc_order <= 0:
        raise TruncationExhausted(f"{aux.kind.value} along the series")
    return result
