from collections import defaultdict
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from swde.algebra.fpoly import FactoredFPoly, FPoly
from swde.algebra.rational import RationalFunction
from swde.classifier.forms import PRIORITY, ExponentPattern, QTag, enumerate_candidates
from swde.equation.equation import SchwarzEquation
from swde.errors import Unsplittable
from swde.utils import rat_str

"""
    A constant root is either a rational number or, for an irreducible
    quadratic factor with constant coefficients, the factor standing for
    one of its two algebraic roots.
"""
Root = Union[Fraction, FPoly]


class Slots:
    """
    The factored denominator sorted into the three kinds of factors the forms
    distinguish: moving linear factors f + b(z) with b nonconstant, moving
    quadratic factors, and constant roots.
    """

    def __init__(self, factored: FactoredFPoly):
        self.moving_linear: List[Tuple[FPoly, int]] = []
        self.moving_quadratic: List[Tuple[FPoly, int]] = []
        self.constants: List[Tuple[Root, int]] = []
        for factor, k in factored.factors:
            if not factor.has_constant_coefficients:
                if factor.degree == 1:
                    self.moving_linear.append((factor, k))
                else:
                    self.moving_quadratic.append((factor, k))
            elif factor.degree == 1:
                self.constants.append((-factor.coefficient(0).constant_value(), k))
            else:
                self.constants.extend([(factor, k), (factor, k)])

    def matches(self, pattern: ExponentPattern) -> bool:
        return (
            sorted(k for _, k in self.moving_linear) == sorted(pattern.moving_linear)
            and sorted(k for _, k in self.moving_quadratic) == sorted(pattern.moving_quadratic)
            and sorted(k for _, k in self.constants) == sorted(pattern.constants)
        )

    def assign_roots(self, pattern: ExponentPattern) -> List[Root]:
        """
        Constant roots in pattern order; roots sharing an exponent are sorted,
        rational values first.
        """
        by_exponent: Dict[int, List[Root]] = defaultdict(list)
        for root, k in self.constants:
            by_exponent[k].append(root)
        for roots in by_exponent.values():
            roots.sort(key=_root_key)
        return [by_exponent[k].pop(0) for k in pattern.constants]


def _root_key(root: Root):
    if isinstance(root, Fraction):
        return (0, root, "")
    return (1, Fraction(0), root.render())


def render_param(value: Any):
    if isinstance(value, RationalFunction):
        return value.render()
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return rat_str(value)
    if isinstance(value, FPoly):
        return f"root of {value.render()}"
    return value


class QClass:
    def __init__(
        self,
        tag: QTag,
        params: Dict[str, Any],
        pattern: Optional[ExponentPattern] = None,
        alternates: Optional[List[QTag]] = None,
        reason: Optional[str] = None,
    ):
        self._tag = tag
        self._params = params
        self._pattern = pattern
        self._alternates = alternates or []
        self._reason = reason

    @property
    def tag(self) -> QTag:
        return self._tag

    @property
    def params(self) -> Dict[str, Any]:
        return self._params

    @property
    def pattern(self) -> Optional[ExponentPattern]:
        return self._pattern

    @property
    def alternates(self) -> List[QTag]:
        return self._alternates

    @property
    def reason(self) -> Optional[str]:
        return self._reason

    @property
    def taus(self) -> List[Root]:
        return [self._params[f"tau{i}"] for i in range(1, 5) if f"tau{i}" in self._params]

    def serialize(self) -> dict:
        return {
            "tag": self._tag.value,
            "params": {key: render_param(value) for key, value in self._params.items()},
            "alternates": [tag.value for tag in self._alternates],
        }

    def __repr__(self) -> str:
        return f"QClass({self._tag.value})"


def _extract(pattern: ExponentPattern, slots: Slots, unit: RationalFunction) -> Dict[str, Any]:
    params: Dict[str, Any] = {"c": unit}
    linear = sorted(slots.moving_linear, key=lambda fk: fk[0].render())
    if pattern.tag == QTag.QE1:
        params["b1"] = linear[0][0].coefficient(0)
        params["b2"] = linear[1][0].coefficient(0)
    elif linear:
        params["b"] = linear[0][0].coefficient(0)
    if slots.moving_quadratic:
        quadratic = slots.moving_quadratic[0][0]
        params["a0"] = quadratic.coefficient(0)
        params["a1"] = quadratic.coefficient(1)
    for i, root in enumerate(slots.assign_roots(pattern), start=1):
        params[f"tau{i}"] = root
    params.update(pattern.divisors)
    return params


def classify_Q(eq: SchwarzEquation) -> QClass:
    """
    Match the factored denominator against the forms in priority order.
    Unsplittable denominators and structures no form fits give Unmatched.
    """
    try:
        factored = eq.factored_Q
    except Unsplittable as e:
        return QClass(QTag.UNMATCHED, {}, reason=str(e))
    slots = Slots(factored)
    matched: List[ExponentPattern] = []
    for tag in PRIORITY:
        for pattern in enumerate_candidates(eq.m, tag):
            if slots.matches(pattern):
                matched.append(pattern)
                break
    if not matched:
        return QClass(
            QTag.UNMATCHED,
            {"c": factored.unit},
            reason=f"no form fits multiplicities {factored.multiplicities()} for m = {eq.m}",
        )
    primary = matched[0]
    return QClass(
        primary.tag,
        _extract(primary, slots, factored.unit),
        primary,
        [pattern.tag for pattern in matched[1:]],
    )
