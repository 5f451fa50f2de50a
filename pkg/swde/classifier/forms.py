from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from sympy import divisors


class QTag(Enum):
    QE1 = "QE1"
    QE2 = "QE2"
    QE3 = "QE3"
    QE4 = "QE4"
    QE5 = "QE5"
    QE6 = "QE6"
    QE7 = "QE7"
    QE8 = "QE8"
    QE9 = "QE9"
    QE10 = "QE10"
    QE11 = "QE11"
    QE12 = "QE12"
    QE13 = "QE13"
    QE14 = "QE14"
    QE15 = "QE15"
    QE16 = "QE16"
    UNMATCHED = "Unmatched"

    @staticmethod
    def deserialize(val: str) -> "QTag":
        for member in QTag:
            if member.value == val:
                return member
        raise Exception(f"Unknown denominator form {val}")


"""
    Forms are tried in this order and the first match is reported;
    every other match is kept as an alternate.
"""
PRIORITY: Tuple[QTag, ...] = (
    QTag.QE1,
    QTag.QE2,
    QTag.QE4,
    QTag.QE5,
    QTag.QE3,
    QTag.QE6,
    QTag.QE7,
    QTag.QE9,
    QTag.QE10,
    QTag.QE11,
    QTag.QE13,
    QTag.QE8,
    QTag.QE12,
    QTag.QE14,
    QTag.QE15,
    QTag.QE16,
)


class ExponentPattern:
    """
    Multiplicity structure of one form instance:
    exponents of the moving linear factors (f + b(z)), of the moving
    quadratic factors, and of the constant roots in the order tau_1, tau_2, ...
    """

    def __init__(
        self,
        tag: QTag,
        moving_linear: Tuple[int, ...] = (),
        moving_quadratic: Tuple[int, ...] = (),
        constants: Tuple[int, ...] = (),
        parameters: Optional[Dict[str, int]] = None,
    ):
        self._tag = tag
        self._moving_linear = moving_linear
        self._moving_quadratic = moving_quadratic
        self._constants = constants
        self._divisors = dict(parameters or {})

    @property
    def tag(self) -> QTag:
        return self._tag

    @property
    def moving_linear(self) -> Tuple[int, ...]:
        return self._moving_linear

    @property
    def moving_quadratic(self) -> Tuple[int, ...]:
        return self._moving_quadratic

    @property
    def constants(self) -> Tuple[int, ...]:
        return self._constants

    @property
    def divisors(self) -> Dict[str, int]:
        return self._divisors

    @property
    def degree(self) -> int:
        return (
            sum(self._moving_linear) + 2 * sum(self._moving_quadratic) + sum(self._constants)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExponentPattern):
            return NotImplemented
        return self.serialize() == other.serialize()

    def __hash__(self) -> int:
        return hash(str(self.serialize()))

    def serialize(self) -> dict:
        return {
            "tag": self._tag.value,
            "moving_linear": list(self._moving_linear),
            "moving_quadratic": list(self._moving_quadratic),
            "constants": list(self._constants),
            "divisors": self._divisors,
        }

    def __repr__(self) -> str:
        return f"ExponentPattern({self.serialize()})"


def _integral(value: Fraction) -> bool:
    return value.denominator == 1 and value > 0


def _exact(*values: Fraction) -> Tuple[int, ...]:
    return tuple(int(v) for v in values)


def divisor_range(m: int) -> List[int]:
    """
    Every n >= 2 dividing 2m.
    """
    return [n for n in divisors(2 * m) if n >= 2]


def enumerate_candidates(m: int, tag: QTag) -> List[ExponentPattern]:
    """
    All legal exponent patterns of a form for the exponent m;
    empty when its divisibility side conditions exclude m.
    """
    assert m > 0
    M = Fraction(m)
    if tag == QTag.QE1:
        return [ExponentPattern(tag, moving_linear=(2 * m, 2 * m))]
    if tag == QTag.QE2:
        return [ExponentPattern(tag, moving_quadratic=(2 * m,))]
    if tag == QTag.QE3:
        return [ExponentPattern(tag, moving_linear=(2 * m,))]
    if tag == QTag.QE4:
        return [ExponentPattern(tag, moving_linear=(2 * m,), constants=(m, m))]
    if tag == QTag.QE5:
        return [
            ExponentPattern(
                tag, moving_linear=(2 * m,), constants=(2 * m // n,), parameters={"n": n}
            )
            for n in divisor_range(m)
        ]
    if tag == QTag.QE6:
        return [ExponentPattern(tag, constants=(m, m, m, m))]
    if tag == QTag.QE7:
        return [
            ExponentPattern(tag, constants=(m, m, 2 * m // n), parameters={"n": n})
            for n in divisor_range(m)
        ]
    fixed = {
        QTag.QE8: (M, 2 * M / 3, 2 * M / 3),
        QTag.QE9: (M, 2 * M / 3, M / 2),
        QTag.QE10: (M, 2 * M / 3, 2 * M / 5),
        QTag.QE11: (M, 2 * M / 3, M / 3),
        QTag.QE12: (2 * M / 3, 2 * M / 3, 2 * M / 3),
        QTag.QE13: (M, M / 2, M / 2),
    }
    if tag in fixed:
        exponents = fixed[tag]
        if all(_integral(e) for e in exponents):
            return [ExponentPattern(tag, constants=_exact(*exponents))]
        return []
    if tag == QTag.QE14:
        ns = divisor_range(m)
        return [
            ExponentPattern(
                tag, constants=(2 * m // n1, 2 * m // n2), parameters={"n1": n1, "n2": n2}
            )
            for i, n1 in enumerate(ns)
            for n2 in ns[i:]
        ]
    if tag == QTag.QE15:
        return [
            ExponentPattern(tag, constants=(2 * m // n,), parameters={"n": n})
            for n in divisor_range(m)
        ]
    if tag == QTag.QE16:
        return [ExponentPattern(tag)]
    return []
