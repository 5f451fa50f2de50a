from fractions import Fraction

from swde.algebra.rational import RationalFunction
from swde.errors import ConstantInput


def schwarzian_rational(f: RationalFunction) -> RationalFunction:
    """
    Exact S(f, z) = f'''/f' - 3/2 (f''/f')^2 of a rational function.

    :raises ConstantInput: when f' vanishes identically.
    """
    d1 = f.derivative()
    if d1.is_zero:
        raise ConstantInput("rational function")
    d2 = d1.derivative()
    d3 = d2.derivative()
    ratio = d2 / d1
    return d3 / d1 - ratio * ratio * Fraction(3, 2)
