from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from swde.classifier.forms import QTag, divisor_range
from swde.utils import rat_str

"""
    A transcendental meromorphic solution f of a form with three constant roots
    would make P1(z, f) = Q1(z, f) with deg P1 = deg Q1 = deg Q. With
    Q1 = prod (f - alpha_i)^k_i and k_i = beta_i m (or k_1 = beta_1 m / 2 for an
    alpha_1 completely ramified over the poles, the s = 1 case) the exponent sum
    sum k_i = deg Q has to be met by positive integers beta_i.

    In the s = 1 case the ramification of the four completely ramified values
    must also satisfy sum 1/nu_i >= 2.
"""


def degree_ratio(tag: QTag, n: int) -> Fraction:
    """
    deg Q / m; only QE7 depends on the pole order n.
    """
    if tag == QTag.QE7:
        return 2 + Fraction(2, n)
    ratios = {
        QTag.QE8: Fraction(7, 3),
        QTag.QE9: Fraction(13, 6),
        QTag.QE10: Fraction(31, 15),
    }
    if tag not in ratios:
        raise ValueError(f"degree feasibility is not defined for {tag.value}")
    return ratios[tag]


def ramification(tag: QTag, n: int) -> List[int]:
    return {
        QTag.QE7: [2, 2, n],
        QTag.QE8: [2, 3, 3],
        QTag.QE9: [2, 3, 4],
        QTag.QE10: [2, 3, 5],
    }[tag]


def _exponents_exist(ratio: Fraction, m: int, s: int) -> List[int]:
    """
    The admissible beta_1 for s = 1, or [0] when s = 0 and the ratio is integral.
    """
    if s == 0:
        return [0] if ratio.denominator == 1 else []
    choices = []
    beta1 = 1
    while Fraction(beta1, 2) <= ratio:
        rest = ratio - Fraction(beta1, 2)
        if rest.denominator == 1 and (beta1 * m) % 2 == 0:
            choices.append(beta1)
        beta1 += 1
    return choices


class FeasibilityEntry:
    def __init__(self, tag: QTag, n: Optional[int], m: int, s: int):
        self.n = n
        self.ratio = degree_ratio(tag, n or 0)
        self.beta1_choices = _exponents_exist(self.ratio, m, s)
        self.arithmetic = bool(self.beta1_choices)
        self.ramification_sum = Fraction(1, 2) + sum(
            Fraction(1, nu) for nu in ramification(tag, n or 0)
        )
        self.ramified = s == 0 or self.ramification_sum >= 2
        self.k1 = [Fraction(beta1, 2) * m for beta1 in self.beta1_choices] if s else []

    @property
    def feasible(self) -> bool:
        return self.arithmetic and self.ramified

    def serialize(self) -> dict:
        return {
            "n": self.n,
            "degree_ratio": rat_str(self.ratio),
            "arithmetic": self.arithmetic,
            "ramification_sum": rat_str(self.ramification_sum),
            "ramified": self.ramified,
            "k1": [rat_str(k) for k in self.k1],
            "feasible": self.feasible,
        }


class FeasibilityReport:
    def __init__(self, tag: QTag, m: int, s: int, entries: List[FeasibilityEntry]):
        self.tag = tag
        self.m = m
        self.s = s
        self.entries = entries

    @property
    def feasible(self) -> bool:
        return any(entry.feasible for entry in self.entries)

    def entry(self, n: Optional[int]) -> FeasibilityEntry:
        for e in self.entries:
            if e.n == n:
                return e
        raise KeyError(n)

    @property
    def forced_n(self) -> Optional[int]:
        feasible = [e.n for e in self.entries if e.feasible]
        return feasible[0] if len(feasible) == 1 else None

    def serialize(self) -> dict:
        return {
            "tag": self.tag.value,
            "m": self.m,
            "s": self.s,
            "feasible": self.feasible,
            "forced_n": self.forced_n,
            "entries": [e.serialize() for e in self.entries],
        }


def degree_feasibility(tag: QTag, m: int, s: int) -> FeasibilityReport:
    """
    Degree bookkeeping for the forms with three constant roots:
    QE7 ranges over every pole order n dividing 2m, QE8, QE9 and QE10
    have a fixed ratio deg Q / m.
    """
    if s not in (0, 1):
        raise ValueError(f"s must be 0 or 1, got {s}")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if tag == QTag.QE7:
        entries = [FeasibilityEntry(tag, n, m, s) for n in divisor_range(m)]
    else:
        entries = [FeasibilityEntry(tag, None, m, s)]
    return FeasibilityReport(tag, m, s, entries)


def compositions(bound: int) -> Iterator[Tuple[int, ...]]:
    """
    Every tuple of positive integers with sum at most `bound`.
    """
    if bound < 1:
        return
    for first in range(1, bound + 1):
        yield (first,)
        for rest in compositions(bound - first):
            yield (first,) + rest


def brute_force_exponents(ratio: Fraction, m: int, s: int, bound: int = 10) -> bool:
    """
    Search the beta vectors with sum at most `bound` directly:
    sum beta_i = ratio, or for s = 1, beta_1 / 2 + sum_{i >= 2} beta_i = ratio
    with beta_1 m even.
    """
    for betas in compositions(bound):
        if s == 0 and sum(betas) == ratio:
            return True
        if s == 1 and (betas[0] * m) % 2 == 0:
            if Fraction(betas[0], 2) + sum(betas[1:]) == ratio:
                return True
    return False
