from enum import Enum
from typing import List, Optional

from swde.classifier.classify import QClass
from swde.equation.mobius import MobiusMap


class Target(Enum):
    RICCATI = "Riccati"
    E2 = "FirstOrder(E2)"
    E3 = "FirstOrder(E3)"
    E4 = "FirstOrder(E4)"
    E5 = "FirstOrder(E5)"
    E6 = "FirstOrder(E6)"
    E7 = "FirstOrder(E7)"
    E8 = "SchwarzForm(E8)"
    E9 = "SchwarzForm(E9)"
    E10 = "SchwarzForm(E10)"
    E11 = "SchwarzForm(E11)"
    E12 = "SchwarzForm(E12)"
    E13 = "SchwarzForm(E13)"
    E14 = "SchwarzForm(E14)"
    NO_TRANSCENDENTAL = "NoTranscendentalSolution"
    UNCLASSIFIED = "Unclassified"

    @staticmethod
    def deserialize(val: str) -> "Target":
        for member in Target:
            if member.value == val:
                return member
        raise Exception(f"Unknown reduction target {val}")

    @property
    def is_first_order(self) -> bool:
        return self.value.startswith("FirstOrder")

    @property
    def is_schwarz_form(self) -> bool:
        return self.value.startswith("SchwarzForm")


class ReductionVerdict:
    """
    Outcome of the reduction: a single target, or the full admissible set
    when the form leaves a disjunction open.
    """

    def __init__(
        self,
        outcomes: List[Target],
        qclass: QClass,
        mobius: Optional[MobiusMap] = None,
        certificates: Optional[List[dict]] = None,
        diagnostics: Optional[List[str]] = None,
    ):
        assert outcomes, "a verdict needs at least one outcome"
        self._outcomes = outcomes
        self._qclass = qclass
        self._mobius = mobius or MobiusMap.identity()
        self._certificates = certificates or []
        self._diagnostics = diagnostics or []
        self._template: Optional[str] = None

    @property
    def outcomes(self) -> List[Target]:
        return self._outcomes

    @property
    def outcome(self) -> str:
        return " | ".join(target.value for target in self._outcomes)

    @property
    def qclass(self) -> QClass:
        return self._qclass

    @property
    def mobius(self) -> MobiusMap:
        return self._mobius

    @property
    def certificates(self) -> List[dict]:
        return self._certificates

    @property
    def diagnostics(self) -> List[str]:
        return self._diagnostics

    @property
    def alternates(self) -> list:
        return self._qclass.alternates

    @property
    def template(self) -> Optional[str]:
        return self._template

    @template.setter
    def template(self, text: Optional[str]):
        self._template = text

    @property
    def is_disjunctive(self) -> bool:
        return len(self._outcomes) > 1

    def serialize(self) -> dict:
        return {
            "outcome": self.outcome,
            "outcomes": [target.value for target in self._outcomes],
            "template": self._template,
            "mobius": self._mobius.serialize(),
        }

    def __repr__(self) -> str:
        return f"ReductionVerdict({self.outcome})"
