import logging
from typing import List, Optional, Tuple

from swde.algebra.fpoly import is_square_fpoly, max_root_multiplicity
from swde.analysis.auxiliary import auxiliaries, zero_branch
from swde.analysis.feasibility import degree_feasibility
from swde.classifier.classify import QClass, classify_Q
from swde.classifier.forms import QTag
from swde.equation.equation import SchwarzEquation
from swde.equation.mobius import normalize_degrees
from swde.errors import NoAuxiliary
from swde.reducer.templates import render_template
from swde.reducer.verdict import ReductionVerdict, Target

"""
    Forms with a single target. QE8, QE9 and QE10 never meet their degree
    sum in positive integers and QE5 has no transcendental solutions at all.
"""
SINGLE_TARGET = {
    QTag.QE1: Target.RICCATI,
    QTag.QE2: Target.RICCATI,
    QTag.QE3: Target.RICCATI,
    QTag.QE4: Target.E2,
    QTag.QE6: Target.E3,
    QTag.QE12: Target.E4,
    QTag.QE13: Target.E5,
    QTag.QE11: Target.E6,
    QTag.QE5: Target.NO_TRANSCENDENTAL,
    QTag.QE16: Target.E14,
    QTag.UNMATCHED: Target.UNCLASSIFIED,
}

FEASIBILITY_TAGS = (QTag.QE7, QTag.QE8, QTag.QE9, QTag.QE10)

"""
    Targets that count as first order of the general quadratic shape
    when m = 1: the two (f')^2 forms are special cases of it.
"""
M1_TARGETS = {
    Target.RICCATI,
    Target.E2,
    Target.E3,
    Target.E7,
    Target.E14,
    Target.NO_TRANSCENDENTAL,
    Target.UNCLASSIFIED,
}


def _feasibility_targets(qclass: QClass, m: int, certificates: List[dict]) -> List[Target]:
    n = qclass.params.get("n")
    feasible = False
    for s in (0, 1):
        report = degree_feasibility(qclass.tag, m, s)
        certificates.append({"kind": "feasibility", **report.serialize()})
        feasible = feasible or report.entry(n).feasible
    return [Target.E7] if feasible else [Target.NO_TRANSCENDENTAL]


def _pole_form_targets(eq: SchwarzEquation, qclass: QClass) -> List[Target]:
    """
    Q = c (f - tau)^e with e = 2m/n: Riccati, the general first-order form for
    m = 1, and the Schwarzian forms whose exponents and numerator shape fit.
    """
    m, e = eq.m, eq.deg_Q
    targets = [Target.RICCATI]
    if m == 1:
        targets.append(Target.E7)
    if m == 2 and e == 1:
        targets.append(Target.E8)
    if m == 2 and e == 2:
        targets.append(Target.E9)
    if m == 3 and e == 2 and eq.P.degree > 0 and is_square_fpoly(eq.P):
        targets.append(Target.E10)
    return targets


def _two_root_targets(
    eq: SchwarzEquation, qclass: QClass, certificates: List[dict], diagnostics: List[str]
) -> List[Target]:
    n1, n2 = qclass.params["n1"], qclass.params["n2"]
    certificates.append({"kind": "constraint", "n1": n1, "n2": n2, "equal": n1 == n2})
    diagnostics.append("leading pole coefficient taken as (1 - n1^2)/2")
    if n1 != n2:
        return [Target.NO_TRANSCENDENTAL]
    m, e = eq.m, 2 * eq.m // n1
    targets = []
    if m == 1:
        targets.append(Target.E7)
    if eq.P.degree > 0:
        if m == 2 and e == 1 and is_square_fpoly(eq.P):
            targets.append(Target.E11)
        if m == 2 and e == 2 and max_root_multiplicity(eq.P) >= 2:
            targets.append(Target.E12)
        if m == 3 and e == 2 and max_root_multiplicity(eq.P) >= 3:
            targets.append(Target.E13)
    return targets or [Target.NO_TRANSCENDENTAL]


def _auxiliary_certificates(
    eq: SchwarzEquation, qclass: QClass, certificates: List[dict], diagnostics: List[str]
):
    try:
        for aux in auxiliaries(qclass, eq):
            certificates.append({"kind": "auxiliary", **aux.serialize()})
    except NoAuxiliary as e:
        diagnostics.append(str(e))


def classify_normalized(
    eq: SchwarzEquation, max_shift: int = 64
) -> Tuple[SchwarzEquation, QClass, ReductionVerdict]:
    """
    Balance the degrees, classify the denominator and reduce.
    Returns the balanced equation along with its class and verdict.
    """
    logging.debug(f"Reducing {eq.render()}")
    normalized, mobius = normalize_degrees(eq, max_shift)
    diagnostics: List[str] = []
    certificates: List[dict] = []
    if not eq.coprime:
        diagnostics.append("common factor of P and Q cancelled")
    if not mobius.is_identity:
        diagnostics.append(f"degrees balanced with {mobius.render()}")
    qclass = classify_Q(normalized)
    if qclass.reason:
        diagnostics.append(qclass.reason)

    tag = qclass.tag
    if tag in SINGLE_TARGET:
        targets = [SINGLE_TARGET[tag]]
    elif tag in FEASIBILITY_TAGS:
        targets = _feasibility_targets(qclass, normalized.m, certificates)
    elif tag == QTag.QE15:
        targets = _pole_form_targets(normalized, qclass)
    else:
        targets = _two_root_targets(normalized, qclass, certificates, diagnostics)

    if tag == QTag.QE3:
        certificates.append({"kind": "branch", **zero_branch(normalized, qclass)})
        diagnostics.append(
            "the second Taylor coefficient at zeros of f + b is reported, not derived"
        )
    if tag not in (QTag.QE5, QTag.QE16, QTag.UNMATCHED) and tag not in FEASIBILITY_TAGS:
        _auxiliary_certificates(normalized, qclass, certificates, diagnostics)

    verdict = ReductionVerdict(targets, qclass, mobius, certificates, diagnostics)
    if targets != [Target.UNCLASSIFIED]:
        verdict.template = render_template(verdict, normalized)
    logging.debug(f"Verdict {verdict.outcome} for class {tag.value}")
    return normalized, qclass, verdict


def reduce(eq: SchwarzEquation, max_shift: int = 64) -> ReductionVerdict:
    return classify_normalized(eq, max_shift)[2]


def m1_collapse_holds(verdict: ReductionVerdict, m: Optional[int] = None) -> bool:
    """
    For m = 1 every outcome is Riccati, first order of the general quadratic
    shape or S(u, z) = c(z). Vacuous for m > 1.
    """
    if m is not None and m != 1:
        return True
    return all(target in M1_TARGETS for target in verdict.outcomes)
