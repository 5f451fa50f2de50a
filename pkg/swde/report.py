from typing import Optional

from swde.classifier.classify import QClass
from swde.equation.equation import SchwarzEquation
from swde.reducer.verdict import ReductionVerdict
from swde.utils import exact_numbers

"""
    Report schema shared by the classify, reduce and batch commands:

        {input, m, degP, degQ, coprime, qclass, verdict, certificates, diagnostics}

    Every number, counts included, is an exact rational string "p/q" or "p".
    A classify report carries a null verdict and no certificates.
"""

REPORT_KEYS = (
    "input",
    "m",
    "degP",
    "degQ",
    "coprime",
    "qclass",
    "verdict",
    "certificates",
    "diagnostics",
)


def _header(text: str, eq: SchwarzEquation, qclass: QClass) -> dict:
    return {
        "input": text,
        "m": eq.m,
        "degP": eq.deg_P,
        "degQ": eq.deg_Q,
        "coprime": eq.coprime,
        "qclass": qclass.serialize(),
    }


def build_classify_report(text: str, eq: SchwarzEquation, qclass: QClass) -> dict:
    report = _header(text, eq, qclass)
    report.update(
        {
            "verdict": None,
            "certificates": [],
            "diagnostics": [qclass.reason] if qclass.reason else [],
        }
    )
    return exact_numbers(report)


def build_report(
    text: str,
    eq: SchwarzEquation,
    verdict: ReductionVerdict,
    normalized: Optional[SchwarzEquation] = None,
) -> dict:
    report = _header(text, eq, verdict.qclass)
    report.update(
        {
            "verdict": verdict.serialize(),
            "certificates": verdict.certificates,
            "diagnostics": verdict.diagnostics,
        }
    )
    if normalized is not None and not verdict.mobius.is_identity:
        report["normalized"] = normalized.render()
    return exact_numbers(report)


def error_report(text: str, error: Exception) -> dict:
    return {"input": text, "error": str(error), "error_type": type(error).__name__}
