from typing import Any, Dict, List, Optional

from swde.algebra.fpoly import FPoly
from swde.equation.equation import SchwarzEquation, render_equation
from swde.reducer.verdict import ReductionVerdict, Target

"""
    Target equations with the known parameters of the form substituted;
    a(z), c(z) and the alpha_i stay symbolic. The variable is f for the first-order
    targets and u for the Schwarzian ones.
"""
TEMPLATES: Dict[Target, str] = {
    Target.RICCATI: "f' = a(z) + b(z)f + c(z)f^2",
    Target.E2: "(f')^2 = a(z){b}^2{tau1}{tau2}",
    Target.E3: "(f')^2 = a(z){tau1}{tau2}{tau3}{tau4}",
    Target.E4: "(f')^3 = a(z){tau1}^2{tau2}^2{tau3}^2",
    Target.E5: "(f')^4 = a(z){tau1}^2{tau2}^3{tau3}^3",
    Target.E6: "(f')^6 = a(z){tau1}^3{tau2}^4{tau3}^5",
    Target.E7: "(f')^2 + B(z,f)f' + A(z,f) = 0",
    Target.E8: "S(u,z)^2 = c(z)(u - α1)/{tau1}",
    Target.E9: "S(u,z)^2 = c(z)(u - α1)(u - α2)/{tau1}^2",
    Target.E10: "S(u,z)^3 = c(z)(u - α1)^2/{tau1}^2",
    Target.E11: "S(u,z)^2 = c(z)(u - α1)^2/({tau1}{tau2})",
    Target.E12: "S(u,z)^2 = c(z)(u - α1)(u - α2)(u - α3)^2/({tau1}^2{tau2}^2)",
    Target.E13: "S(u,z)^3 = c(z)(u - α1)(u - α2)^3/({tau1}^2{tau2}^2)",
}

SCHWARZ_VARIABLE = "u"


def _factor(root: Any, variable: str, symbol: str) -> str:
    if isinstance(root, FPoly):
        return f"({variable} - {symbol})"
    return f"({FPoly.linear(root).render().replace('f', variable)})"


def template_fields(verdict: ReductionVerdict, variable: str) -> Dict[str, str]:
    params = verdict.qclass.params
    fields = {}
    for i in range(1, 5):
        key = f"tau{i}"
        if key in params:
            fields[key] = _factor(params[key], variable, f"τ{i}")
        else:
            fields[key] = f"({variable} - τ{i})"
    if "b" in params:
        fields["b"] = f"({FPoly([params['b'], 1]).render()})"
    else:
        fields["b"] = "(f - b(z))"
    return fields


def _schwarz_constant(eq: SchwarzEquation) -> str:
    """
    S(u,z)^m = c with c the right side of an equation free of f.
    """
    rendered = render_equation(eq)
    return "S(u,z)" + rendered[len("S(f)"):]


def render_single(target: Target, verdict: ReductionVerdict, eq: Optional[SchwarzEquation]) -> str:
    if target == Target.E14:
        if eq is not None and eq.P.degree <= 0 and eq.Q.degree == 0:
            return _schwarz_constant(eq)
        m = eq.m if eq is not None else 1
        return "S(u,z) = c(z)" if m == 1 else f"S(u,z)^{m} = c(z)"
    if target in (Target.NO_TRANSCENDENTAL, Target.UNCLASSIFIED):
        return target.value
    variable = SCHWARZ_VARIABLE if target.is_schwarz_form else "f"
    return TEMPLATES[target].format(**template_fields(verdict, variable))


def render_template(verdict: ReductionVerdict, eq: Optional[SchwarzEquation] = None) -> str:
    """
    Target equations of the verdict joined with " | ".
    """
    parts: List[str] = [render_single(target, verdict, eq) for target in verdict.outcomes]
    return " | ".join(parts)

