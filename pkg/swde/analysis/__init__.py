from .auxiliary import AuxExpression, AuxKind, auxiliaries, build_aux, eval_aux  # noqa
from .coefficients import (  # noqa
    MatchingReport,
    leading_schwarzian_coeff,
    pole_matching_check,
    pole_multiplicity_check,
    pole_ratio_relation,
    zero_matching_check,
    zero_ratio_relation,
)
from .feasibility import FeasibilityReport, degree_feasibility  # noqa
