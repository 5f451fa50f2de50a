from .verdict import ReductionVerdict, Target  # noqa
from .reduce import classify_normalized, m1_collapse_holds, reduce  # noqa
from .templates import render_template  # noqa
from .verify import VerificationResult, riccati_residual, verify_candidate  # noqa
