from .equation import SchwarzEquation, render_equation  # noqa
from .mobius import MobiusMap, apply_mobius, normalize_degrees  # noqa
from .schwarzian import schwarzian_rational  # noqa
