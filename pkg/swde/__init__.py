from .swde import SWDE  # noqa

from .errors import SWDEError, InputError, AnalysisError  # noqa
from .equation import SchwarzEquation, MobiusMap  # noqa
from .parser import parse_equation, parse_rational_function, read_corpus  # noqa
