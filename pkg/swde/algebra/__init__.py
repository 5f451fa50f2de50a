from .rational import F, Z, Rat, RationalFunction, render_poly  # noqa
from .fpoly import (  # noqa
    FPoly,
    FactoredFPoly,
    fp_gcd,
    is_square,
    squarefree_factor,
)
