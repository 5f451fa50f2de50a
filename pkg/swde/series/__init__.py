from .laurent import LaurentSeries, schwarzian_series  # noqa
