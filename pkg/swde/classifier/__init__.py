from .forms import PRIORITY, ExponentPattern, QTag, enumerate_candidates  # noqa
from .classify import QClass, Slots, classify_Q  # noqa
