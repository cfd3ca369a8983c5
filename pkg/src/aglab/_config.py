import os

from .errors import InputError

HARD_MAX_ORDER = 16


def max_order():
    raw = os.environ.get("AGLAB_MAX_ORDER")
    if not raw:
        return HARD_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"AGLAB_MAX_ORDER must be an integer, got {raw!r}") from None
    if not 1 <= value <= HARD_MAX_ORDER:
        raise InputError(f"AGLAB_MAX_ORDER must lie in [1, {HARD_MAX_ORDER}], got {value}")
    return value


def numba_disabled():
    return os.environ.get("AGLAB_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")
