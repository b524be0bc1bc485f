"""Exception types shared across the package."""

import os


class TorslatError(Exception):
    pass


class BudgetExceeded(TorslatError):
    pass


class InvalidRank(TorslatError, ValueError):
    pass


class RankMismatch(TorslatError, ValueError):
    pass


class OutOfSupport(TorslatError, ValueError):
    pass


class OverlappingSupports(TorslatError, ValueError):
    pass


class RankTooLarge(TorslatError, ValueError):
    pass


DEFAULT_BUDGET = 10**5


def budget(default: int = DEFAULT_BUDGET) -> int:
    """Element cap, overridable through the TORSLAT_BUDGET environment variable."""
    raw = os.environ.get("TORSLAT_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise TorslatError(f"TORSLAT_BUDGET must be an integer, got {raw!r}") from None
