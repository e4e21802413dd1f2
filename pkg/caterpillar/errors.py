"""Exception hierarchy shared by the library and the CLI."""
from typing import Optional

from .config import COUNTER_LIMIT


class CaterpillarError(Exception):
    """Base class for every error the library raises on purpose."""


class InputError(CaterpillarError, ValueError):
    """Malformed or out-of-range input: rank mismatch, bad sizes, bad text."""


class SizeGuardExceeded(CaterpillarError):
    def __init__(self, what: str, count: int, limit: int) -> None:
        super().__init__(f"{what}: {count} objects exceeds the size guard of {limit}")
        self.what = what
        self.count = count
        self.limit = limit


class CounterOverflow(CaterpillarError):
    def __init__(self, what: str) -> None:
        super().__init__(f"{what}: counter exceeded {COUNTER_LIMIT}")
        self.what = what


class BoundaryMismatch(CaterpillarError):
    """Consecutive factors (or an end factor and its leaf) disagree on a boundary weight."""

    def __init__(self, position: int, detail: Optional[str] = None) -> None:
        message = f"boundary mismatch at factor {position}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.position = position


class LevelExceeded(CaterpillarError):
    def __init__(self, position: int, level: int, bound: int) -> None:
        super().__init__(f"factor {position} has level {level} > {bound}")
        self.position = position
        self.level = level
        self.bound = bound


class NoInternalZero(CaterpillarError):
    """The tuple has no zero entry with nonzero entries on both sides."""


def ensure_within(what: str, count: int, limit: int) -> None:
    """Raise SizeGuardExceeded when count passes limit."""
    if count > limit:
        raise SizeGuardExceeded(what, count, limit)


def checked_add(what: str, x: int, y: int) -> int:
    """Add two counters, raising CounterOverflow past COUNTER_LIMIT."""
    total = x + y
    if total > COUNTER_LIMIT:
        raise CounterOverflow(what)
    return total
