"""Dominant weights of SL_m and GL_m, duality and the GL → SL reduction."""
import logging
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import InputError

logger = logging.getLogger(__name__)


def _check_dominant(entries: Tuple[int, ...]) -> None:
    if any(e < 0 for e in entries):
        raise ValueError(f"entries must be nonnegative, got {entries}")
    if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
        raise ValueError(f"entries must be weakly decreasing, got {entries}")


def _parse_entries(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse integer list from {text!r}") from None


class SlWeight(BaseModel):
    """Dominant SL_m weight: m−1 weakly decreasing nonnegative entries."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., description="Rank; the weight has m−1 entries")
    entries: Tuple[int, ...] = Field(..., description="Weakly decreasing entries")

    @model_validator(mode="after")
    def _validate(self) -> "SlWeight":
        if self.m < 2:
            raise ValueError(f"rank must be at least 2, got {self.m}")
        if len(self.entries) != self.m - 1:
            raise ValueError(f"SL_{self.m} weight needs {self.m - 1} entries, got {len(self.entries)}")
        _check_dominant(self.entries)
        return self

    @classmethod
    def zero(cls, m: int) -> "SlWeight":
        return cls(m=m, entries=(0,) * (m - 1))

    @classmethod
    def fundamental(cls, m: int, k: int) -> "SlWeight":
        """ω_k; ω_0 and ω_m are both the zero weight."""
        if not 0 <= k <= m:
            raise InputError(f"fundamental weight index {k} outside 0..{m}")
        k = k % m
        return cls(m=m, entries=(1,) * k + (0,) * (m - 1 - k))

    @classmethod
    def parse(cls, text: str, m: Optional[int] = None) -> "SlWeight":
        """Parse `2,1` (rank inferred) or `0` (needs m)."""
        text = text.strip()
        if text == "0" and m is not None:
            return cls.zero(m)
        entries = _parse_entries(text)
        rank = len(entries) + 1 if m is None else m
        if len(entries) != rank - 1:
            raise InputError(f"SL_{rank} weight needs {rank - 1} entries, got {text!r}")
        return cls(m=rank, entries=entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    @property
    def size(self) -> int:
        return sum(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __add__(self, other: "SlWeight") -> "SlWeight":
        require_same_rank(self, other)
        return SlWeight(m=self.m, entries=tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return ",".join(str(e) for e in self.entries)


class GlWeight(BaseModel):
    """Positive dominant GL_m weight: m weakly decreasing nonnegative entries."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., description="Rank; the weight has m entries")
    entries: Tuple[int, ...] = Field(..., description="Weakly decreasing entries")

    @model_validator(mode="after")
    def _validate(self) -> "GlWeight":
        if self.m < 2:
            raise ValueError(f"rank must be at least 2, got {self.m}")
        if len(self.entries) != self.m:
            raise ValueError(f"GL_{self.m} weight needs {self.m} entries, got {len(self.entries)}")
        _check_dominant(self.entries)
        return self

    @property
    def size(self) -> int:
        return sum(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)


def require_same_rank(*weights) -> int:
    """Return the common rank or raise InputError."""
    ranks = {w.m for w in weights}
    if len(ranks) != 1:
        raise InputError(f"rank mismatch: {sorted(ranks)}")
    return ranks.pop()


def dual(w: SlWeight) -> SlWeight:
    """Highest weight of the dual representation: w*_i = w_1 − w_{m+1−i}, with w_m = 0."""
    padded = w.entries + (0,)
    first = padded[0]
    return SlWeight(m=w.m, entries=tuple(first - padded[w.m - 1 - i] for i in range(w.m - 1)))


def sl_reduce(w: GlWeight) -> SlWeight:
    """Drop to SL_m by subtracting the last entry from the others."""
    last = w.entries[-1]
    return SlWeight(m=w.m, entries=tuple(e - last for e in w.entries[:-1]))


def gl_lift(w: SlWeight, c: int) -> GlWeight:
    """Append c and add it to every entry; sl_reduce undoes this."""
    if c < 0:
        raise InputError(f"lift must be nonnegative, got {c}")
    return GlWeight(m=w.m, entries=tuple(e + c for e in w.entries) + (c,))
