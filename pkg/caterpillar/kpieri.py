"""Level valuation, the K-Pieri rule and the generators of the four factor algebras."""
import logging
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import InputError
from .pieri import (
    InterlacingPattern,
    Orientation,
    PieriGenerator,
    build_dual_pattern,
    build_pattern,
)
from .weights import SlWeight

logger = logging.getLogger(__name__)


class FactorKind(str, Enum):
    """Position of a factor along the caterpillar."""
    PPB = "PPB"
    BPB = "BPB"
    BPSTAR_B = "BP*B"
    BPSTAR_PSTAR = "BP*P*"

    @property
    def orientation(self) -> Orientation:
        if self in (FactorKind.PPB, FactorKind.BPB):
            return Orientation.NORMAL
        return Orientation.DUAL


def level(p: InterlacingPattern) -> int:
    """Top-left entry; equals the number of generators in decompose(p)."""
    return p.top[0]


class LeveledPattern(BaseModel):
    model_config = ConfigDict(frozen=True)

    pattern: InterlacingPattern = Field(..., description="Factor pattern")
    level_bound: int = Field(..., description="Level K the pattern lives at")

    @model_validator(mode="after")
    def _validate(self) -> "LeveledPattern":
        if self.level_bound < 0:
            raise ValueError(f"level bound must be nonnegative, got {self.level_bound}")
        if level(self.pattern) > self.level_bound:
            raise ValueError(f"pattern level {level(self.pattern)} exceeds {self.level_bound}")
        return self


def leveled_pattern(
    lam: SlWeight, middle: int, eta: SlWeight, k: int, orientation: Orientation = Orientation.NORMAL
) -> Optional[LeveledPattern]:
    """The K-Pieri pattern, or None when the classical pattern is missing or too high."""
    if k < 0:
        raise InputError(f"level must be nonnegative, got {k}")
    if orientation is Orientation.NORMAL:
        p = build_pattern(lam, middle, eta)
    else:
        p = build_dual_pattern(lam, middle, eta)
    if p is None or middle > k or level(p) > k:
        return None
    return LeveledPattern(pattern=p, level_bound=k)


def kpieri_dim(lam: SlWeight, r: int, eta: SlWeight, k: int) -> int:
    """Pieri multiplicity at level K."""
    return 0 if leveled_pattern(lam, r, eta, k, Orientation.NORMAL) is None else 1


def kpieri_dual_dim(lam: SlWeight, s: int, eta: SlWeight, k: int) -> int:
    """Dual Pieri multiplicity at level K."""
    return 0 if leveled_pattern(lam, s, eta, k, Orientation.DUAL) is None else 1


def k_generators(m: int, kind: FactorKind) -> List[PieriGenerator]:
    """
    Level-one generators of the factor algebra of the given kind.

    Middle factors get all 2m patterns [i+1,i], [i,i] and [0,0]; end factors
    only the four whose leaf boundary is 0 or the fundamental weight.
    """
    if m < 2:
        raise InputError(f"rank must be at least 2, got {m}")
    kind = FactorKind(kind)
    orientation = kind.orientation
    if kind in (FactorKind.BPB, FactorKind.BPSTAR_B):
        pairs = [(i + 1, i) for i in range(m)] + [(i, i) for i in range(1, m)]
    else:
        pairs = [(m, m - 1), (m - 1, m - 1), (m - 1, m - 2)]
    gens = sorted(
        {PieriGenerator.of(m, i, j, orientation) for i, j in pairs},
        key=lambda g: (g.top_index, -g.j),
    )
    return [PieriGenerator.of(m, 0, 0, orientation)] + gens


def pieri_generators(m: int, kind: FactorKind) -> List[PieriGenerator]:
    """Generators of the unleveled factor algebra: the level-one set without [0,0]."""
    return [g for g in k_generators(m, kind) if not g.is_identity()]
