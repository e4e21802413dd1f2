"""
Classical Pieri rule on two-row interlacing patterns.

A pattern houses one three-point factor V(λ) ⊗ V(middle) ⊗ V(η). In the
normal orientation the middle leg is rω₁ and the rows are λ̄ over η; in the
dual orientation the middle leg is sω_{m−1} and the rows are η̄ over λ*.
Both orientations share the container and the interlacing condition
a_i ≥ b_i ≥ a_{i+1}; only the boundary maps differ.
"""
import logging
from collections import Counter
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import InputError
from .weights import GlWeight, SlWeight, dual, require_same_rank, sl_reduce

logger = logging.getLogger(__name__)


class Orientation(str, Enum):
    NORMAL = "normal"
    DUAL = "dual"


def interlaces(top: Tuple[int, ...], bottom: Tuple[int, ...]) -> bool:
    """True when top_i ≥ bottom_i ≥ top_{i+1} for every i and nothing is negative."""
    if len(top) != len(bottom) + 1 or top[-1] < 0:
        return False
    return all(top[i] >= bottom[i] >= top[i + 1] for i in range(len(bottom)))


class InterlacingPattern(BaseModel):
    """Two-row integer diagram: top a₁..a_m over bottom b₁..b_{m−1}."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., description="Rank")
    top: Tuple[int, ...] = Field(..., description="Top row a₁ ≥ ... ≥ a_m ≥ 0")
    bottom: Tuple[int, ...] = Field(..., description="Bottom row b₁..b_{m−1}")
    orientation: Orientation = Field(Orientation.NORMAL, description="Which boundary maps apply")

    @model_validator(mode="after")
    def _validate(self) -> "InterlacingPattern":
        if self.m < 2:
            raise ValueError(f"rank must be at least 2, got {self.m}")
        if len(self.top) != self.m or len(self.bottom) != self.m - 1:
            raise ValueError(
                f"rank {self.m} pattern needs rows of length {self.m} and {self.m - 1}, "
                f"got {len(self.top)} and {len(self.bottom)}"
            )
        if not interlaces(self.top, self.bottom):
            raise ValueError(f"rows do not interlace: top={self.top} bottom={self.bottom}")
        return self

    @classmethod
    def zero(cls, m: int, orientation: Orientation = Orientation.NORMAL) -> "InterlacingPattern":
        return cls(m=m, top=(0,) * m, bottom=(0,) * (m - 1), orientation=orientation)

    @classmethod
    def parse(cls, text: str, orientation: Orientation = Orientation.NORMAL) -> "InterlacingPattern":
        """Parse `top=3,3,1;bottom=3,2`."""
        rows: Dict[str, Tuple[int, ...]] = {}
        for part in text.strip().split(";"):
            key, sep, value = part.partition("=")
            if not sep or key.strip() not in ("top", "bottom"):
                raise InputError(f"expected top=...;bottom=..., got {text!r}")
            try:
                rows[key.strip()] = tuple(int(v) for v in value.split(","))
            except ValueError:
                raise InputError(f"cannot parse row {part!r}") from None
        if set(rows) != {"top", "bottom"}:
            raise InputError(f"expected both rows in {text!r}")
        return cls(m=len(rows["top"]), top=rows["top"], bottom=rows["bottom"], orientation=orientation)

    @property
    def top_weight(self) -> GlWeight:
        return GlWeight(m=self.m, entries=self.top)

    @property
    def middle(self) -> int:
        """Row-sum difference: r in the normal orientation, s in the dual one."""
        return sum(self.top) - sum(self.bottom)

    def is_zero(self) -> bool:
        return not any(self.top)

    def __add__(self, other: "InterlacingPattern") -> "InterlacingPattern":
        if self.m != other.m or self.orientation != other.orientation:
            raise InputError("cannot add patterns of different rank or orientation")
        return InterlacingPattern(
            m=self.m,
            top=tuple(x + y for x, y in zip(self.top, other.top)),
            bottom=tuple(x + y for x, y in zip(self.bottom, other.bottom)),
            orientation=self.orientation,
        )

    def __str__(self) -> str:
        top = ",".join(map(str, self.top))
        bottom = ",".join(map(str, self.bottom))
        return f"top={top};bottom={bottom}"


class PieriGenerator(BaseModel):
    """
    The generator [i, j] with j ∈ {i, i−1} mod m.

    Residues are stored in 0..m−1, so [m, m−1] is kept as i=0, j=m−1 and
    [m, m] collapses onto the identity [0, 0].
    """
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., description="Rank")
    i: int = Field(..., description="Top index mod m")
    j: int = Field(..., description="Bottom index mod m")
    orientation: Orientation = Field(Orientation.NORMAL, description="Normal (P) or dual (P*) side")

    @model_validator(mode="after")
    def _validate(self) -> "PieriGenerator":
        if not (0 <= self.i < self.m and 0 <= self.j < self.m):
            raise ValueError(f"generator indices must be residues mod {self.m}, got [{self.i},{self.j}]")
        if self.j not in (self.i, (self.i - 1) % self.m):
            raise ValueError(f"[{self.i},{self.j}] is not of the form [i,i] or [i,i−1]")
        return self

    @classmethod
    def of(cls, m: int, i: int, j: int, orientation: Orientation = Orientation.NORMAL) -> "PieriGenerator":
        return cls(m=m, i=i % m, j=j % m, orientation=orientation)

    @property
    def top_index(self) -> int:
        """Number of ones in the top row; m for [m, m−1]."""
        if self.i == 0 and self.j == self.m - 1:
            return self.m
        return self.i

    def is_identity(self) -> bool:
        return self.i == 0 and self.j == 0

    def pattern(self) -> InterlacingPattern:
        k = self.top_index
        return InterlacingPattern(
            m=self.m,
            top=(1,) * k + (0,) * (self.m - k),
            bottom=(1,) * self.j + (0,) * (self.m - 1 - self.j),
            orientation=self.orientation,
        )

    def sort_key(self) -> Tuple[int, int]:
        return (self.top_index, self.j)

    def __str__(self) -> str:
        return f"[{self.top_index},{self.j}]"


GeneratorMultiset = Mapping[PieriGenerator, int]


def build_pattern(lam: SlWeight, r: int, eta: SlWeight) -> Optional[InterlacingPattern]:
    """
    The unique normal pattern with ∂₂ = lam, ∂₁ = eta and middle r, or None.

    The top row is λ* lifted by λ̄_m = (r + Σηᵢ − Σλ*ᵢ)/m, which must be a
    nonnegative integer.
    """
    m = require_same_rank(lam, eta)
    if r < 0:
        raise InputError(f"r must be nonnegative, got {r}")
    lam_star = dual(lam)
    numerator = r + eta.size - lam_star.size
    if numerator < 0 or numerator % m:
        return None
    c = numerator // m
    top = tuple(e + c for e in lam_star.entries) + (c,)
    if not interlaces(top, eta.entries):
        return None
    return InterlacingPattern(m=m, top=top, bottom=eta.entries, orientation=Orientation.NORMAL)


def build_dual_pattern(lam: SlWeight, s: int, eta: SlWeight) -> Optional[InterlacingPattern]:
    """The unique dual pattern: top η̄ = η lifted by (s + Σλ*ᵢ − Σηᵢ)/m, bottom λ*."""
    m = require_same_rank(lam, eta)
    if s < 0:
        raise InputError(f"s must be nonnegative, got {s}")
    lam_star = dual(lam)
    numerator = s + lam_star.size - eta.size
    if numerator < 0 or numerator % m:
        return None
    c = numerator // m
    top = tuple(e + c for e in eta.entries) + (c,)
    if not interlaces(top, lam_star.entries):
        return None
    return InterlacingPattern(m=m, top=top, bottom=lam_star.entries, orientation=Orientation.DUAL)


def pieri_dim(lam: SlWeight, r: int, eta: SlWeight) -> int:
    """Multiplicity of V(η) in V(λ) ⊗ V(rω₁): 1 when a normal pattern exists, else 0."""
    return 0 if build_pattern(lam, r, eta) is None else 1


def dual_pieri_dim(lam: SlWeight, s: int, eta: SlWeight) -> int:
    """Multiplicity of V(η) in V(λ) ⊗ V(sω_{m−1})."""
    return 0 if build_dual_pattern(lam, s, eta) is None else 1


def boundary_1(p: InterlacingPattern) -> SlWeight:
    if p.orientation is Orientation.NORMAL:
        return SlWeight(m=p.m, entries=p.bottom)
    return sl_reduce(p.top_weight)


def boundary_2(p: InterlacingPattern) -> SlWeight:
    """(a₁ − a_m, ..., a₁ − a₂) in the normal orientation; dual of the bottom row in the dual one."""
    if p.orientation is Orientation.NORMAL:
        return dual(sl_reduce(p.top_weight))
    return dual(SlWeight(m=p.m, entries=p.bottom))


def decompose(p: InterlacingPattern) -> Counter:
    """Unique multiset of generators summing to p; its total multiplicity is a₁."""
    m, a, b = p.m, p.top, p.bottom
    gens: Counter = Counter()

    def put(i: int, j: int, count: int) -> None:
        if count:
            gens[PieriGenerator.of(m, i, j, p.orientation)] += count

    put(m, m - 1, a[m - 1])
    for k in range(1, m):
        put(k, k - 1, a[k - 1] - b[k - 1])
        put(k, k, b[k - 1] - a[k])
    return gens


def recompose(
    gens: Union[GeneratorMultiset, Iterable[PieriGenerator]],
    m: Optional[int] = None,
    orientation: Orientation = Orientation.NORMAL,
) -> InterlacingPattern:
    counts = Counter(gens) if not isinstance(gens, Mapping) else Counter(dict(gens))
    ranks = {g.m for g in counts}
    orientations = {g.orientation for g in counts}
    if len(ranks) > 1 or len(orientations) > 1:
        raise InputError("generators must share rank and orientation")
    if ranks:
        m = ranks.pop()
        orientation = orientations.pop()
    if m is None:
        raise InputError("rank is required to recompose an empty multiset")

    top = [0] * m
    bottom = [0] * (m - 1)
    for gen, count in counts.items():
        if count < 0:
            raise InputError(f"negative multiplicity for {gen}")
        k = gen.top_index
        for idx in range(k):
            top[idx] += count
        for idx in range(gen.j):
            bottom[idx] += count
    return InterlacingPattern(m=m, top=tuple(top), bottom=tuple(bottom), orientation=orientation)


def bounded_compositions(total: int, caps: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Tuples e with 0 ≤ e_i ≤ caps_i and Σe = total, in lexicographic order."""
    if not caps:
        if total == 0:
            yield ()
        return
    room = sum(caps[1:])
    for first in range(max(0, total - room), min(caps[0], total) + 1):
        for rest in bounded_compositions(total - first, caps[1:]):
            yield (first,) + rest


def patterns_from(lam: SlWeight, middle: int, orientation: Orientation) -> List[InterlacingPattern]:
    """All patterns of the given orientation with ∂₂ = lam and row-sum difference middle."""
    m = lam.m
    patterns: List[InterlacingPattern] = []
    if orientation is Orientation.NORMAL:
        base = dual(lam).entries + (0,)
        caps = tuple(base[i] - base[i + 1] for i in range(m - 1))
        for c in range(middle + 1):
            top = tuple(e + c for e in base)
            for deficits in bounded_compositions(middle - c, caps):
                bottom = tuple(top[i] - deficits[i] for i in range(m - 1))
                patterns.append(InterlacingPattern(m=m, top=top, bottom=bottom, orientation=orientation))
    else:
        beta = dual(lam).entries
        caps = (middle,) + tuple(beta[i - 1] - beta[i] for i in range(1, m - 1)) + (beta[-1],)
        for e in bounded_compositions(middle, caps):
            top = tuple(beta[i] + e[i] for i in range(m - 1)) + (e[m - 1],)
            patterns.append(InterlacingPattern(m=m, top=top, bottom=beta, orientation=orientation))
    return patterns
