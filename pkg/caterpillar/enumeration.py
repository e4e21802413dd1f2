"""
Graded dimensions as dynamic programs over boundary weights.

A labelling of the caterpillar is a sequence of edge weights λ₁..λ_{a+b−3}
such that every factor passes the (K-)Pieri test. The state carried from
one factor to the next is the ∂₂ weight the next factor must have.
"""
import logging
from collections import defaultdict
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .chains import ChainElement, check_sizes, glue
from .config import DEFAULT_MAX_OBJECTS
from .errors import InputError, checked_add, ensure_within
from .kpieri import level
from .pieri import (
    Orientation,
    boundary_1,
    build_dual_pattern,
    build_pattern,
    patterns_from,
)
from .weights import SlWeight, dual

logger = logging.getLogger(__name__)

Witness = Tuple[SlWeight, ...]
TRANSITION_CACHE_SIZE = 2**14


class LabellingCount(BaseModel):
    model_config = ConfigDict(frozen=True)

    dimension: int = Field(..., description="Number of labellings")
    witnesses: Optional[Tuple[Witness, ...]] = Field(
        None, description="Edge weights λ₁..λ_{a+b−3} of each labelling, when listed"
    )

    @model_validator(mode="after")
    def _validate(self) -> "LabellingCount":
        if self.witnesses is not None and len(self.witnesses) != self.dimension:
            raise ValueError("witness count must equal the dimension")
        return self


@lru_cache(maxsize=TRANSITION_CACHE_SIZE)
def _transitions(
    lam: SlWeight, middle: int, orientation: Orientation, level_bound: Optional[int]
) -> Tuple[Tuple[SlWeight, SlWeight], ...]:
    """(∂1, dual of ∂1) for every admissible pattern leaving state lam."""
    if level_bound is not None and middle > level_bound:
        return ()
    found = patterns_from(lam, middle, orientation)
    if level_bound is not None:
        found = [p for p in found if level(p) <= level_bound]
    edges = [boundary_1(p) for p in found]
    return tuple((edge, dual(edge)) for edge in edges)


def _leg_layout(m: int, r: Sequence[int], s: Sequence[int]) -> List[Tuple[int, Orientation]]:
    """(middle leg, orientation) for each factor, left to right."""
    check_sizes(m, len(r), len(s))
    if any(x < 0 for x in list(r) + list(s)):
        raise InputError(f"leg multiples must be nonnegative, got r={list(r)}, s={list(s)}")
    layout = [(x, Orientation.NORMAL) for x in r[1:]]
    layout += [(x, Orientation.DUAL) for x in s[:-1]]
    return layout


def count_labellings(
    m: int,
    r: Sequence[int],
    s: Sequence[int],
    level_bound: Optional[int] = None,
    list_witnesses: bool = False,
    max_objects: int = DEFAULT_MAX_OBJECTS,
) -> LabellingCount:
    layout = _leg_layout(m, r, s)
    if level_bound is not None and level_bound < 0:
        raise InputError(f"level must be nonnegative, got {level_bound}")
    start = SlWeight(m=m, entries=(r[0],) + (0,) * (m - 2))
    leaf = SlWeight(m=m, entries=(s[-1],) * (m - 1))

    counts: Dict[SlWeight, int] = {start: 1}
    paths: Dict[SlWeight, List[Witness]] = {start: [()]}
    last = len(layout) - 1
    total = 0
    enumerated = 0
    found: List[Witness] = []
    for position, (middle, orientation) in enumerate(layout):
        next_counts: Dict[SlWeight, int] = defaultdict(int)
        next_paths: Dict[SlWeight, List[Witness]] = defaultdict(list)
        for lam, count in counts.items():
            moves = _transitions(lam, middle, orientation, level_bound)
            enumerated += len(moves)
            ensure_within("enumerated patterns", enumerated, max_objects)
            for edge, state in moves:
                if position == last:
                    if edge == leaf:
                        total = checked_add("labelling count", total, count)
                        if list_witnesses:
                            found.extend(paths[lam])
                    continue
                next_counts[state] = checked_add("labelling count", next_counts[state], count)
                if list_witnesses:
                    next_paths[state].extend(w + (edge,) for w in paths[lam])
        ensure_within("labelling states", len(next_counts), max_objects)
        if list_witnesses:
            ensure_within("labelling witnesses", sum(len(v) for v in next_paths.values()), max_objects)
        counts, paths = next_counts, next_paths

    logger.debug(f"Counted {total} labellings for m={m}, r={list(r)}, s={list(s)}, K={level_bound}")
    return LabellingCount(dimension=total, witnesses=tuple(found) if list_witnesses else None)


def dim_invariants(m: int, r: Sequence[int], s: Sequence[int], max_objects: int = DEFAULT_MAX_OBJECTS) -> int:
    """Dimension of the SL_m invariants of the tensor product."""
    return count_labellings(m, r, s, None, max_objects=max_objects).dimension


def dim_conformal_blocks(
    m: int, r: Sequence[int], s: Sequence[int], k: int, max_objects: int = DEFAULT_MAX_OBJECTS
) -> int:
    """Dimension of the level-K conformal blocks."""
    if k < 0:
        raise InputError(f"level must be nonnegative, got {k}")
    return count_labellings(m, r, s, k, max_objects=max_objects).dimension


def realize_witness(
    m: int, r: Sequence[int], s: Sequence[int], witness: Sequence[SlWeight], level_bound: Optional[int] = None
) -> ChainElement:
    """Rebuild and glue the unique factor patterns that carry the given edge weights."""
    layout = _leg_layout(m, r, s)
    if len(witness) != len(layout) - 1:
        raise InputError(f"expected {len(layout) - 1} edge weights, got {len(witness)}")
    incoming = [SlWeight(m=m, entries=(r[0],) + (0,) * (m - 2))] + [dual(w) for w in witness]
    outgoing = list(witness) + [SlWeight(m=m, entries=(s[-1],) * (m - 1))]
    factors = []
    for position, ((middle, orientation), lam, eta) in enumerate(zip(layout, incoming, outgoing)):
        build = build_pattern if orientation is Orientation.NORMAL else build_dual_pattern
        p = build(lam, middle, eta)
        if p is None:
            raise InputError(f"no pattern for factor {position + 1} with ∂2={lam}, middle={middle}, ∂1={eta}")
        factors.append(p)
    return glue(factors, level_bound)


def hilbert_level(m: int, a: int, b: int, k: int, max_objects: int = DEFAULT_MAX_OBJECTS) -> int:
    """
    Dimension of the level-K component of P(a,b).

    Sums dim_conformal_blocks over all (r⃗, s⃗) with entries at most K in a
    single pass by letting every middle leg range over 0..K.
    """
    check_sizes(m, a, b)
    if k < 0:
        raise InputError(f"level must be nonnegative, got {k}")
    orientations = [Orientation.NORMAL] * (a - 1) + [Orientation.DUAL] * (b - 1)
    counts: Dict[SlWeight, int] = defaultdict(int)
    for r0 in range(k + 1):
        counts[SlWeight(m=m, entries=(r0,) + (0,) * (m - 2))] += 1
    total = 0
    enumerated = 0
    last = len(orientations) - 1
    for position, orientation in enumerate(orientations):
        next_counts: Dict[SlWeight, int] = defaultdict(int)
        for lam, count in counts.items():
            for middle in range(k + 1):
                moves = _transitions(lam, middle, orientation, k)
                enumerated += len(moves)
                ensure_within("enumerated patterns", enumerated, max_objects)
                for edge, state in moves:
                    if position == last:
                        if len(set(edge.entries)) == 1:
                            total = checked_add("hilbert count", total, count)
                        continue
                    next_counts[state] = checked_add("hilbert count", next_counts[state], count)
        ensure_within("hilbert states", len(next_counts), max_objects)
        counts = next_counts
    logger.info(f"Level {k} component of P({a},{b}) for m={m} has dimension {total}")
    return total


def hilbert_series(m: int, a: int, b: int, max_level: int, max_objects: int = DEFAULT_MAX_OBJECTS) -> List[int]:
    return [hilbert_level(m, a, b, k, max_objects) for k in range(max_level + 1)]
