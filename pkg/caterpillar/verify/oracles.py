"""Brute-force oracles that share no code with the pattern machinery."""
import logging
from typing import List, Optional, Sequence

from ..errors import InputError
from ..weights import SlWeight, dual, gl_lift, require_same_rank

logger = logging.getLogger(__name__)


def _conjugate(partition: Sequence[int]) -> List[int]:
    width = partition[0] if partition else 0
    return [sum(1 for row in partition if row >= col) for col in range(1, width + 1)]


def is_horizontal_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """outer/inner is a horizontal strip: every column grows by at most one box."""
    outer_cols = _conjugate(outer)
    inner_cols = _conjugate(inner)
    inner_cols += [0] * (len(outer_cols) - len(inner_cols))
    if len(inner_cols) > len(outer_cols):
        return False
    return all(0 <= o - i <= 1 for o, i in zip(outer_cols, inner_cols))


def lr_strip_oracle(lam: SlWeight, r: int, eta: SlWeight) -> int:
    """
    1 when some lift of η* is the diagram of λ plus a horizontal strip of r boxes.

    Every lift c is tried, so no divisibility argument is used.
    """
    m = require_same_rank(lam, eta)
    if r < 0:
        raise InputError(f"r must be nonnegative, got {r}")
    inner = list(lam.entries) + [0]
    eta_star = dual(eta)
    target_size = sum(inner) + r
    for c in range(target_size + 1):
        outer = list(gl_lift(eta_star, c).entries)
        if sum(outer) > target_size:
            break
        if sum(outer) == target_size and is_horizontal_strip(outer, inner):
            return 1
    return 0


def sl2_fusion(x: int, y: int, z: int, k: Optional[int]) -> int:
    """Three-point sl₂ fusion coefficient; k=None drops the level bound."""
    if (x + y + z) % 2 or not abs(x - y) <= z <= x + y:
        return 0
    if k is not None and x + y + z > 2 * k:
        return 0
    return 1


def sl2_fusion_oracle(weights: Sequence[int], k: Optional[int]) -> int:
    """Fusion dimension along the caterpillar with legs in the given order."""
    if len(weights) < 3:
        raise InputError(f"need at least three legs, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise InputError("weights must be nonnegative")
    if len(weights) == 3:
        return sl2_fusion(*weights, k)
    bound = sum(weights) if k is None else k
    labels = range(bound + 1)
    dist = [sl2_fusion(weights[0], weights[1], j, k) for j in labels]
    for w in weights[2:-2]:
        dist = [sum(dist[i] * sl2_fusion(i, w, j, k) for i in labels) for j in labels]
    return sum(dist[i] * sl2_fusion(i, weights[-2], weights[-1], k) for i in labels)
