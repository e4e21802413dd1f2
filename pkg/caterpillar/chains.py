"""
Caterpillar fiber products Q(a,b) and P(a,b).

A chain element is a row of a+b−2 interlacing patterns: one PPB factor,
a−2 BPB factors, b−2 BP*B factors and one BP*P* factor, glued so that
∂₁ of each factor is dual to ∂₂ of the next. Level-one elements of P(a,b)
are encoded by generator tuples i₁..i_{a+b−1} over Z/mZ.
"""
import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .config import DEFAULT_MAX_OBJECTS
from .errors import BoundaryMismatch, InputError, LevelExceeded, NoInternalZero, ensure_within
from .kpieri import level
from .pieri import InterlacingPattern, Orientation, PieriGenerator, boundary_1, boundary_2, decompose
from .weights import dual

logger = logging.getLogger(__name__)


def check_sizes(m: int, a: int, b: int) -> None:
    if m < 2:
        raise InputError(f"rank must be at least 2, got {m}")
    if a < 2 or b < 2:
        raise InputError(f"a and b must be at least 2, got a={a}, b={b}")


class GeneratorTuple(BaseModel):
    """An element of X_{a,b}: residues i₁..i_{a+b−1} with unit-step differences."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., description="Rank")
    a: int = Field(..., description="Number of rω₁ legs")
    b: int = Field(..., description="Number of sω_{m−1} legs")
    entries: Tuple[int, ...] = Field(..., description="Residues in 0..m−1")

    @model_validator(mode="after")
    def _validate(self) -> "GeneratorTuple":
        m, a, b, t = self.m, self.a, self.b, self.entries
        if m < 2 or a < 2 or b < 2:
            raise ValueError(f"need m, a, b ≥ 2, got m={m}, a={a}, b={b}")
        if len(t) != a + b - 1:
            raise ValueError(f"tuple for a={a}, b={b} needs {a + b - 1} entries, got {len(t)}")
        if any(not 0 <= e < m for e in t):
            raise ValueError(f"entries must be residues mod {m}, got {t}")
        if t[0] not in (0, m - 1) or t[-1] not in (0, m - 1):
            raise ValueError(f"end entries must be 0 or {m - 1}, got {t}")
        for k in range(a - 1):
            if (t[k] - t[k + 1]) % m not in (0, 1):
                raise ValueError(f"step {k + 1} of {t} must drop by 0 or 1")
        for k in range(a - 1, a + b - 2):
            if (t[k] - t[k + 1]) % m not in (0, m - 1):
                raise ValueError(f"step {k + 1} of {t} must rise by 0 or 1")
        return self

    @classmethod
    def parse(cls, text: str, m: int, a: int, b: int) -> "GeneratorTuple":
        try:
            entries = tuple(int(part) for part in text.strip().split(","))
        except ValueError:
            raise InputError(f"cannot parse tuple {text!r}") from None
        return cls(m=m, a=a, b=b, entries=entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def in_y(self) -> bool:
        """Nonzero, with its nonzero entries forming one unbroken block."""
        support = [k for k, e in enumerate(self.entries) if e]
        return bool(support) and support[-1] - support[0] + 1 == len(support)

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


class WeightData(BaseModel):
    """Multidegree (r⃗, s⃗, K) of a chain element; level None in Q(a,b)."""
    model_config = ConfigDict(frozen=True)

    r: Tuple[int, ...] = Field(..., description="Multiples of ω₁ on the first a legs")
    s: Tuple[int, ...] = Field(..., description="Multiples of ω_{m−1} on the last b legs")
    level: Optional[int] = Field(None, description="Level K")

    @model_validator(mode="after")
    def _validate(self) -> "WeightData":
        if any(x < 0 for x in self.r + self.s):
            raise ValueError("leg multiples must be nonnegative")
        if self.level is not None and any(x > self.level for x in self.r + self.s):
            raise ValueError(f"leg multiples {self.r}, {self.s} exceed level {self.level}")
        return self

    def __add__(self, other: "WeightData") -> "WeightData":
        if len(self.r) != len(other.r) or len(self.s) != len(other.s):
            raise InputError("cannot add weight data of different shapes")
        total = None if self.level is None or other.level is None else self.level + other.level
        return WeightData(
            r=tuple(x + y for x, y in zip(self.r, other.r)),
            s=tuple(x + y for x, y in zip(self.s, other.s)),
            level=total,
        )


class ChainElement(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., description="Rank")
    a: int = Field(..., description="Number of rω₁ legs")
    b: int = Field(..., description="Number of sω_{m−1} legs")
    factors: Tuple[InterlacingPattern, ...] = Field(..., description="PPB, BPB..., BP*B..., BP*P*")
    level: Optional[int] = Field(None, description="Shared level K; None in Q(a,b)")

    @model_validator(mode="after")
    def _validate(self) -> "ChainElement":
        if len(self.factors) != self.a + self.b - 2:
            raise ValueError(f"a={self.a}, b={self.b} needs {self.a + self.b - 2} factors")
        expected = [Orientation.NORMAL] * (self.a - 1) + [Orientation.DUAL] * (self.b - 1)
        if [f.orientation for f in self.factors] != expected:
            raise ValueError("factor orientations must be a−1 normal followed by b−1 dual")
        if any(f.m != self.m for f in self.factors):
            raise ValueError("factors must share the chain's rank")
        if self.factors:
            check_boundaries(self.factors)
        return self

    def weight_data(self) -> WeightData:
        normals = self.factors[: self.a - 1]
        duals = self.factors[self.a - 1:]
        r = (boundary_2(self.factors[0])[0],) + tuple(f.middle for f in normals)
        s = tuple(f.middle for f in duals) + (boundary_1(self.factors[-1])[0],)
        return WeightData(r=r, s=s, level=self.level)

    def __add__(self, other: "ChainElement") -> "ChainElement":
        if (self.m, self.a, self.b) != (other.m, other.a, other.b):
            raise InputError("cannot add chain elements of different shapes")
        if (self.level is None) != (other.level is None):
            raise InputError("cannot add a leveled and an unleveled chain element")
        total = None if self.level is None else self.level + other.level
        return ChainElement(
            m=self.m,
            a=self.a,
            b=self.b,
            factors=tuple(p + q for p, q in zip(self.factors, other.factors)),
            level=total,
        )


def check_boundaries(factors: Sequence[InterlacingPattern]) -> None:
    """Raise BoundaryMismatch unless the leaves are fundamental multiples and each ∂1 meets the next ∂2*."""
    m = factors[0].m
    leaf = boundary_2(factors[0])
    if any(leaf.entries[1:]):
        raise BoundaryMismatch(1, f"leaf weight {leaf} is not a multiple of ω1")
    last = boundary_1(factors[-1])
    if len(set(last.entries)) != 1:
        raise BoundaryMismatch(len(factors), f"leaf weight {last} is not a multiple of ω{m - 1}")
    for k in range(len(factors) - 1):
        left = boundary_1(factors[k])
        right = dual(boundary_2(factors[k + 1]))
        if left != right:
            raise BoundaryMismatch(k + 1, f"∂1 = {left} but next ∂2* = {right}")


def glue(factors: Sequence[InterlacingPattern], level_bound: Optional[int] = None) -> ChainElement:
    """
    Glue factors along their boundary data.

    a and b are read off the orientations (a−1 normal factors, then b−1
    dual ones). Positions in errors are 1-based factor indices.
    """
    factors = tuple(factors)
    if not factors:
        raise InputError("a chain needs at least two factors")
    m = factors[0].m
    if any(f.m != m for f in factors):
        raise InputError("factors must share a rank")
    a = 1 + sum(1 for f in factors if f.orientation is Orientation.NORMAL)
    b = len(factors) + 2 - a
    check_sizes(m, a, b)
    if any(f.orientation is Orientation.DUAL for f in factors[: a - 1]):
        raise InputError("normal factors must precede dual factors")

    check_boundaries(factors)
    if level_bound is not None:
        if level_bound < 0:
            raise InputError(f"level must be nonnegative, got {level_bound}")
        for k, f in enumerate(factors):
            if level(f) > level_bound:
                raise LevelExceeded(k + 1, level(f), level_bound)
    return ChainElement(m=m, a=a, b=b, factors=factors, level=level_bound)


def _count_x(m: int, a: int, b: int) -> int:
    """Size of X_{a,b} by a transfer count over residues."""
    counts = {i: 1 for i in {0, m - 1}}
    for k in range(a + b - 2):
        step = 1 if k < a - 1 else -1
        nxt: Dict[int, int] = Counter()
        for i, c in counts.items():
            for j in {i, (i - step) % m}:
                nxt[j] += c
        counts = nxt
    return sum(c for i, c in counts.items() if i in (0, m - 1))


def _extend(m: int, a: int, b: int, prefix: List[int], out: List[Tuple[int, ...]]) -> None:
    n = a + b - 1
    if len(prefix) == n:
        if prefix[-1] in (0, m - 1):
            out.append(tuple(prefix))
        return
    i = prefix[-1]
    step = 1 if len(prefix) <= a - 1 else -1
    for j in sorted({i, (i - step) % m}):
        prefix.append(j)
        _extend(m, a, b, prefix, out)
        prefix.pop()


def enumerate_x(m: int, a: int, b: int, max_objects: int = DEFAULT_MAX_OBJECTS) -> List[GeneratorTuple]:
    """All of X_{a,b} in lexicographic order."""
    check_sizes(m, a, b)
    ensure_within("X tuples", _count_x(m, a, b), max_objects)
    raw: List[Tuple[int, ...]] = []
    for first in sorted({0, m - 1}):
        _extend(m, a, b, [first], raw)
    logger.info(f"Enumerated {len(raw)} X tuples for m={m}, a={a}, b={b}")
    return [GeneratorTuple(m=m, a=a, b=b, entries=t) for t in raw]


def enumerate_y(m: int, a: int, b: int, max_objects: int = DEFAULT_MAX_OBJECTS) -> List[GeneratorTuple]:
    """Tuples of X_{a,b} that generate Q(a,b)."""
    return [t for t in enumerate_x(m, a, b, max_objects) if t.in_y()]


def weights_of_tuple(t: GeneratorTuple) -> WeightData:
    """Leg multiples and level of the chain a tuple encodes."""
    m, a, e = t.m, t.a, t.entries
    r = [int(e[0] == m - 1)]
    r += [int((e[k] - e[k + 1]) % m == 1) for k in range(a - 1)]
    s = [int((e[k] - e[k + 1]) % m == m - 1) for k in range(a - 1, len(e) - 1)]
    s.append(int(e[-1] == m - 1))
    return WeightData(r=tuple(r), s=tuple(s), level=1)


def factor_generators(t: GeneratorTuple) -> List[PieriGenerator]:
    """One level-one generator per factor: [i_k, i_{k+1}] on the normal side, [i_{k+1}, i_k] on the dual side."""
    e = t.entries
    gens = [PieriGenerator.of(t.m, e[k], e[k + 1], Orientation.NORMAL) for k in range(t.a - 1)]
    gens += [PieriGenerator.of(t.m, e[k + 1], e[k], Orientation.DUAL) for k in range(t.a - 1, len(e) - 1)]
    return gens


def chain_of_tuple(t: GeneratorTuple, level_bound: Optional[int] = 1) -> ChainElement:
    return glue([g.pattern() for g in factor_generators(t)], level_bound)


def tuple_of_chain(c: ChainElement) -> GeneratorTuple:
    """Inverse of chain_of_tuple on chains whose factors have level at most one."""
    entries = [0] * (c.a + c.b - 1)
    for k, f in enumerate(c.factors):
        if level(f) > 1:
            raise InputError(f"factor {k + 1} has level {level(f)}; only level-one chains map to tuples")
        gens = list(decompose(f).elements())
        if not gens:
            continue
        g = gens[0]
        if f.orientation is Orientation.NORMAL:
            entries[k], entries[k + 1] = g.i, g.j
        else:
            entries[k], entries[k + 1] = g.j, g.i
    return GeneratorTuple(m=c.m, a=c.a, b=c.b, entries=tuple(entries))


def tuple_from_legs(m: int, a: int, b: int, r: Sequence[int], s: Sequence[int]) -> Optional[GeneratorTuple]:
    """The X tuple with 0/1 multidegree (r, s), or None if there is none."""
    check_sizes(m, a, b)
    if len(r) != a or len(s) != b or any(x not in (0, 1) for x in list(r) + list(s)):
        raise InputError(f"need 0/1 legs of lengths {a} and {b}, got r={r}, s={s}")
    entries = [(-r[0]) % m]
    for k in range(1, a):
        entries.append((entries[-1] - r[k]) % m)
    for k in range(b - 1):
        entries.append((entries[-1] + s[k]) % m)
    if entries[-1] not in (0, m - 1) or s[-1] != int(entries[-1] == m - 1):
        return None
    return GeneratorTuple(m=m, a=a, b=b, entries=tuple(entries))


def multidegree_census(m: int, a: int, b: int, max_objects: int = DEFAULT_MAX_OBJECTS) -> Counter:
    """Number of X tuples per multidegree."""
    return Counter(weights_of_tuple(t) for t in enumerate_x(m, a, b, max_objects))


class SwapRelation(BaseModel):
    """Quadratic binomial u·v − u'·v'; the leading monomial is on the left."""
    model_config = ConfigDict(frozen=True)

    lhs: Tuple[GeneratorTuple, GeneratorTuple] = Field(..., description="Leading monomial")
    rhs: Tuple[GeneratorTuple, GeneratorTuple] = Field(..., description="Trailing monomial")
    position: int = Field(..., description="1-based tuple position of the shared entry")

    def __str__(self) -> str:
        u, v = self.lhs
        x, y = self.rhs
        return f"(({u}),({v}))=(({x}),({y}))"


def swap(u: GeneratorTuple, v: GeneratorTuple, position: int) -> Tuple[GeneratorTuple, GeneratorTuple]:
    """Exchange tails after the shared entry at the 1-based position."""
    k = position - 1
    if u.entries[k] != v.entries[k]:
        raise InputError(f"tuples {u} and {v} differ at position {position}")
    first = u.entries[:k] + v.entries[k:]
    second = v.entries[:k] + u.entries[k:]
    return (
        GeneratorTuple(m=u.m, a=u.a, b=u.b, entries=first),
        GeneratorTuple(m=u.m, a=u.a, b=u.b, entries=second),
    )


def _monomial(u: GeneratorTuple, v: GeneratorTuple) -> Tuple[GeneratorTuple, GeneratorTuple]:
    return (u, v) if u.entries <= v.entries else (v, u)


def swap_moves(
    u: GeneratorTuple, v: GeneratorTuple, restrict_to_y: bool = False
) -> List[Tuple[int, Tuple[GeneratorTuple, GeneratorTuple]]]:
    """Nontrivial single swaps of the pair, with the cut position; Y-restricted moves keep both results in Y."""
    moves = []
    original = _monomial(u, v)
    for position in range(2, u.a + u.b - 1):
        if u.entries[position - 1] != v.entries[position - 1]:
            continue
        result = _monomial(*swap(u, v, position))
        if result == original:
            continue
        if restrict_to_y and not (result[0].in_y() and result[1].in_y()):
            continue
        moves.append((position, result))
    return moves


def swap_relations(
    m: int, a: int, b: int, leveled: bool = True, max_objects: int = DEFAULT_MAX_OBJECTS
) -> List[SwapRelation]:
    """
    All swap binomials among X (leveled) or Y (unleveled) generators.

    Each relation appears once, at its smallest cut position, with the
    lexicographically smaller monomial leading.
    """
    gens = enumerate_x(m, a, b, max_objects) if leveled else enumerate_y(m, a, b, max_objects)
    ensure_within("generator pairs", len(gens) * (len(gens) + 1) // 2, max_objects)
    found: Dict[Tuple, SwapRelation] = {}
    for idx, u in enumerate(gens):
        for v in gens[idx:]:
            for position, result in swap_moves(u, v, restrict_to_y=not leveled):
                pair = sorted([_monomial(u, v), result], key=lambda mono: (mono[0].entries, mono[1].entries))
                key = tuple((x.entries, y.entries) for x, y in pair)
                if key in found:
                    continue
                found[key] = SwapRelation(lhs=pair[0], rhs=pair[1], position=position)
    relations = [found[key] for key in sorted(found)]
    logger.info(f"Found {len(relations)} swap relations for m={m}, a={a}, b={b}, leveled={leveled}")
    return relations


def zero_split(t: GeneratorTuple) -> Tuple[GeneratorTuple, GeneratorTuple]:
    """Split at the first zero with nonzero entries on both sides."""
    e = t.entries
    for k in range(1, len(e) - 1):
        if e[k] == 0 and any(e[:k]) and any(e[k + 1:]):
            zeros = (0,) * (len(e) - k)
            left = GeneratorTuple(m=t.m, a=t.a, b=t.b, entries=e[:k] + zeros)
            right = GeneratorTuple(m=t.m, a=t.a, b=t.b, entries=(0,) * k + e[k:])
            return left, right
    raise NoInternalZero(f"tuple {t} has no zero separating nonzero entries")


def y_decomposition(t: GeneratorTuple) -> List[GeneratorTuple]:
    """Repeated zero splits down to Y tuples; the zero tuple gives an empty list."""
    if t.is_zero():
        return []
    pending = [t]
    parts: List[GeneratorTuple] = []
    while pending:
        current = pending.pop()
        try:
            left, right = zero_split(current)
        except NoInternalZero:
            parts.append(current)
            continue
        pending.extend([right, left])
    return parts


class WeylIndex(BaseModel):
    """Δ_I (kind I), Δ_J (kind J) or P_ij (kind pair); indices are 1-based."""
    model_config = ConfigDict(frozen=True)

    kind: str = Field(..., description="I, J or pair")
    indices: Tuple[int, ...] = Field(..., description="Index set, or (i, j) for a pair")


def weyl_tuple(m: int, a: int, b: int, index: WeylIndex) -> GeneratorTuple:
    """Tuple image of Δ_I, Δ_J or P_ij."""
    check_sizes(m, a, b)
    idx = index.indices
    r = [0] * a
    s = [0] * b
    if index.kind == "pair":
        if len(idx) != 2 or not (1 <= idx[0] <= a and 1 <= idx[1] <= b):
            raise InputError(f"pair must be (i, j) with i ≤ {a} and j ≤ {b}, got {idx}")
        r[idx[0] - 1] = 1
        s[idx[1] - 1] = 1
    elif index.kind in ("I", "J"):
        bound = a if index.kind == "I" else b
        if len(set(idx)) != m or len(idx) != m or any(not 1 <= i <= bound for i in idx):
            raise InputError(f"{index.kind} must be {m} distinct indices in 1..{bound}, got {idx}")
        legs = r if index.kind == "I" else s
        for i in idx:
            legs[i - 1] = 1
    else:
        raise InputError(f"unknown Weyl generator kind {index.kind!r}")
    t = tuple_from_legs(m, a, b, r, s)
    if t is None:
        raise InputError(f"no generator tuple with r={r}, s={s}")
    return t
