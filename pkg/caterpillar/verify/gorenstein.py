"""
Gorenstein witnesses for the glued semigroups.

Two independent checks. The first sums each factor algebra's generators
and asks whether the sums glue. The second searches interior elements up
to a degree bound, takes the smallest one w and tests p − w for sampled
interior p.
"""
import logging
from itertools import combinations_with_replacement
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from ..chains import ChainElement, GeneratorTuple, chain_of_tuple, check_sizes, enumerate_x, enumerate_y, glue
from ..config import DEFAULT_MAX_OBJECTS, DEFAULT_SAMPLES, DEFAULT_SEED
from ..errors import CaterpillarError, InputError, ensure_within
from ..kpieri import FactorKind, k_generators, pieri_generators
from ..pieri import InterlacingPattern, boundary_1, boundary_2, recompose
from ..weights import dual

logger = logging.getLogger(__name__)


class FactorWitness(BaseModel):
    kind: str = Field(..., description="Factor algebra: PPB, BPB, BP*B or BP*P*")
    pattern: str = Field(..., description="Sum of the factor algebra's generators")
    level: Optional[int] = Field(None, description="Number of generators summed, when leveled")
    boundary_1: str = Field(..., description="∂1 of the sum")
    boundary_2: str = Field(..., description="∂2 of the sum")


class GorensteinReport(BaseModel):
    condition_holds: bool = Field(..., description="Generator sums glue: matching boundaries and levels")
    factor_witnesses: List[FactorWitness] = Field(..., description="Per-factor generator sums")
    mismatches: List[int] = Field(default_factory=list, description="1-based positions where gluing fails")
    degenerate: bool = Field(..., description="No interior element within the degree bound")
    witness: Optional[str] = Field(None, description="Smallest interior element found")
    witness_degree: Optional[int] = Field(None, description="Degree of the witness")
    interior_found: int = Field(0, description="Interior elements within the degree bound")
    samples_tested: int = Field(0, description="Interior elements tested against the witness")
    sampled_interior_ok: Optional[bool] = Field(
        None, description="Every sampled p − w lies in the semigroup; None when degenerate"
    )
    max_degree: int = Field(..., description="Degree bound of the search")
    seed: int = Field(..., description="Sampling seed")


def factor_kinds(a: int, b: int) -> List[FactorKind]:
    return (
        [FactorKind.PPB]
        + [FactorKind.BPB] * (a - 2)
        + [FactorKind.BPSTAR_B] * (b - 2)
        + [FactorKind.BPSTAR_PSTAR]
    )


def generator_sum_witnesses(m: int, a: int, b: int, leveled: bool) -> Tuple[List[FactorWitness], List[int]]:
    sums: List[Tuple[InterlacingPattern, Optional[int]]] = []
    witnesses: List[FactorWitness] = []
    for kind in factor_kinds(a, b):
        gens = k_generators(m, kind) if leveled else pieri_generators(m, kind)
        w = recompose(gens, m, kind.orientation)
        lvl = len(gens) if leveled else None
        sums.append((w, lvl))
        witnesses.append(
            FactorWitness(
                kind=kind.value,
                pattern=str(w),
                level=lvl,
                boundary_1=str(boundary_1(w)),
                boundary_2=str(boundary_2(w)),
            )
        )
    mismatches = [
        k + 1
        for k in range(len(sums) - 1)
        if boundary_1(sums[k][0]) != dual(boundary_2(sums[k + 1][0])) or sums[k][1] != sums[k + 1][1]
    ]
    return witnesses, mismatches


def _flatten(chain: ChainElement) -> Tuple[int, ...]:
    flat = tuple(x for f in chain.factors for x in f.top + f.bottom)
    return flat if chain.level is None else flat + (chain.level,)


def slack_matrix(vectors: np.ndarray, m: int, factors: int, leveled: bool) -> np.ndarray:
    """
    Facet gaps of each flattened element: a_i − b_i, b_i − a_{i+1}, a_m and,
    when leveled, K − a_1, factor by factor.
    """
    width = 2 * m - 1
    columns = []
    for k in range(factors):
        top = vectors[:, k * width:k * width + m]
        bottom = vectors[:, k * width + m:(k + 1) * width]
        columns.append(top[:, :-1] - bottom)
        columns.append(bottom - top[:, 1:])
        columns.append(top[:, -1:])
        if leveled:
            columns.append(vectors[:, -1:] - top[:, :1])
    return np.hstack(columns)


def _unflatten(vector: Sequence[int], m: int, factors: Sequence[InterlacingPattern]) -> Optional[List[InterlacingPattern]]:
    width = 2 * m - 1
    patterns = []
    for k, f in enumerate(factors):
        row = tuple(int(x) for x in vector[k * width:(k + 1) * width])
        try:
            patterns.append(InterlacingPattern(m=m, top=row[:m], bottom=row[m:], orientation=f.orientation))
        except ValidationError:
            return None
    return patterns


def _in_semigroup(difference: np.ndarray, m: int, template: ChainElement, leveled: bool) -> bool:
    patterns = _unflatten(difference, m, template.factors)
    if patterns is None:
        return False
    level_bound = int(difference[-1]) if leveled else None
    try:
        glue(patterns, level_bound)
    except CaterpillarError:
        return False
    return True


def gorenstein_check(
    m: int,
    a: int,
    b: int,
    leveled: bool = True,
    max_degree: int = 4,
    sample_count: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    max_objects: int = DEFAULT_MAX_OBJECTS,
) -> GorensteinReport:
    check_sizes(m, a, b)
    if max_degree < 0 or sample_count < 0:
        raise InputError("max_degree and sample_count must be nonnegative")
    witnesses, mismatches = generator_sum_witnesses(m, a, b, leveled)
    if mismatches:
        logger.warning(f"Generator sums do not glue at factors {mismatches} for m={m}, a={a}, b={b}")

    gens: List[GeneratorTuple] = enumerate_x(m, a, b, max_objects) if leveled else enumerate_y(m, a, b, max_objects)
    n = len(gens)
    ensure_within("semigroup elements", sum(comb(n + d - 1, d) for d in range(max_degree + 1)), max_objects)
    chains = [chain_of_tuple(t, 1 if leveled else None) for t in gens]
    generator_vectors = np.array([_flatten(c) for c in chains], dtype=np.int64)
    factors = a + b - 2
    implicit = np.all(slack_matrix(generator_vectors, m, factors, leveled) == 0, axis=0)

    # element vector -> smallest degree reaching it
    elements = {}
    for degree in range(max_degree + 1):
        for monomial in combinations_with_replacement(range(n), degree):
            vector = tuple(int(x) for x in generator_vectors[list(monomial)].sum(axis=0)) if monomial else (
                (0,) * generator_vectors.shape[1]
            )
            elements.setdefault(vector, degree)
    keys = sorted(elements, key=lambda v: (elements[v], v))
    matrix = np.array(keys, dtype=np.int64)
    gaps = slack_matrix(matrix, m, factors, leveled)[:, ~implicit]
    interior_rows = np.flatnonzero(np.all(gaps > 0, axis=1)) if gaps.shape[1] else np.arange(len(keys))
    interior = [keys[i] for i in interior_rows if any(keys[i])]
    logger.info(f"Found {len(interior)} interior elements among {len(keys)} up to degree {max_degree}")

    report = dict(
        condition_holds=not mismatches,
        factor_witnesses=witnesses,
        mismatches=mismatches,
        max_degree=max_degree,
        seed=seed,
    )
    if not interior:
        return GorensteinReport(degenerate=True, **report)

    w = np.array(interior[0], dtype=np.int64)
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(interior), size=min(sample_count, len(interior)), replace=False)
    failures = [
        i for i in sorted(int(c) for c in chosen)
        if not _in_semigroup(np.array(interior[i], dtype=np.int64) - w, m, chains[0], leveled)
    ]
    if failures:
        logger.warning(f"{len(failures)} sampled interior elements are not witness translates")
    return GorensteinReport(
        degenerate=False,
        witness=_describe(interior[0], m, chains[0]),
        witness_degree=elements[interior[0]],
        interior_found=len(interior),
        samples_tested=len(chosen),
        sampled_interior_ok=not failures,
        **report,
    )


def _describe(vector: Sequence[int], m: int, template: ChainElement) -> str:
    patterns = _unflatten(vector, m, template.factors) or []
    text = " | ".join(str(p) for p in patterns)
    if template.level is not None:
        text += f" @ K={vector[-1]}"
    return text
