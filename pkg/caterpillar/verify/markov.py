"""
Fiber connectivity of the swap moves.

Swaps generate the toric ideal up to degree d exactly when every fiber of
the degree map (multisets of generators with the same chain-element sum)
is connected under single swap moves.
"""
import logging
from collections import defaultdict
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, Field, model_validator

from ..chains import (
    GeneratorTuple,
    WeightData,
    chain_of_tuple,
    check_sizes,
    enumerate_x,
    enumerate_y,
    swap_moves,
    weights_of_tuple,
)
from ..config import DEFAULT_MAX_OBJECTS
from ..errors import InputError, ensure_within

logger = logging.getLogger(__name__)

Multiset = Tuple[int, ...]


class FiberReport(BaseModel):
    multidegree: WeightData = Field(..., description="Leg multiples and level shared by the fiber")
    degree: int = Field(..., description="Number of generators in each monomial")
    element: str = Field(..., description="The common chain-element sum, factor by factor")
    fiber_size: int = Field(..., description="Number of monomials in the fiber")
    connected: bool = Field(..., description="Whether swap moves connect the fiber")
    witness_path: Optional[List[List[str]]] = Field(
        None, description="Swap path between the extreme monomials of a connected fiber"
    )
    disconnecting_pair: Optional[Tuple[List[str], List[str]]] = Field(
        None, description="Two monomials no swap path joins"
    )

    @model_validator(mode="after")
    def _validate(self) -> "FiberReport":
        if self.connected and self.disconnecting_pair is not None:
            raise ValueError("a connected fiber has no disconnecting pair")
        return self


def _vector(t: GeneratorTuple, leveled: bool) -> Tuple[int, ...]:
    chain = chain_of_tuple(t, 1 if leveled else None)
    flat = [x for f in chain.factors for x in f.top + f.bottom]
    return tuple(flat) + ((1,) if leveled else ())


def _describe(vector: Tuple[int, ...], m: int, factors: int) -> str:
    width = 2 * m - 1
    parts = []
    for k in range(factors):
        row = vector[k * width:(k + 1) * width]
        parts.append(f"{','.join(map(str, row[:m]))}/{','.join(map(str, row[m:]))}")
    text = " | ".join(parts)
    if len(vector) > factors * width:
        text += f" @ K={vector[-1]}"
    return text


def _monomial_text(monomial: Multiset, gens: List[GeneratorTuple]) -> List[str]:
    return [str(gens[i]) for i in monomial]


def markov_check(
    m: int,
    a: int,
    b: int,
    leveled: bool = True,
    max_degree: int = 3,
    max_objects: int = DEFAULT_MAX_OBJECTS,
) -> List[FiberReport]:
    """Report swap connectivity of every fiber reached by at most max_degree generators."""
    check_sizes(m, a, b)
    if max_degree < 1:
        raise InputError(f"max_degree must be positive, got {max_degree}")
    gens = enumerate_x(m, a, b, max_objects) if leveled else enumerate_y(m, a, b, max_objects)
    n = len(gens)
    ensure_within("monomials", sum(comb(n + d - 1, d) for d in range(1, max_degree + 1)), max_objects)

    vectors = [_vector(t, leveled) for t in gens]
    weights = [weights_of_tuple(t) for t in gens]
    if not leveled:
        weights = [WeightData(r=w.r, s=w.s, level=None) for w in weights]
    index = {t.entries: i for i, t in enumerate(gens)}
    moves: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for i, j in combinations_with_replacement(range(n), 2):
        moves[(i, j)] = [
            tuple(sorted((index[x.entries], index[y.entries])))
            for _, (x, y) in swap_moves(gens[i], gens[j], restrict_to_y=not leveled)
        ]

    reports: List[FiberReport] = []
    for degree in range(1, max_degree + 1):
        fibers: Dict[Tuple[int, ...], List[Multiset]] = defaultdict(list)
        for monomial in combinations_with_replacement(range(n), degree):
            total = tuple(sum(col) for col in zip(*(vectors[i] for i in monomial)))
            fibers[total].append(monomial)
        for total in sorted(fibers):
            reports.append(_fiber_report(fibers[total], total, degree, gens, weights, moves, m))
    disconnected = sum(1 for rep in reports if not rep.connected)
    if disconnected:
        logger.warning(f"{disconnected} disconnected fibers for m={m}, a={a}, b={b}, leveled={leveled}")
    logger.info(f"Checked {len(reports)} fibers up to degree {max_degree}")
    return reports


def _fiber_report(
    fiber: List[Multiset],
    total: Tuple[int, ...],
    degree: int,
    gens: List[GeneratorTuple],
    weights: List[WeightData],
    moves: Dict[Tuple[int, int], List[Tuple[int, int]]],
    m: int,
) -> FiberReport:
    members = set(fiber)
    graph = nx.Graph()
    graph.add_nodes_from(fiber)
    for monomial in fiber:
        for p, q in combinations(range(degree), 2):
            i, j = monomial[p], monomial[q]
            rest = monomial[:p] + monomial[p + 1:q] + monomial[q + 1:]
            for x, y in moves[(i, j)]:
                target = tuple(sorted(rest + (x, y)))
                if target in members:
                    graph.add_edge(monomial, target)

    multidegree = weights[fiber[0][0]]
    for i in fiber[0][1:]:
        multidegree = multidegree + weights[i]
    first, last = min(fiber), max(fiber)
    connected = nx.is_connected(graph)
    witness_path = None
    disconnecting_pair = None
    if connected:
        if first != last:
            witness_path = [_monomial_text(mono, gens) for mono in nx.shortest_path(graph, first, last)]
    else:
        components = sorted(min(c) for c in nx.connected_components(graph))
        disconnecting_pair = (_monomial_text(components[0], gens), _monomial_text(components[1], gens))
    return FiberReport(
        multidegree=multidegree,
        degree=degree,
        element=_describe(total, m, len(gens[0].entries) - 1),
        fiber_size=len(fiber),
        connected=connected,
        witness_path=witness_path,
        disconnecting_pair=disconnecting_pair,
    )


def all_connected(reports: List[FiberReport]) -> bool:
    return all(rep.connected for rep in reports)
