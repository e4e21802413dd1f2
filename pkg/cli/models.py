"""Pydantic models for CLI reports."""
from typing import List, Optional

from pydantic import BaseModel, Field

from caterpillar.verify.gorenstein import GorensteinReport
from caterpillar.verify.markov import FiberReport


class DimResponse(BaseModel):
    """Dimension of a space of invariants or conformal blocks."""
    m: int = Field(..., description="Rank")
    r: List[int] = Field(..., description="Multiples of ω₁")
    s: List[int] = Field(..., description="Multiples of ω_{m−1}")
    level: Optional[int] = Field(None, description="Level K; absent for invariants")
    dimension: int = Field(..., description="Number of labellings")
    witnesses: Optional[List[List[str]]] = Field(None, description="Edge weights of each labelling")


class GeneratorRow(BaseModel):
    entries: List[int] = Field(..., description="Residues i₁..i_{a+b−1}")
    r: List[int] = Field(..., description="Multiples of ω₁")
    s: List[int] = Field(..., description="Multiples of ω_{m−1}")


class GensResponse(BaseModel):
    """Generator tuples of X_{a,b} or Y_{a,b}."""
    m: int = Field(..., description="Rank")
    a: int = Field(..., description="Number of rω₁ legs")
    b: int = Field(..., description="Number of sω_{m−1} legs")
    generator_set: str = Field(..., description="X or Y")
    count: int = Field(..., description="Number of tuples")
    tuples: List[GeneratorRow] = Field(..., description="Tuples in lexicographic order")


class RelationRow(BaseModel):
    lhs: List[List[int]] = Field(..., description="Leading monomial")
    rhs: List[List[int]] = Field(..., description="Trailing monomial")
    position: int = Field(..., description="1-based position of the shared entry")


class RelationsResponse(BaseModel):
    """Swap relations among generator tuples."""
    m: int = Field(..., description="Rank")
    a: int = Field(..., description="Number of rω₁ legs")
    b: int = Field(..., description="Number of sω_{m−1} legs")
    leveled: bool = Field(..., description="X generators (P) or Y generators (Q)")
    count: int = Field(..., description="Number of relations")
    relations: List[RelationRow] = Field(..., description="Relations sorted by leading monomial")


class GeneratorCount(BaseModel):
    generator: str = Field(..., description="[i,j]")
    count: int = Field(..., description="Multiplicity")


class DecomposeResponse(BaseModel):
    """Generator decomposition of one interlacing pattern."""
    m: int = Field(..., description="Rank")
    orientation: str = Field(..., description="normal or dual")
    pattern: str = Field(..., description="top=...;bottom=...")
    level: int = Field(..., description="Top-left entry")
    middle: int = Field(..., description="Row-sum difference")
    boundary_1: str = Field(..., description="∂1 of the pattern")
    boundary_2: str = Field(..., description="∂2 of the pattern")
    generators: List[GeneratorCount] = Field(..., description="Generator multiset")


class WeylResponse(BaseModel):
    """Tuple image of a Weyl generator Δ_I, Δ_J or P_ij."""
    m: int = Field(..., description="Rank")
    a: int = Field(..., description="Number of rω₁ legs")
    b: int = Field(..., description="Number of sω_{m−1} legs")
    kind: str = Field(..., description="I, J or pair")
    indices: List[int] = Field(..., description="1-based indices")
    entries: List[int] = Field(..., description="Generator tuple")
    r: List[int] = Field(..., description="Multiples of ω₁")
    s: List[int] = Field(..., description="Multiples of ω_{m−1}")
    in_y: bool = Field(..., description="Whether the tuple lies in Y_{a,b}")


class MarkovResponse(BaseModel):
    """Swap connectivity of every fiber up to a degree bound."""
    m: int = Field(..., description="Rank")
    a: int = Field(..., description="Number of rω₁ legs")
    b: int = Field(..., description="Number of sω_{m−1} legs")
    leveled: bool = Field(..., description="P(a,b) when true, Q(a,b) otherwise")
    max_degree: int = Field(..., description="Degree bound")
    fiber_count: int = Field(..., description="Number of fibers checked")
    all_connected: bool = Field(..., description="Whether every fiber is connected")
    fibers: List[FiberReport] = Field(..., description="Fiber reports, by degree then chain element")


class GorensteinResponse(BaseModel):
    m: int = Field(..., description="Rank")
    a: int = Field(..., description="Number of rω₁ legs")
    b: int = Field(..., description="Number of sω_{m−1} legs")
    leveled: bool = Field(..., description="P(a,b) when true, Q(a,b) otherwise")
    report: GorensteinReport = Field(..., description="Witness checks")


class HilbertRow(BaseModel):
    level: int = Field(..., description="Level K")
    dimension: int = Field(..., description="Dimension of the level-K component")


class HilbertResponse(BaseModel):
    """Level-graded Hilbert function of P(a,b)."""
    m: int = Field(..., description="Rank")
    a: int = Field(..., description="Number of rω₁ legs")
    b: int = Field(..., description="Number of sω_{m−1} legs")
    levels: List[HilbertRow] = Field(..., description="Dimensions for K = 0..max level")


class PieriResponse(BaseModel):
    """Pieri or K-Pieri dimension of a single factor."""
    m: int = Field(..., description="Rank")
    orientation: str = Field(..., description="normal (rω₁) or dual (sω_{m−1})")
    lam: str = Field(..., description="λ")
    middle: int = Field(..., description="r or s")
    eta: str = Field(..., description="η")
    level: Optional[int] = Field(None, description="Level K when the K-Pieri rule applies")
    dimension: int = Field(..., description="0 or 1")
    pattern: Optional[str] = Field(None, description="The pattern realizing the invariant")
