import os
from pathlib import Path
from typing import List, Literal, Optional, Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

# Load .env from the repository root; only diagnostics read it
env_path = Path(__file__).parent.parent / ".env"
load_dotenv(dotenv_path=env_path)

DEFAULT_MAX_OBJECTS = 10**6
COUNTER_LIMIT = 2**63 - 1
DEFAULT_SEED = 42
DEFAULT_SAMPLES = 200

Subcommand = Literal[
    "dim", "gens", "relations", "decompose", "weyl", "markov", "gorenstein", "hilbert", "pieri"
]
OutputFormat = Literal["json", "csv", "text"]


def get_env(name: str, default: Optional[str] = None) -> str:
    value = os.getenv(name, default)
    if value is None:
        raise RuntimeError(f"Environment variable {name} is required")
    return value


class RunConfig(BaseModel):
    """Everything a single CLI run depends on."""
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand = Field(..., description="Subcommand to dispatch")
    m: int = Field(3, description="Rank of SL_m")
    a: int = Field(2, description="Number of rω₁ legs")
    b: int = Field(2, description="Number of sω_{m−1} legs")
    r: Tuple[int, ...] = Field((), description="Leg multiples on the ω₁ side")
    s: Tuple[int, ...] = Field((), description="Leg multiples on the ω_{m−1} side")
    level: Optional[int] = Field(None, description="Level bound K; None means unleveled")
    leveled: bool = Field(True, description="Work in P(a,b) rather than Q(a,b)")
    generator_set: Literal["X", "Y"] = Field("X", description="Generator tuples to list")
    max_degree: int = Field(3, description="Degree bound for verification searches")
    samples: int = Field(DEFAULT_SAMPLES, description="Interior samples for the Gorenstein check")
    seed: int = Field(DEFAULT_SEED, description="Seed for sampling")
    output: OutputFormat = Field("json", description="Report format")
    max_objects: int = Field(DEFAULT_MAX_OBJECTS, description="Size guard per enumeration")
    pattern: Optional[str] = Field(None, description="Pattern text, e.g. top=3,3,1;bottom=3,2")
    orientation: Literal["normal", "dual"] = Field("normal", description="Pattern orientation")
    lam: Tuple[int, ...] = Field((), description="λ for the pieri subcommand")
    eta: Tuple[int, ...] = Field((), description="η for the pieri subcommand")
    middle: int = Field(0, description="Middle leg r or s for the pieri subcommand")
    index_set: List[int] = Field(default_factory=list, description="Weyl index set I or J")
    index_side: Literal["I", "J", "pair"] = Field("I", description="Which Weyl generator family")
    witnesses: bool = Field(False, description="List labelling witnesses in dim reports")
