"""Jump process, Monte Carlo and corpus configuration models."""
from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional, Tuple
from enum import Enum


class ProcessKind(str, Enum):
    """Simulated process family."""
    POISSON = "poisson"
    COMPOUND_POISSON = "compound_poisson"


class JumpLaw(str, Enum):
    """Jump amplitude distribution."""
    UNIT = "unit"
    RADEMACHER = "rademacher"
    UNIFORM = "uniform"


class ProcessSpec(BaseModel):
    """Compound Poisson process on [0, 1] started at 0."""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: ProcessKind = ProcessKind.POISSON
    lam: float = Field(..., alias="lambda", description="Jump intensity per unit time")
    jump_law: JumpLaw = JumpLaw.UNIT
    low: Optional[float] = Field(default=None, description="Lower bound for uniform jumps")
    high: Optional[float] = Field(default=None, description="Upper bound for uniform jumps")
    scale: float = Field(default=1.0, description="Common factor applied to every amplitude")

    def scaled(self, c: float) -> "ProcessSpec":
        """Same process with every jump multiplied by c (same random numbers)."""
        return self.model_copy(update={"scale": self.scale * c})


class MomentHypothesis(BaseModel):
    """Moment bound E[Delta^p] <= C0 |u - s|^(1 + r)."""
    model_config = ConfigDict(frozen=True)

    p: float
    r: float
    C0: float


class MCConfig(BaseModel):
    """Replicate count, seed and confidence of a Monte Carlo run."""
    model_config = ConfigDict(frozen=True)

    M: int = Field(..., description="Number of replicates")
    seed: int
    confidence: float = 0.99
    workers: int = 1


class MCEstimate(BaseModel):
    """Sample mean with a normal-approximation confidence half width."""
    model_config = ConfigDict(frozen=True)

    mean: float
    half_width: float
    M: int
    std: float = 0.0

    @property
    def upper(self) -> float:
        return self.mean + self.half_width

    @property
    def lower(self) -> float:
        return self.mean - self.half_width


class CorpusSpec(BaseModel):
    """Random step path corpus with a guaranteed minimum breakpoint gap."""
    model_config = ConfigDict(frozen=True)

    count: int = 1000
    min_jumps: int = 0
    max_jumps: int = 12
    min_gap: float = 0.01
    dim: int = 1
    amplitude: float = Field(default=1.0, description="Standard deviation of the normal jumps")
    seed: int = 0


class ExperimentConfig(BaseModel):
    """Monte Carlo experiment read from JSON by the ``mc`` command."""
    model_config = ConfigDict(frozen=True)

    experiment: str = Field(default="corollary1", description="corollary1 or dyadic")
    process: ProcessSpec
    mu: float
    p: float
    M: int
    seed: int
    confidence: Optional[float] = None
    triples: Optional[List[Tuple[float, float, float]]] = None
    n_range: Tuple[int, int] = (4, 12)
    r: Optional[float] = None
    C0: Optional[float] = None
