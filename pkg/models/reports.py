"""Functional values, audit rows and derived constants."""
from pydantic import BaseModel, ConfigDict, Field
from typing import Dict, Optional

from .params import FunctionalParams


class SeminormReport(BaseModel):
    """All sup-based seminorms of one path."""
    model_config = ConfigDict(frozen=True)

    holder: float = Field(..., description="[f]_mu")
    left_end: float = Field(..., description="|f]_mu")
    right_end: float = Field(..., description="[f|_mu")
    tilde: float = Field(..., description="sup over eta of N(f;eta)/eta^mu")
    hat: float = Field(..., description="midpoint-triple seminorm")
    params: FunctionalParams


class BesovReport(BaseModel):
    """All integral functionals of one path (p-th roots taken)."""
    model_config = ConfigDict(frozen=True)

    triple: float
    left: float
    right: float
    lp: float
    sup: float
    params: FunctionalParams

    @property
    def total(self) -> float:
        """[[f]] + ||f]] + [[f||, the right side of the main estimate."""
        return self.triple + self.left + self.right


class AuditReport(BaseModel):
    """One inequality check lhs <= rhs."""
    model_config = ConfigDict(frozen=True)

    check_name: str
    lhs: float
    rhs: float
    slack: float = Field(..., description="rhs - lhs")
    ratio: float = Field(..., description="lhs / rhs, 0/0 read as 0")
    passed: bool
    params: Dict[str, float] = Field(default_factory=dict)


class DerivedConstants(BaseModel):
    """Admissible constants of the main estimate and its proof chain for one (mu, p)."""
    model_config = ConfigDict(frozen=True)

    mu: float
    p: float
    delta: float = Field(..., description="Free parameter used by the proof-chain audit")
    chain_fo1_C: float
    chain_f51_C: float
    chain_f52_C: float
    chain_C: float = Field(..., description="Constant of the combined seminorm chain")
    delta_star: float = Field(..., description="delta with chain_C * delta^mu = 1/2")
    theorem1_C: float
    theorem1_sup_C: float
    note: Optional[str] = None


class CorollaryConstants(BaseModel):
    """Kernel integrals turning moment hypotheses into functional moment bounds."""
    model_config = ConfigDict(frozen=True)

    mu: float
    r: float
    p: float
    c_triple: float
    c_left: float
    c_right: float
