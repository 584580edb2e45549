"""Parameter records shared by the functionals and oracles."""
from pydantic import BaseModel, ConfigDict, Field


class FunctionalParams(BaseModel):
    """Exponent pair (mu, p) of the Hoelder-cadlag and Besov-type functionals."""
    model_config = ConfigDict(frozen=True)

    mu: float = Field(..., description="Hoelder exponent, 0 < mu < 1")
    p: float = Field(..., description="Integrability exponent, p > 1")

    @property
    def mu_p(self) -> float:
        return self.mu * self.p


class Window(BaseModel):
    """Time window (sigma, tau) inside [0, 1]."""
    model_config = ConfigDict(frozen=True)

    sigma: float
    tau: float

    @property
    def length(self) -> float:
        return self.tau - self.sigma

    def contains(self, other: "Window") -> bool:
        return self.sigma <= other.sigma and other.tau <= self.tau


class GridSpec(BaseModel):
    """Uniform sampling grid i/G, optionally with left limits at the breakpoints."""
    model_config = ConfigDict(frozen=True)

    G: int = Field(..., description="Uniform grid resolution")
    sided: bool = True
