"""Step path models."""
from pydantic import BaseModel, ConfigDict, Field
from typing import Tuple
from enum import Enum
import numpy as np


Point = Tuple[float, ...]


class Side(str, Enum):
    """Which side of a time point is evaluated."""
    AT = "at"
    LEFT = "left-limit"


class SidedTime(BaseModel):
    """A time in [0, 1] tagged as evaluated at t or as the left limit f(t-)."""
    model_config = ConfigDict(frozen=True)

    t: float = Field(..., description="Time in [0, 1]")
    side: Side = Side.AT

    @property
    def order_key(self) -> Tuple[float, int]:
        """Sort key; a left limit comes before the value at the same time."""
        return (self.t, 0 if self.side == Side.LEFT else 1)


class CadlagStep(BaseModel):
    """Canonical finite-jump step path on [0, 1] with values in R^dim.

    Piece k covers [starts[k], ends[k]) and carries values[k]; the last piece
    is closed at 1. Construct through ``regularity.make_step_path`` so that
    breakpoints are validated and equal neighbouring values are merged.
    """
    model_config = ConfigDict(frozen=True)

    dim: int = Field(..., description="Dimension of the value space")
    breakpoints: Tuple[float, ...] = Field(default=(), description="Jump times in (0, 1)")
    values: Tuple[Point, ...] = Field(..., description="Piece values, one more than breakpoints")

    @property
    def jumps(self) -> int:
        return len(self.breakpoints)

    @property
    def pieces(self) -> int:
        return len(self.values)

    @property
    def times(self) -> np.ndarray:
        return np.asarray(self.breakpoints, dtype=float)

    @property
    def points(self) -> np.ndarray:
        """Piece values as a (pieces, dim) array."""
        return np.asarray(self.values, dtype=float).reshape(self.pieces, self.dim)

    @property
    def starts(self) -> np.ndarray:
        return np.concatenate(([0.0], self.times))

    @property
    def ends(self) -> np.ndarray:
        return np.concatenate((self.times, [1.0]))

    @property
    def lengths(self) -> np.ndarray:
        return self.ends - self.starts

    @property
    def is_constant(self) -> bool:
        return self.jumps == 0
