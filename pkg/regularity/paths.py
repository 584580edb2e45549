"""Step path construction, sided evaluation, the metric and JSON I/O."""
import json
import logging
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
from scipy.spatial.distance import cdist

from config import settings
from models import CadlagStep, SidedTime, Side, FunctionalParams, Window
from models.errors import (
    NonMonotoneBreakpoints, BreakpointOutOfRange, LengthMismatch,
    DimensionMismatch, NonFiniteValue, TimeOutOfRange, LeftLimitAtZero,
    EmptyWindow, BadMu, BadP, BadParams, BadConfig, RegularityError
)

logger = logging.getLogger(__name__)

TimeLike = Union[SidedTime, float]


def _as_point(value, dim: int, index: int) -> np.ndarray:
    try:
        point = np.atleast_1d(np.asarray(value, dtype=float))
    except (TypeError, ValueError):
        raise BadConfig(f"values[{index}] is not numeric: {value!r}") from None
    if point.ndim != 1 or point.shape[0] != dim:
        raise DimensionMismatch(
            f"values[{index}] has {point.size} coordinates, expected {dim}"
        )
    if not np.all(np.isfinite(point)):
        raise NonFiniteValue(f"values[{index}] is not finite: {point.tolist()}")
    return point


def make_step_path(dim: int, breakpoints: Sequence[float], values: Sequence) -> CadlagStep:
    """Build a canonical step path.

    Args:
        dim: Dimension of the value space
        breakpoints: Strictly increasing jump times inside (0, 1)
        values: len(breakpoints) + 1 points (scalars allowed when dim == 1)

    Returns:
        CadlagStep with equal neighbouring values merged
    """
    if isinstance(dim, bool) or not isinstance(dim, (int, float, np.integer, np.floating)) \
            or int(dim) != dim or dim < 1:
        raise DimensionMismatch(f"dim must be a positive integer, got {dim!r}")
    dim = int(dim)

    try:
        taus = np.asarray(list(breakpoints), dtype=float).reshape(-1)
        values = list(values)
    except (TypeError, ValueError):
        raise BadConfig("breakpoints and values must be numeric sequences") from None
    if len(values) != taus.size + 1:
        raise LengthMismatch(
            f"{len(values)} values for {taus.size} breakpoints (need {taus.size + 1})"
        )

    points = np.vstack([_as_point(v, dim, i) for i, v in enumerate(values)])

    for i, tau in enumerate(taus):
        if not np.isfinite(tau):
            raise NonFiniteValue(f"breakpoints[{i}] is not finite")
        if not 0.0 < tau < 1.0:
            raise BreakpointOutOfRange(f"breakpoints[{i}] = {tau} is outside (0, 1)")
    if taus.size > 1:
        gaps = np.diff(taus)
        bad = np.flatnonzero(gaps <= settings.breakpoint_eps)
        if bad.size:
            i = int(bad[0])
            raise NonMonotoneBreakpoints(
                f"breakpoints[{i + 1}] = {taus[i + 1]} does not follow breakpoints[{i}] = {taus[i]}"
            )

    # Drop breakpoints without an actual jump
    if taus.size:
        keep = np.any(points[1:] != points[:-1], axis=1)
        taus = taus[keep]
        points = np.vstack((points[:1], points[1:][keep]))

    return CadlagStep(
        dim=dim,
        breakpoints=tuple(float(t) for t in taus),
        values=tuple(tuple(float(x) for x in row) for row in points),
    )


def constant_path(value, dim: int = 1) -> CadlagStep:
    return make_step_path(dim, [], [value])


def _as_sided(x: TimeLike) -> SidedTime:
    return x if isinstance(x, SidedTime) else SidedTime(t=float(x))


def piece_index(f: CadlagStep, x: TimeLike) -> int:
    """Index of the piece whose value f takes at x (or approaches, for a left limit)."""
    x = _as_sided(x)
    if not 0.0 <= x.t <= 1.0:
        raise TimeOutOfRange(f"time {x.t} is outside [0, 1]")
    if x.side == Side.LEFT:
        if x.t <= 0.0:
            raise LeftLimitAtZero("left limit requested at t = 0")
        return int(np.searchsorted(f.times, x.t, side="left"))
    return int(np.searchsorted(f.times, x.t, side="right"))


def evaluate(f: CadlagStep, x: TimeLike) -> np.ndarray:
    """Value f(t) for side 'at', f(t-) for side 'left-limit'."""
    return f.points[piece_index(f, x)]


def dist(x, y) -> float:
    """Euclidean distance between two points of equal dimension."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.atleast_1d(np.asarray(y, dtype=float))
    if x.shape != y.shape:
        raise DimensionMismatch(f"cannot compare points of shape {x.shape} and {y.shape}")
    return float(np.linalg.norm(x - y))


def distance_table(f: CadlagStep) -> np.ndarray:
    """Pairwise distances between piece values."""
    pts = f.points
    return cdist(pts, pts)


def restrict(f: CadlagStep, window: Window) -> Tuple[int, int]:
    """Piece range [lo, hi] met by the window, endpoints evaluated 'at'."""
    check_window(window)
    return piece_index(f, window.sigma), piece_index(f, window.tau)


def scale_path(f: CadlagStep, c: float) -> CadlagStep:
    """Multiply every value by c."""
    return make_step_path(f.dim, f.breakpoints, [np.asarray(v) * c for v in f.values])


# Parameter checks shared by every functional

def check_mu(mu: float) -> float:
    if not (np.isfinite(mu) and 0.0 < mu < 1.0):
        raise BadMu(f"mu must lie in (0, 1), got {mu}")
    return float(mu)


def check_p(p: float) -> float:
    if not (np.isfinite(p) and p > 1.0):
        raise BadP(f"p must exceed 1, got {p}")
    return float(p)


def check_params(params: FunctionalParams) -> FunctionalParams:
    try:
        check_mu(params.mu)
        check_p(params.p)
    except (BadMu, BadP) as e:
        raise BadParams(str(e)) from e
    return params


def check_window(window: Window) -> Window:
    for name in ("sigma", "tau"):
        t = getattr(window, name)
        if not 0.0 <= t <= 1.0:
            raise TimeOutOfRange(f"window {name} = {t} is outside [0, 1]")
    if not window.sigma < window.tau:
        raise EmptyWindow(f"window ({window.sigma}, {window.tau}) is empty")
    return window


# JSON format: {"dim": d, "breakpoints": [...], "values": [[...], ...]}

def path_from_dict(data: dict) -> CadlagStep:
    if not isinstance(data, dict):
        raise BadConfig(f"expected a path object, got {type(data).__name__}")
    for key in ("breakpoints", "values"):
        if key not in data:
            raise BadConfig(f"missing field '{key}'")
    dim = data.get("dim", 1)
    return make_step_path(dim, data["breakpoints"], data["values"])


def path_to_dict(f: CadlagStep) -> dict:
    return {"dim": f.dim, "breakpoints": list(f.breakpoints), "values": [list(v) for v in f.values]}


def load_path(path: Union[str, Path]) -> CadlagStep:
    """Read one path from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return path_from_dict(data)


def load_corpus(path: Union[str, Path]) -> List[CadlagStep]:
    """Read a corpus file ({"paths": [...]}, a bare list, or a single path)."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)

    if isinstance(data, dict) and "paths" in data:
        items = data["paths"]
    elif isinstance(data, list):
        items = data
    else:
        items = [data]

    paths = []
    for i, item in enumerate(items):
        try:
            paths.append(path_from_dict(item))
        except RegularityError as e:
            raise type(e)(f"path {i}: {e}") from e

    logger.info(f"📂 Loaded {len(paths)} paths from {path}")
    return paths


def dump_path(f: CadlagStep, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(path_to_dict(f), fh, indent=2)


def dump_corpus(paths: Iterable[CadlagStep], path: Union[str, Path], meta: dict = None) -> None:
    payload = dict(meta or {})
    payload["paths"] = [path_to_dict(f) for f in paths]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
