"""Compound Poisson sampling and dyadic time projection."""
import logging

import numpy as np

from models import CadlagStep, ProcessSpec, ProcessKind, JumpLaw, MomentHypothesis
from models.errors import BadProcessSpec, BadParams
from regularity import make_step_path

logger = logging.getLogger(__name__)


def validate_spec(spec: ProcessSpec) -> ProcessSpec:
    if not (np.isfinite(spec.lam) and spec.lam >= 0):
        raise BadProcessSpec(f"lambda must be a nonnegative number, got {spec.lam}")
    if spec.kind == ProcessKind.POISSON and spec.jump_law != JumpLaw.UNIT:
        raise BadProcessSpec("a poisson process only has unit jumps")
    if spec.jump_law == JumpLaw.UNIFORM:
        if spec.low is None or spec.high is None or not spec.low < spec.high:
            raise BadProcessSpec(f"uniform jumps need low < high, got ({spec.low}, {spec.high})")
    if not np.isfinite(spec.scale):
        raise BadProcessSpec(f"scale must be finite, got {spec.scale}")
    return spec


def _amplitudes(spec: ProcessSpec, rng: np.random.Generator, k: int) -> np.ndarray:
    if spec.jump_law == JumpLaw.RADEMACHER:
        jumps = rng.choice(np.array([-1.0, 1.0]), size=k)
    elif spec.jump_law == JumpLaw.UNIFORM:
        jumps = rng.uniform(spec.low, spec.high, size=k)
    else:
        jumps = np.ones(k)
    return spec.scale * jumps


def sample_path(spec: ProcessSpec, rng: np.random.Generator) -> CadlagStep:
    """One path started at 0: K ~ Poisson(lambda) jumps at sorted uniform times.

    The draw order (count, times, amplitudes) is fixed so a spec differing
    only in ``scale`` reproduces the same jump times from the same stream.
    """
    validate_spec(spec)
    k = int(rng.poisson(spec.lam))
    times = np.sort(rng.uniform(0.0, 1.0, size=k))
    jumps = _amplitudes(spec, rng, k)
    values = np.concatenate(([0.0], np.cumsum(jumps)))
    return make_step_path(1, times, values)


def dyadic_projection(f: CadlagStep, n: int) -> CadlagStep:
    """X^n_t = X_{k/2^n} on [k/2^n, (k+1)/2^n); the value at 1 is f(1 - 2^-n)."""
    if int(n) != n or n < 1:
        raise BadParams(f"projection level must be a positive integer, got {n}")
    cells = 2 ** int(n)
    grid = np.arange(cells) / cells
    pieces = np.searchsorted(f.times, grid, side="right")
    values = f.points[pieces]
    return make_step_path(f.dim, grid[1:], values)


def poisson_hypothesis(lam: float, p: float = 2.0) -> MomentHypothesis:
    """Moment constants of the Poisson process for p = 2 with r = 1.

    For independent increments A, B over the two halves of (s, u):
    E[min(A, B)^2] <= E[A^2] P(B >= 1) <= lam^2 (1 + lam) (u - s)^2 / 4, and
    E[N_t^2] = lam t + lam^2 t^2 <= (lam + lam^2) t.
    """
    if not lam > 0:
        raise BadProcessSpec(f"lambda must be positive, got {lam}")
    if p != 2.0:
        raise BadParams(f"closed-form moment constants exist for p = 2 only, got {p}")
    c0 = max(lam ** 2 * (1.0 + lam) / 4.0, lam + lam ** 2)
    return MomentHypothesis(p=2.0, r=1.0, C0=c0)
