"""Monte Carlo estimators over independent replicate substreams.

Replicate i always draws from Generator(Philox(SeedSequence(seed).spawn(M)[i])),
so estimates do not depend on how replicates are split across workers.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
from scipy.stats import norm

from models import ProcessSpec, FunctionalParams, MCConfig, MCEstimate
from models.errors import UnorderedTriple, BadConfig
from regularity import (
    delta_triple, triple_besov_power, endpoint_besov_power, lp_sup_norms,
    check_p, check_params
)
from .processes import sample_path, dyadic_projection, validate_spec

logger = logging.getLogger(__name__)

BESOV_KEYS = ("triple", "left", "right", "sup", "lp")


def replicate_streams(seed: int, M: int) -> List[np.random.SeedSequence]:
    return np.random.SeedSequence(seed).spawn(M)


def _rng(seq: np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seq))


def _map_replicates(fn: Callable, cfg: MCConfig) -> np.ndarray:
    """Apply fn to chunks of replicate streams and stack results in replicate order."""
    if cfg.M < 1:
        raise BadConfig(f"need at least one replicate, got M={cfg.M}")
    seqs = replicate_streams(cfg.seed, cfg.M)
    workers = max(1, int(cfg.workers))
    if workers == 1:
        return np.asarray(fn(seqs))

    chunks = [list(c) for c in np.array_split(np.array(seqs, dtype=object), workers) if len(c)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(fn, chunks))
    return np.concatenate([np.asarray(part) for part in parts])


def estimate(values: Sequence[float], confidence: float) -> MCEstimate:
    """Mean with a normal-approximation half width z * std / sqrt(M)."""
    values = np.asarray(values, dtype=float)
    M = values.size
    mean = math.fsum(values) / M
    if M > 1:
        std = float(np.std(values, ddof=1))
        half = float(norm.ppf(0.5 * (1.0 + confidence)) * std / math.sqrt(M))
    else:
        std, half = 0.0, math.inf
    return MCEstimate(mean=mean, half_width=half, M=M, std=std)


# Per-chunk replicate functions (module level so worker processes can import them)

def _triple_chunk(seqs, spec: ProcessSpec, times: Tuple[float, float, float], p: float):
    s, t, u = times
    return [delta_triple(sample_path(spec, _rng(q)), s, t, u) ** p for q in seqs]


def _besov_values(f, params: FunctionalParams) -> List[float]:
    left, right = endpoint_besov_power(f, params)
    lp, sup = lp_sup_norms(f, params.p)
    return [triple_besov_power(f, params), left, right, sup ** params.p, lp ** params.p]


def _besov_chunk(seqs, spec: ProcessSpec, params: FunctionalParams):
    return [_besov_values(sample_path(spec, _rng(q)), params) for q in seqs]


def _dyadic_chunk(seqs, spec: ProcessSpec, params: FunctionalParams, levels: Tuple[int, ...]):
    out = []
    for q in seqs:
        f = sample_path(spec, _rng(q))
        row = []
        for n in levels:
            g = dyadic_projection(f, n)
            left, right = endpoint_besov_power(g, params)
            row.append(triple_besov_power(g, params) + left + right)
        out.append(row)
    return out


def mc_triple_moment(spec: ProcessSpec, s: float, t: float, u: float, p: float,
                     cfg: MCConfig) -> MCEstimate:
    """E[Delta(X; s, t, u)^p]."""
    validate_spec(spec)
    p = check_p(p)
    if not 0.0 <= s < t < u <= 1.0:
        raise UnorderedTriple(f"need 0 <= s < t < u <= 1, got ({s}, {t}, {u})")
    values = _map_replicates(partial(_triple_chunk, spec=spec, times=(s, t, u), p=p), cfg)
    est = estimate(values, cfg.confidence)
    logger.debug(f"E[Delta^{p}]({s}, {t}, {u}) = {est.mean:.6g} +/- {est.half_width:.2g}")
    return est


def mc_besov_moments(spec: ProcessSpec, params: FunctionalParams, cfg: MCConfig) -> Dict[str, MCEstimate]:
    """E[[[X]]^p], E||X]]^p, E[[X||^p, E sup|X|^p and E int |X|^p."""
    validate_spec(spec)
    check_params(params)
    values = _map_replicates(partial(_besov_chunk, spec=spec, params=params), cfg)
    values = values.reshape(cfg.M, len(BESOV_KEYS))
    return {key: estimate(values[:, i], cfg.confidence) for i, key in enumerate(BESOV_KEYS)}


def mc_dyadic_uniform(spec: ProcessSpec, params: FunctionalParams, n_range: Tuple[int, int],
                      cfg: MCConfig) -> Dict[int, MCEstimate]:
    """E[[[X^n]]^p + ||X^n]]^p + [[X^n||^p] for each projection level n.

    Every level projects the same sampled paths.
    """
    validate_spec(spec)
    check_params(params)
    lo, hi = int(n_range[0]), int(n_range[1])
    if not 1 <= lo <= hi <= 20:
        raise BadConfig(f"projection levels must satisfy 1 <= lo <= hi <= 20, got ({lo}, {hi})")
    levels = tuple(range(lo, hi + 1))
    values = _map_replicates(partial(_dyadic_chunk, spec=spec, params=params, levels=levels), cfg)
    values = values.reshape(cfg.M, len(levels))
    return {n: estimate(values[:, i], cfg.confidence) for i, n in enumerate(levels)}
