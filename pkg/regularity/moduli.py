"""Exact sup-based functionals of step paths.

All suprema are reported as values even when they are only approached at an
open endpoint: a triple of pieces a < b < c is charged with its infimum span,
starts[c] - ends[a], which no actual triple of times attains.
"""
import logging
from typing import Tuple

import numpy as np

from models import CadlagStep, FunctionalParams, SeminormReport, Window
from models.errors import UnorderedTriple, NonpositiveEta
from . import kernels
from .paths import (
    TimeLike, _as_sided, evaluate, dist, distance_table, restrict,
    check_mu, check_params
)

logger = logging.getLogger(__name__)


def delta_triple(f: CadlagStep, s: TimeLike, t: TimeLike, u: TimeLike) -> float:
    """Delta(f; s, t, u) = d(f(s), f(t)) ^ d(f(t), f(u)) for s <= t <= u."""
    s, t, u = _as_sided(s), _as_sided(t), _as_sided(u)
    if not (s.order_key <= t.order_key <= u.order_key):
        raise UnorderedTriple(f"times ({s.t}, {t.t}, {u.t}) are not ordered")
    ft = evaluate(f, t)
    return min(dist(evaluate(f, s), ft), dist(ft, evaluate(f, u)))


def _window_block(f: CadlagStep, w: Window) -> np.ndarray:
    lo, hi = restrict(f, w)
    return distance_table(f)[lo:hi + 1, lo:hi + 1]


def delta_window(f: CadlagStep, w: Window) -> float:
    """Delta(f; (sigma, tau)): sup of delta_triple over the closed window."""
    block = _window_block(f, w)
    if block.shape[0] < 3:
        return 0.0
    upper = np.triu(block, 1)
    # best partner before b and after b for every middle piece b
    before = upper.max(axis=0)
    after = upper.max(axis=1)
    return float(np.max(np.minimum(before, after)[1:-1]))


def _n_block(block: np.ndarray) -> float:
    n = block.shape[0]
    if n < 3:
        return 0.0
    first = block[0]
    last = block[:, -1]
    prefix = np.concatenate(([0.0], np.maximum.accumulate(first)[:-1]))
    suffix = np.maximum.accumulate(last[::-1])[::-1]
    return float(np.min(np.maximum(prefix, suffix)))


def n_window(f: CadlagStep, w: Window) -> float:
    """N(f; (sigma, tau)) = inf over theta of the two one-sided sups.

    The objective only changes at piece boundaries, so scanning the cut
    between consecutive window pieces is exact.
    """
    return _n_block(_window_block(f, w))


def _pair_tables(f: CadlagStep) -> Tuple[np.ndarray, np.ndarray]:
    """N over every piece range and the shortest window length reaching it."""
    D = distance_table(f)
    table = kernels.n_range_table(D)
    gaps = f.starts[None, :] - f.ends[:, None]
    return table, gaps


def n_eta(f: CadlagStep, eta: float) -> float:
    """N(f; eta): sup of n_window over windows of length at most eta.

    A window meeting pieces i..j has length above starts[j] - ends[i] (its
    left end must sit strictly inside piece i), so the pair counts only
    when that gap is strictly below eta.
    """
    if not eta > 0:
        raise NonpositiveEta(f"eta must be positive, got {eta}")
    if f.jumps < 2:
        return 0.0
    table, gaps = _pair_tables(f)
    idx = np.triu_indices(f.pieces, 2)
    mask = gaps[idx] < eta
    if not np.any(mask):
        return 0.0
    return float(np.max(table[idx][mask]))


def holder_seminorm(f: CadlagStep, mu: float) -> float:
    """[f]_mu = sup Delta(f; s, t, u) / (u - s)^mu."""
    mu = check_mu(mu)
    if f.jumps < 2:
        return 0.0
    return float(kernels.holder_max(distance_table(f), f.starts, f.ends, mu, 0.0))


def restricted_holder(f: CadlagStep, mu: float, max_span: float = 0.5) -> float:
    """Sup of the Hoelder ratio over triples with u - s <= max_span.

    A piece triple contributes only when its infimum span is strictly below
    max_span; a span of exactly max_span is never attained.
    """
    mu = check_mu(mu)
    if f.jumps < 2:
        return 0.0
    return float(kernels.holder_max(distance_table(f), f.starts, f.ends, mu, float(max_span)))


def endpoint_seminorms(f: CadlagStep, mu: float) -> Tuple[float, float]:
    """(|f]_mu, [f|_mu).

    |f]_mu is attained at the left end of each piece; [f|_mu is approached
    as t tends to the right end of each piece.
    """
    mu = check_mu(mu)
    if f.is_constant:
        return 0.0, 0.0
    D = distance_table(f)
    left = D[0, 1:] / f.starts[1:] ** mu
    right = D[-1, :-1] / (1.0 - f.ends[:-1]) ** mu
    return float(left.max()), float(right.max())


def tilde_seminorm(f: CadlagStep, mu: float) -> float:
    """sup over eta > 0 of N(f; eta) / eta^mu.

    N(f; .) is a step function that rises just after each pairwise gap, so
    the sup is the largest N(range) / gap^mu over ranges with a positive gap.
    """
    mu = check_mu(mu)
    if f.jumps < 2:
        return 0.0
    table, gaps = _pair_tables(f)
    idx = np.triu_indices(f.pieces, 2)
    return float(np.max(table[idx] / gaps[idx] ** mu))


def hat_seminorm(f: CadlagStep, mu: float) -> float:
    """sup of Delta(f; s, (s + u)/2, u) / (u - s)^mu."""
    mu = check_mu(mu)
    if f.jumps < 2:
        return 0.0
    return float(kernels.hat_max(distance_table(f), f.starts, f.ends, mu))


def seminorm_report(f: CadlagStep, params: FunctionalParams) -> SeminormReport:
    check_params(params)
    left, right = endpoint_seminorms(f, params.mu)
    report = SeminormReport(
        holder=holder_seminorm(f, params.mu),
        left_end=left,
        right_end=right,
        tilde=tilde_seminorm(f, params.mu),
        hat=hat_seminorm(f, params.mu),
        params=params,
    )
    logger.debug(f"Seminorms at mu={params.mu}: {report.model_dump(exclude={'params'})}")
    return report
