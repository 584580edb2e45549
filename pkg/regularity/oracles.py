"""Brute-force grid references for the exact functionals.

The oracles sample the path on i/G, at every breakpoint and (when the grid is
sided) at the left limit of every breakpoint, then evaluate the discretised
sup or sum directly from the sampled coordinates.
"""
import logging
from typing import List, Tuple

import numpy as np

from models import CadlagStep, FunctionalParams, GridSpec, Window
from models.errors import BadGrid
from config import settings
from . import kernels
from .paths import check_mu, check_params, check_window, evaluate, dist

logger = logging.getLogger(__name__)


def check_grid(g: GridSpec) -> GridSpec:
    if g.G < 2:
        raise BadGrid(f"grid resolution must be at least 2, got {g.G}")
    return g


def _samples(f: CadlagStep, g: GridSpec, lo: float = 0.0, hi: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """Sample times and piece indices in [lo, hi], left limits ordered first.

    Returns:
        (times, pieces) sorted by (time, at-after-left)
    """
    uniform = np.arange(g.G + 1) / g.G
    taus = f.times
    at_times = np.unique(np.concatenate((uniform, taus, [lo, hi])))
    at_times = at_times[(at_times >= lo) & (at_times <= hi)]
    at_pieces = np.searchsorted(taus, at_times, side="right")

    times = [at_times]
    order = [np.ones(at_times.size)]
    pieces = [at_pieces]
    if g.sided and taus.size:
        left = taus[(taus > lo) & (taus <= hi)]
        times.append(left)
        order.append(np.zeros(left.size))
        pieces.append(np.searchsorted(taus, left, side="left"))

    times = np.concatenate(times)
    order = np.concatenate(order)
    pieces = np.concatenate(pieces)
    perm = np.lexsort((order, times))
    return times[perm], pieces[perm]


def _runs(f: CadlagStep, times: np.ndarray, pieces: np.ndarray):
    """Compress consecutive samples with equal values into runs.

    Returns:
        (values, first time, last time) per run
    """
    pts = f.points[pieces]
    change = np.any(pts[1:] != pts[:-1], axis=1)
    starts = np.concatenate(([0], np.flatnonzero(change) + 1))
    ends = np.concatenate((starts[1:] - 1, [times.size - 1]))
    return np.ascontiguousarray(pts[starts]), times[starts], times[ends]


def grid_sup_oracle(f: CadlagStep, mu: float, g: GridSpec) -> float:
    """Max of Delta / (u - s)^mu over sampled triples s <= t <= u."""
    mu = check_mu(mu)
    check_grid(g)
    times, pieces = _samples(f, g)
    vals, first, last = _runs(f, times, pieces)
    return float(kernels.grid_sup_kernel(vals, first, last, mu))


def grid_integral_oracle(f: CadlagStep, params: FunctionalParams, g: GridSpec,
                         order: int = None) -> float:
    """Cell sum approximating [[f]]_{mu,p}^p.

    Cells come from the uniform grid refined by the breakpoints, so each cell
    carries one value (its midpoint value); the singular kernel is integrated
    over each cell pair with a tensor Gauss-Legendre rule.
    """
    check_params(params)
    check_grid(g)
    order = order or settings.quadrature_order
    nodes = np.unique(np.concatenate((np.arange(g.G + 1) / g.G, f.times)))
    left, right = nodes[:-1], nodes[1:]
    mids = 0.5 * (left + right)
    vals = np.ascontiguousarray(f.points[np.searchsorted(f.times, mids, side="right")])
    gl_x, gl_w = np.polynomial.legendre.leggauss(order)
    return float(kernels.grid_integral_kernel(
        vals, left, right, params.mu_p, params.p, gl_x, gl_w
    ))


def n_grid_oracle(f: CadlagStep, w: Window, g: GridSpec) -> float:
    """min over sampled cut points theta of the sampled one-sided sups."""
    check_window(w)
    check_grid(g)
    times, pieces = _samples(f, g, w.sigma, w.tau)
    f_sigma = evaluate(f, w.sigma)
    f_tau = evaluate(f, w.tau)
    pts = f.points[pieces]
    to_sigma = np.linalg.norm(pts - f_sigma, axis=1)
    to_tau = np.linalg.norm(pts - f_tau, axis=1)

    # before[q]: sup over samples strictly before q; after[q]: from q onwards
    before = np.concatenate(([0.0], np.maximum.accumulate(to_sigma)[:-1]))
    after = np.maximum.accumulate(to_tau[::-1])[::-1]

    # theta runs over the 'at' samples; a left-limit sample shares its time
    # with the 'at' sample right after it
    is_at = np.ones(times.size, dtype=bool)
    is_at[:-1] = times[1:] != times[:-1]
    return float(np.min(np.maximum(before, after)[is_at]))


def eta_grid_oracle(f: CadlagStep, mu: float, g: GridSpec) -> float:
    """Max over sampled run pairs of N(runs) / (sampled gap)^mu."""
    mu = check_mu(mu)
    check_grid(g)
    times, pieces = _samples(f, g)
    vals, first, last = _runs(f, times, pieces)
    return float(kernels.eta_grid_kernel(vals, first, last, mu))


def refinement_study(f: CadlagStep, mu: float, grids: List[int], sided: bool = False) -> List[Tuple[int, float]]:
    """grid_sup_oracle over increasing resolutions."""
    out = []
    for G in grids:
        value = grid_sup_oracle(f, mu, GridSpec(G=G, sided=sided))
        logger.debug(f"G={G}: {value:.6f}")
        out.append((G, value))
    return out
