"""Trend diagnostics for per-level Monte Carlo estimates."""
import logging
from typing import Dict, Sequence, Tuple

import numpy as np
from scipy.stats import kendalltau

from config import settings
from models import MCEstimate

logger = logging.getLogger(__name__)


def mann_kendall(values: Sequence[float], order: Sequence[float] = None) -> Tuple[float, float]:
    """Kendall tau of the values against their order, with the two-sided p-value."""
    values = np.asarray(values, dtype=float)
    order = np.arange(values.size) if order is None else np.asarray(order, dtype=float)
    if values.size < 3 or np.all(values == values[0]):
        return 0.0, 1.0
    tau, p_value = kendalltau(order, values)
    return float(tau), float(p_value)


def trend_summary(estimates: Dict[int, MCEstimate], alpha: float = None,
                  max_ratio: float = None) -> Dict[str, float]:
    """Boundedness diagnostics across levels.

    Returns:
        tau, p_value, ratio (max/min of the means), increasing (1.0 when a
        significant upward trend is found) and bounded (1.0 when the ratio
        stays within max_ratio)
    """
    alpha = settings.trend_alpha if alpha is None else alpha
    max_ratio = settings.trend_max_ratio if max_ratio is None else max_ratio
    levels = sorted(estimates)
    means = np.array([estimates[n].mean for n in levels])
    tau, p_value = mann_kendall(means, levels)

    if means.size == 0 or means.max() == 0.0:
        ratio = 1.0
    elif means.min() <= 0.0:
        ratio = np.inf
    else:
        ratio = float(means.max() / means.min())

    increasing = tau > 0 and p_value < alpha
    summary = {
        "tau": tau,
        "p_value": p_value,
        "ratio": ratio,
        "increasing": float(increasing),
        "bounded": float(ratio <= max_ratio),
    }
    logger.info(f"📈 Trend over n={levels[0] if levels else '-'}..{levels[-1] if levels else '-'}: "
                f"tau={tau:.3f}, p={p_value:.3g}, max/min={ratio:.3f}")
    return summary
