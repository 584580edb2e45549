"""Closed-form integral functionals of step paths."""
import logging
from typing import Tuple

import numpy as np

from models import CadlagStep, FunctionalParams, BesovReport
from . import kernels
from .paths import distance_table, check_params, check_p

logger = logging.getLogger(__name__)


def triple_besov_power(f: CadlagStep, params: FunctionalParams) -> float:
    """[[f]]_{mu,p}^p as a compensated sum over piece triples.

    With G(w) = w^-(mu p + 1) / ((mu p + 1)(mu p + 2)) the kernel integral
    over s in [s1, s2), u in [u1, u2) is
    G(u2 - s1) - G(u2 - s2) - G(u1 - s1) + G(u1 - s2); the middle time only
    contributes the length of its piece.
    """
    check_params(params)
    if f.jumps < 2:
        return 0.0
    return float(kernels.besov_triple_sum(
        distance_table(f), f.starts, f.ends, f.lengths, params.mu_p, params.p, False
    ))


def triple_besov(f: CadlagStep, params: FunctionalParams) -> float:
    return triple_besov_power(f, params) ** (1.0 / params.p)


def endpoint_besov_power(f: CadlagStep, params: FunctionalParams) -> Tuple[float, float]:
    """(||f]]^p, [[f||^p).

    Piece k contributes d(v_0, v_k)^p times the integral of t^-(mu p + 1)
    over the piece (mirrored at 1 for the right functional). The first piece
    (resp. last) has zero weight, so the singularity is never integrated.
    """
    check_params(params)
    if f.is_constant:
        return 0.0, 0.0
    mp = params.mu_p
    D = distance_table(f)
    starts, ends = f.starts, f.ends

    left_w = (starts[1:] ** -mp - ends[1:] ** -mp) / mp
    left = np.sum(D[0, 1:] ** params.p * left_w)

    right_w = ((1.0 - ends[:-1]) ** -mp - (1.0 - starts[:-1]) ** -mp) / mp
    right = np.sum(D[-1, :-1] ** params.p * right_w)
    return float(left), float(right)


def endpoint_besov(f: CadlagStep, params: FunctionalParams) -> Tuple[float, float]:
    left, right = endpoint_besov_power(f, params)
    return left ** (1.0 / params.p), right ** (1.0 / params.p)


def lp_sup_norms(f: CadlagStep, p: float) -> Tuple[float, float]:
    """(|f|_{L_p([0,1])}, sup_t |f(t)|) with Euclidean norms of the values."""
    p = check_p(p)
    norms = np.linalg.norm(f.points, axis=1)
    lp = float(np.sum(norms ** p * f.lengths) ** (1.0 / p))
    return lp, float(norms.max())


def remark22_product_bound(f: CadlagStep, params: FunctionalParams) -> float:
    """Triple integral of d(f(s),f(t))^(p/2) d(f(t),f(u))^(p/2) / (u-s)^(mu p+3).

    Returned on the p-th power scale, to be compared with triple_besov_power.
    """
    check_params(params)
    if f.jumps < 2:
        return 0.0
    return float(kernels.besov_triple_sum(
        distance_table(f), f.starts, f.ends, f.lengths, params.mu_p, params.p, True
    ))


def besov_report(f: CadlagStep, params: FunctionalParams) -> BesovReport:
    left, right = endpoint_besov(f, params)
    lp, sup = lp_sup_norms(f, params.p)
    return BesovReport(
        triple=triple_besov(f, params),
        left=left,
        right=right,
        lp=lp,
        sup=sup,
        params=params,
    )
