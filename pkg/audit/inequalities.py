"""Inequality checks over exact functional values.

Each check compares exactly computed quantities and returns AuditReport rows;
a row passes when lhs <= rhs * (1 + rel_tol) + abs_tol.
"""
import logging
import math
from typing import Dict, List, Optional

import numpy as np

from config import settings
from models import (
    CadlagStep, FunctionalParams, Window, GridSpec, AuditReport, DerivedConstants
)
from models.errors import WindowNotNested, UnorderedTriple, MissingConstants
from regularity import (
    delta_triple, delta_window, n_window, holder_seminorm, restricted_holder,
    endpoint_seminorms, tilde_seminorm, hat_seminorm, triple_besov,
    triple_besov_power, endpoint_besov, lp_sup_norms, remark22_product_bound,
    grid_sup_oracle, grid_integral_oracle, eta_grid_oracle, evaluate, dist,
    check_mu, check_params, check_window
)

logger = logging.getLogger(__name__)


def make_report(check_name: str, lhs: float, rhs: float, params: Optional[Dict[str, float]] = None) -> AuditReport:
    """Build one row with the uniform pass rule."""
    rel_tol, abs_tol = settings.tolerances
    lhs, rhs = float(lhs), float(rhs)
    if rhs == 0.0:
        ratio = 0.0 if lhs == 0.0 else math.inf
    else:
        ratio = lhs / rhs
    passed = lhs <= rhs * (1.0 + rel_tol) + abs_tol
    if not passed:
        logger.debug(f"❌ {check_name}: {lhs:.6g} > {rhs:.6g}")
    return AuditReport(
        check_name=check_name,
        lhs=lhs,
        rhs=rhs,
        slack=rhs - lhs,
        ratio=ratio,
        passed=passed,
        params=dict(params or {}),
    )


def check_remark31(f: CadlagStep, w: Window, sub: Window) -> List[AuditReport]:
    """Sandwich 1/2 N <= Delta <= 2 N on w and monotonicity on sub inside w."""
    check_window(w)
    check_window(sub)
    if not w.contains(sub):
        raise WindowNotNested(
            f"({sub.sigma}, {sub.tau}) is not inside ({w.sigma}, {w.tau})"
        )
    d_w, n_w = delta_window(f, w), n_window(f, w)
    d_sub, n_sub = delta_window(f, sub), n_window(f, sub)
    tag = {"sigma": w.sigma, "tau": w.tau, "sub_sigma": sub.sigma, "sub_tau": sub.tau}
    return [
        make_report("remark31_half_n_le_delta", 0.5 * n_w, d_w, tag),
        make_report("remark31_delta_le_2n", d_w, 2.0 * n_w, tag),
        make_report("remark31_n_nested", n_sub, 2.0 * n_w, tag),
        make_report("remark31_delta_nested", d_sub, d_w, tag),
    ]


def check_lemma_f2(f: CadlagStep, sigma: float, t: float, tau: float,
                   window_delta: Optional[bool] = None) -> AuditReport:
    """N(sigma, tau) <= N(sigma, t) v N(t, tau) + Delta(f; sigma, t, tau).

    The pointwise triple Delta is used unless ``window_delta`` (or
    settings.lemma_f2_window_delta) asks for the window sup over (sigma, tau).
    """
    if not sigma < t < tau:
        raise UnorderedTriple(f"need sigma < t < tau, got ({sigma}, {t}, {tau})")
    if window_delta is None:
        window_delta = settings.lemma_f2_window_delta

    whole = n_window(f, Window(sigma=sigma, tau=tau))
    split = max(n_window(f, Window(sigma=sigma, tau=t)), n_window(f, Window(sigma=t, tau=tau)))
    if window_delta:
        delta = delta_window(f, Window(sigma=sigma, tau=tau))
    else:
        delta = delta_triple(f, sigma, t, tau)
    return make_report(
        "lemma_f2_window" if window_delta else "lemma_f2",
        whole, split + delta,
        {"sigma": sigma, "t": t, "tau": tau},
    )


def check_equivalences(f: CadlagStep, mu: float) -> List[AuditReport]:
    """Both chains 1/2 tilde <= holder <= 2 tilde and hat <= holder <= 2 tilde <= 2/(1-2^-mu) hat."""
    mu = check_mu(mu)
    holder = holder_seminorm(f, mu)
    tilde = tilde_seminorm(f, mu)
    hat = hat_seminorm(f, mu)
    tag = {"mu": mu}
    return [
        make_report("lemma33_half_tilde_le_holder", 0.5 * tilde, holder, tag),
        make_report("lemma33_holder_le_2tilde", holder, 2.0 * tilde, tag),
        make_report("lemma35_hat_le_holder", hat, holder, tag),
        make_report("lemma35_holder_le_2tilde", holder, 2.0 * tilde, tag),
        make_report("lemma35_2tilde_le_hat", 2.0 * tilde, 2.0 / (1.0 - 2.0 ** -mu) * hat, tag),
    ]


def check_eq10(f: CadlagStep, mu: float) -> AuditReport:
    """[f]_mu <= (sup over spans <= 1/2) + 2^mu Delta(f; (0, 1))."""
    mu = check_mu(mu)
    rhs = restricted_holder(f, mu, 0.5) + 2.0 ** mu * delta_window(f, Window(sigma=0.0, tau=1.0))
    return make_report("eq10_short_spans", holder_seminorm(f, mu), rhs, {"mu": mu})


def check_remark22(f: CadlagStep, params: FunctionalParams) -> AuditReport:
    """[[f]]^p <= triple integral of the product-form weight."""
    check_params(params)
    return make_report(
        "remark22_product_bound",
        triple_besov_power(f, params), remark22_product_bound(f, params),
        {"mu": params.mu, "p": params.p},
    )


def _require(consts: Optional[DerivedConstants], params: FunctionalParams) -> DerivedConstants:
    if consts is None:
        raise MissingConstants(f"no constants for mu={params.mu}, p={params.p}")
    if not (math.isclose(consts.mu, params.mu, abs_tol=1e-9) and math.isclose(consts.p, params.p, abs_tol=1e-9)):
        raise MissingConstants(
            f"constants for mu={consts.mu}, p={consts.p} do not match mu={params.mu}, p={params.p}"
        )
    return consts


def _scaled_rhs(C: float, total: float) -> float:
    # a zero functional sum bounds nothing but zero, whatever C is
    return 0.0 if total == 0.0 else C * total


def check_theorem1(f: CadlagStep, params: FunctionalParams, consts: DerivedConstants) -> List[AuditReport]:
    """Seminorm estimate, sup estimate, and the explicit sup|f| <= 2|f] + |f|_Lp."""
    check_params(params)
    consts = _require(consts, params)
    mu, p = params.mu, params.p

    holder = holder_seminorm(f, mu)
    left_end, right_end = endpoint_seminorms(f, mu)
    triple = triple_besov(f, params)
    left, right = endpoint_besov(f, params)
    lp, sup = lp_sup_norms(f, p)
    total = triple + left + right

    tag = {"mu": mu, "p": p, "C": consts.theorem1_C}
    sup_tag = {"mu": mu, "p": p, "C": consts.theorem1_sup_C}
    return [
        make_report("theorem1_seminorms", holder + left_end + right_end,
                    _scaled_rhs(consts.theorem1_C, total), tag),
        make_report("theorem1_sup", sup, _scaled_rhs(consts.theorem1_sup_C, lp + total), sup_tag),
        make_report("theorem1_explicit_sup", sup, 2.0 * left_end + lp, {"mu": mu, "p": p}),
    ]


def theorem1_ratio(f: CadlagStep, params: FunctionalParams) -> float:
    """([f] + |f] + [f|) / ([[f]] + ||f]] + [[f||), 0/0 read as 0."""
    holder = holder_seminorm(f, params.mu)
    left_end, right_end = endpoint_seminorms(f, params.mu)
    left, right = endpoint_besov(f, params)
    total = triple_besov(f, params) + left + right
    lhs = holder + left_end + right_end
    return 0.0 if total == 0.0 else lhs / total


def check_proof_chain(f: CadlagStep, params: FunctionalParams, consts: DerivedConstants,
                      sweep_points: Optional[int] = None) -> List[AuditReport]:
    """Intermediate estimates of the main proof at delta = consts.delta.

    fo1 runs over t in (0, 3/4], fo2 over t in [1/4, 1); f51 and f52 compare
    seminorms.
    """
    check_params(params)
    consts = _require(consts, params)
    n = sweep_points or settings.chain_sweep_points
    mu, p, d = params.mu, params.p, consts.delta
    c = consts.chain_fo1_C

    H = holder_seminorm(f, mu)
    T = triple_besov(f, params)
    L, R = endpoint_besov(f, params)
    left_end, right_end = endpoint_seminorms(f, mu)
    hat = hat_seminorm(f, mu)
    f0, f1 = evaluate(f, 0.0), evaluate(f, 1.0)

    reports = []
    for t in 0.75 * np.arange(1, n + 1) / n:
        t = float(t)
        reports.append(make_report(
            "fo1", dist(f0, evaluate(f, t)),
            c * t ** mu * (H * d ** mu + d ** (-1.0 / p) * L),
            {"mu": mu, "p": p, "delta": d, "t": t},
        ))
    for t in 1.0 - 0.75 * np.arange(1, n + 1) / n:
        t = float(t)
        reports.append(make_report(
            "fo2", dist(f1, evaluate(f, t)),
            c * (1.0 - t) ** mu * (H * d ** mu + d ** (-1.0 / p) * R),
            {"mu": mu, "p": p, "delta": d, "t": t},
        ))

    tag = {"mu": mu, "p": p, "delta": d}
    reports.append(make_report(
        "f51", left_end + right_end,
        consts.chain_f51_C * (H * d ** mu + d ** (-1.0 / p) * (L + R)), tag,
    ))
    reports.append(make_report(
        "f52", hat,
        consts.chain_f52_C * (H * d ** mu + d ** (-3.0 / p) * T + d ** (-1.0 / p) * (L + R)), tag,
    ))
    return reports


def check_oracles(f: CadlagStep, params: FunctionalParams, grid: GridSpec,
                  integral_grid: Optional[GridSpec] = None) -> List[AuditReport]:
    """Exact values against the grid oracles.

    Sup oracles never exceed the exact seminorm and sit within
    settings.sup_oracle_gap below it; the integral oracle agrees with
    [[f]]^p within settings.integral_oracle_gap relative.
    """
    check_params(params)
    integral_grid = integral_grid or GridSpec(G=settings.integral_grid, sided=grid.sided)
    mu = params.mu

    holder = holder_seminorm(f, mu)
    holder_oracle = grid_sup_oracle(f, mu, grid)
    tilde = tilde_seminorm(f, mu)
    tilde_oracle = eta_grid_oracle(f, mu, grid)
    exact_int = triple_besov_power(f, params)
    oracle_int = grid_integral_oracle(f, params, integral_grid)

    gap = settings.sup_oracle_gap
    tag = {"mu": mu, "p": params.p, "G": float(grid.G)}
    int_tag = {"mu": mu, "p": params.p, "G": float(integral_grid.G)}
    return [
        make_report("oracle_holder_below_exact", holder_oracle, holder, tag),
        make_report("oracle_holder_gap", (1.0 - gap) * holder, holder_oracle, tag),
        make_report("oracle_tilde_below_exact", tilde_oracle, tilde, tag),
        make_report("oracle_integral_agreement", abs(oracle_int - exact_int),
                    settings.integral_oracle_gap * exact_int, int_tag),
    ]
