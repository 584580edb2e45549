"""Explicit constants for the main estimate and its proof chain.

Derivation (every unnamed constant made concrete, H = [f]_mu, T = [[f]],
L = ||f]], R = [[f||, d = delta in (0, 1)):

fo1   d(f(0), f(t)) <= c_fo1 t^mu (H d^mu + d^(-1/p) L) for t <= 3/4.
      Average d(f(0),f(t)) <= Delta(t', t, t'') + d(f(0),f(t')) + d(f(0),f(t''))
      over t' in [t - e, t], t'' in [t, t + e] with e = d t / 4. The Delta term
      gives 2^mu e^mu H = 2^-mu H d^mu t^mu; Jensen plus t'' <= 1.25 t give
      4^(1/p) (1 + 1.25^(mu + 1/p)) d^(-1/p) t^mu L.
      c_fo1 = max(2^-mu, 4^(1/p) (1 + 1.25^(mu + 1/p))). fo2 mirrors it at 1.
f51   For t > 3/4 chain through f(1/2) and f(1) and divide by t^mu >= (3/4)^mu:
      |f] + [f| <= 2 c_fo1 K1 (H d^mu + d^(-1/p) (L + R)),
      K1 = (4/3)^mu (2^(1 - mu) + 4^-mu) >= 1.
f52   Midpoint triples, e = d (u - s) / 4. Interior case: the three local
      Delta averages give 3 * 2^-mu; the eight Hoelder-bounded triple averages
      give 8 * 4^(3/p) * 1.5^(mu + 3/p) (u'' - s' <= 1.5 (u - s)). Boundary
      case via fo1/fo2: c_fo1 (4^-mu + 0.75^mu). The bound carries the
      endpoint terms the boundary case needs:
      hat <= c_f52 (H d^mu + d^(-3/p) T + d^(-1/p) (L + R)).
chain H <= 2/(1 - 2^-mu) hat, so
      H + |f] + [f| <= c_chain (H d^mu + d^(-3/p) T + d^(-1/p) (L + R)),
      c_chain = 2/(1 - 2^-mu) c_f52 + c_f51.
main  With d* = (2 c_chain)^(-1/mu), half of H is absorbed:
      H + |f] + [f| <= 2 c_chain d*^(-3/p) (T + L + R) = theorem1_C (T + L + R).
sup   sup|f| <= 2|f] + |f|_Lp gives theorem1_sup_C = max(1, 2 theorem1_C).

These constants are admissible, not optimal. For small mu theorem1_C grows
like (2 c_chain)^(3/(mu p)) (2.2e89 at mu=0.1, p=1.5), so a passing
theorem1 row certifies that the constant chain is admissible, not that the
estimate is tight; theorem1_ratio reports how much room is left.
"""
import json
import logging
import math
from pathlib import Path
from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, Field

from config import settings
from models import DerivedConstants, CorollaryConstants
from models.errors import MissingConstants, ExponentNotIntegrable, BadConfig
from regularity.paths import check_mu, check_p

logger = logging.getLogger(__name__)

DERIVATION_NOTE = (
    "explicit chain fo1 -> f51, fo1/fo2 + interior averaging -> f52, "
    "holder <= 2/(1-2^-mu) hat, delta* = (2 c_chain)^(-1/mu)"
)


def derive_constants(mu: float, p: float, delta: float = None) -> DerivedConstants:
    """Admissible constants for (mu, p).

    Args:
        mu: Hoelder exponent in (0, 1)
        p: Integrability exponent above 1
        delta: Free parameter of the proof-chain audit (settings.chain_delta if None)
    """
    mu = check_mu(mu)
    p = check_p(p)
    delta = settings.chain_delta if delta is None else float(delta)
    if not 0.0 < delta < 1.0:
        raise BadConfig(f"delta must lie in (0, 1), got {delta}")

    c_fo1 = max(2.0 ** -mu, 4.0 ** (1.0 / p) * (1.0 + 1.25 ** (mu + 1.0 / p)))
    k1 = (4.0 / 3.0) ** mu * (2.0 ** (1.0 - mu) + 4.0 ** -mu)
    c_f51 = 2.0 * c_fo1 * k1
    c_f52 = max(
        3.0 * 2.0 ** -mu,
        8.0 * 4.0 ** (3.0 / p) * 1.5 ** (mu + 3.0 / p),
        c_fo1 * (4.0 ** -mu + 0.75 ** mu),
    )
    c_chain = 2.0 / (1.0 - 2.0 ** -mu) * c_f52 + c_f51
    delta_star = (2.0 * c_chain) ** (-1.0 / mu)

    # 2 c_chain d*^(-3/p) = (2 c_chain)^(1 + 3/(mu p)); stays in log space
    log_c = (1.0 + 3.0 / (mu * p)) * math.log(2.0 * c_chain)
    theorem1_C = math.exp(log_c) if log_c < 709.0 else math.inf

    return DerivedConstants(
        mu=mu,
        p=p,
        delta=delta,
        chain_fo1_C=c_fo1,
        chain_f51_C=c_f51,
        chain_f52_C=c_f52,
        chain_C=c_chain,
        delta_star=delta_star,
        theorem1_C=theorem1_C,
        theorem1_sup_C=max(1.0, 2.0 * theorem1_C),
        note=DERIVATION_NOTE,
    )


class ConstantsFile(BaseModel):
    """Versioned constants file."""
    version: int = 1
    delta: float = Field(..., gt=0.0, lt=1.0)
    note: str = ""
    entries: List[DerivedConstants] = Field(default_factory=list)


ConstantsTable = Dict[Tuple[float, float], DerivedConstants]


def _key(mu: float, p: float) -> Tuple[float, float]:
    return round(float(mu), 9), round(float(p), 9)


def load_constants(path: Union[str, Path]) -> ConstantsTable:
    """Read pinned constants keyed by (mu, p).

    Every entry must be positive and finite; a malformed file raises
    (pydantic ValidationError or BadConfig).
    """
    with open(path, "r", encoding="utf-8") as fh:
        data = ConstantsFile.model_validate(json.load(fh))

    table: ConstantsTable = {}
    for i, entry in enumerate(data.entries):
        for name in ("chain_fo1_C", "chain_f51_C", "chain_f52_C", "theorem1_C", "theorem1_sup_C"):
            value = getattr(entry, name)
            if not (math.isfinite(value) and value > 0):
                raise BadConfig(f"entries[{i}].{name} = {value} is not a positive finite constant")
        if not 0.0 < entry.delta < 1.0:
            raise BadConfig(f"entries[{i}].delta = {entry.delta} is outside (0, 1)")
        table[_key(entry.mu, entry.p)] = entry

    logger.info(f"📐 Loaded {len(table)} pinned constant sets (v{data.version}) from {path}")
    return table


def constants_for(table: ConstantsTable, mu: float, p: float) -> DerivedConstants:
    try:
        return table[_key(mu, p)]
    except KeyError:
        raise MissingConstants(f"no constants pinned for mu={mu}, p={p}") from None


def build_table(mu_grid, p_grid, delta: float = None) -> ConstantsTable:
    return {_key(mu, p): derive_constants(mu, p, delta) for mu in mu_grid for p in p_grid}


def corollary1_constants(mu: float, r: float, p: float) -> CorollaryConstants:
    """Kernel integrals of the moment-to-functional bound.

    c_triple = int int_{s<u} (u - s)^(r - mu p - 1) ds du = 1/((r - mu p)(r - mu p + 1)),
    c_left = c_right = int_0^1 t^(r - mu p - 1) dt = 1/(r - mu p).
    """
    mu = check_mu(mu)
    p = check_p(p)
    gap = r - mu * p
    if not gap > 0:
        raise ExponentNotIntegrable(f"r = {r} must exceed mu*p = {mu * p}")
    return CorollaryConstants(
        mu=mu,
        r=r,
        p=p,
        c_triple=1.0 / (gap * (gap + 1.0)),
        c_left=1.0 / gap,
        c_right=1.0 / gap,
    )


def corollary1_sup_factor(consts: DerivedConstants, cor: CorollaryConstants) -> float:
    """N with E sup|X|^p <= N (C0 + E int |X|^p).

    sup|f| <= S (|f|_Lp + T + L + R) with S = theorem1_sup_C, the power mean
    inequality (a + b + c + d)^p <= 4^(p - 1) (a^p + b^p + c^p + d^p) and the
    kernel integrals E T^p <= c_triple C0, E L^p <= c_left C0, E R^p <= c_right C0
    give N = 4^(p - 1) S^p max(1, c_triple + c_left + c_right).
    """
    p = cor.p
    kernel = max(1.0, cor.c_triple + cor.c_left + cor.c_right)
    log_n = (p - 1.0) * math.log(4.0) + p * math.log(consts.theorem1_sup_C) + math.log(kernel)
    return math.exp(log_n) if log_n < 709.0 else math.inf
