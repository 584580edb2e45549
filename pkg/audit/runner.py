"""Corpus audit driver: runs every inequality check and collects CSV rows."""
import logging
import math
import time
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from config import settings
from models import CadlagStep, FunctionalParams, GridSpec, Window, AuditReport
from models.errors import RegularityError
from .constants import ConstantsTable, constants_for, derive_constants, _key
from .inequalities import (
    check_remark31, check_lemma_f2, check_equivalences, check_eq10,
    check_remark22, check_theorem1, check_proof_chain, check_oracles
)

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["check_name", "path_id", "mu", "p", "lhs", "rhs", "slack", "ratio", "pass"]


def _rows(reports: Sequence[AuditReport], path_id: int, mu: float = math.nan, p: float = math.nan) -> List[Dict]:
    return [
        {
            "check_name": r.check_name,
            "path_id": path_id,
            "mu": mu,
            "p": p,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "slack": r.slack,
            "ratio": r.ratio,
            "pass": r.passed,
        }
        for r in reports
    ]


def random_windows(rng: np.random.Generator, count: int):
    """Nested window pairs and ordered (sigma, t, tau) triples.

    Yields:
        (outer Window, inner Window, (sigma, t, tau))
    """
    for _ in range(count):
        sigma, tau = np.sort(rng.uniform(0.0, 1.0, 2))
        a, b = np.sort(rng.uniform(sigma, tau, 2))
        s, t, u = np.sort(rng.uniform(0.0, 1.0, 3))
        if not (sigma < tau and a < b and s < t < u):
            continue
        yield (
            Window(sigma=float(sigma), tau=float(tau)),
            Window(sigma=float(a), tau=float(b)),
            (float(s), float(t), float(u)),
        )


class InequalityAuditor:
    """Runs every inequality check over a corpus and a (mu, p) grid."""

    def __init__(
        self,
        mu_grid: Optional[Sequence[float]] = None,
        p_grid: Optional[Sequence[float]] = None,
        constants: Optional[ConstantsTable] = None,
        windows_per_path: Optional[int] = None,
        grid: Optional[GridSpec] = None,
        seed: Optional[int] = None,
        strict: bool = True,
    ):
        """Initialize auditor.

        Args:
            mu_grid: Hoelder exponents (settings.mu_grid if None)
            p_grid: Integrability exponents (settings.p_grid if None)
            constants: Pinned constants; derived on the fly when None
            windows_per_path: Random windows per path for the window checks
            grid: Adds oracle rows when given
            seed: Seed of the random windows
            strict: Raise MissingConstants for a (mu, p) the pinned table lacks;
                otherwise derive the missing entry
        """
        self.mu_grid = tuple(mu_grid or settings.mu_grid)
        self.p_grid = tuple(p_grid or settings.p_grid)
        self.constants = constants
        self.windows_per_path = settings.audit_windows_per_path if windows_per_path is None else windows_per_path
        self.grid = grid
        self.seed = settings.cadlag_seed if seed is None else seed
        self.strict = strict
        self._derived: ConstantsTable = {}

    def constants_for(self, mu: float, p: float):
        key = _key(mu, p)
        if self.constants is not None and (self.strict or key in self.constants):
            return constants_for(self.constants, mu, p)
        if key not in self._derived:
            self._derived[key] = derive_constants(mu, p)
        return self._derived[key]

    def audit_path(self, f: CadlagStep, path_id: int = 0,
                   rng: Optional[np.random.Generator] = None) -> List[Dict]:
        """All checks for one path as CSV rows."""
        rows: List[Dict] = []
        rng = rng or np.random.default_rng(self.seed)

        for w, sub, (s, t, u) in random_windows(rng, self.windows_per_path):
            rows += _rows(check_remark31(f, w, sub), path_id)
            rows += _rows([check_lemma_f2(f, s, t, u)], path_id)

        for mu in self.mu_grid:
            rows += _rows(check_equivalences(f, mu), path_id, mu)
            rows += _rows([check_eq10(f, mu)], path_id, mu)
            for p in self.p_grid:
                params = FunctionalParams(mu=mu, p=p)
                consts = self.constants_for(mu, p)
                rows += _rows([check_remark22(f, params)], path_id, mu, p)
                rows += _rows(check_theorem1(f, params, consts), path_id, mu, p)
                rows += _rows(check_proof_chain(f, params, consts), path_id, mu, p)
                if self.grid is not None:
                    rows += _rows(check_oracles(f, params, self.grid), path_id, mu, p)
        return rows

    def audit_corpus(self, paths: Sequence[CadlagStep]) -> pd.DataFrame:
        """Audit every path; per-path substreams keep rows independent of order."""
        start = time.time()
        streams = np.random.SeedSequence(self.seed).spawn(len(paths))
        rows: List[Dict] = []
        errors = 0

        for i, (f, ss) in enumerate(zip(paths, streams)):
            try:
                rows += self.audit_path(f, i, np.random.default_rng(ss))
            except RegularityError as e:
                errors += 1
                logger.error(f"❌ Path {i}: {e}")
                continue
            if (i + 1) % 100 == 0:
                logger.info(f"🔄 Audited {i + 1}/{len(paths)} paths")

        if errors:
            raise RegularityError(f"{errors} of {len(paths)} paths could not be audited")

        frame = pd.DataFrame(rows, columns=CSV_COLUMNS)
        failed = int((~frame["pass"]).sum()) if len(frame) else 0
        logger.info(
            f"📊 {len(frame)} checks over {len(paths)} paths in {time.time() - start:.1f}s; "
            f"{failed} failed"
        )
        if failed:
            worst = frame.loc[~frame["pass"]].groupby("check_name").size()
            for name, count in worst.items():
                logger.warning(f"⚠️  {name}: {count} violations")
        return frame


def write_csv(frame: pd.DataFrame, out) -> None:
    """Fixed float format so identical inputs give identical bytes."""
    frame.to_csv(out, index=False, float_format="%.17g")
