"""Inequality audits and their explicit constants."""
from .constants import (
    derive_constants, load_constants, constants_for, build_table,
    corollary1_constants, corollary1_sup_factor, ConstantsTable
)
from .inequalities import (
    make_report, check_remark31, check_lemma_f2, check_equivalences, check_eq10,
    check_remark22, check_theorem1, theorem1_ratio, check_proof_chain, check_oracles
)
from .runner import InequalityAuditor, random_windows, write_csv, CSV_COLUMNS

__all__ = [
    "derive_constants", "load_constants", "constants_for", "build_table",
    "corollary1_constants", "corollary1_sup_factor", "ConstantsTable",
    "make_report", "check_remark31", "check_lemma_f2", "check_equivalences", "check_eq10",
    "check_remark22", "check_theorem1", "theorem1_ratio", "check_proof_chain", "check_oracles",
    "InequalityAuditor", "random_windows", "write_csv", "CSV_COLUMNS"
]
