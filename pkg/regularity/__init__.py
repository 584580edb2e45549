"""Exact path-regularity functionals and their grid oracles."""
from .paths import (
    make_step_path, constant_path, evaluate, dist, distance_table, piece_index,
    restrict, scale_path, load_path, load_corpus, dump_path, dump_corpus,
    path_from_dict, path_to_dict, check_mu, check_p, check_params, check_window
)
from .moduli import (
    delta_triple, delta_window, n_window, n_eta, holder_seminorm,
    restricted_holder, endpoint_seminorms, tilde_seminorm, hat_seminorm,
    seminorm_report
)
from .integral_norms import (
    triple_besov, triple_besov_power, endpoint_besov, endpoint_besov_power,
    lp_sup_norms, remark22_product_bound, besov_report
)
from .oracles import (
    grid_sup_oracle, grid_integral_oracle, n_grid_oracle, eta_grid_oracle,
    refinement_study
)

__all__ = [
    "make_step_path", "constant_path", "evaluate", "dist", "distance_table", "piece_index",
    "restrict", "scale_path", "load_path", "load_corpus", "dump_path", "dump_corpus",
    "path_from_dict", "path_to_dict", "check_mu", "check_p", "check_params", "check_window",
    "delta_triple", "delta_window", "n_window", "n_eta", "holder_seminorm",
    "restricted_holder", "endpoint_seminorms", "tilde_seminorm", "hat_seminorm",
    "seminorm_report",
    "triple_besov", "triple_besov_power", "endpoint_besov", "endpoint_besov_power",
    "lp_sup_norms", "remark22_product_bound", "besov_report",
    "grid_sup_oracle", "grid_integral_oracle", "n_grid_oracle", "eta_grid_oracle",
    "refinement_study"
]
