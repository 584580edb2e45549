"""Jump process simulation, Monte Carlo experiments and corpus generation."""
from .processes import sample_path, dyadic_projection, poisson_hypothesis, validate_spec
from .montecarlo import (
    mc_triple_moment, mc_besov_moments, mc_dyadic_uniform, estimate,
    replicate_streams, BESOV_KEYS
)
from .trend import mann_kendall, trend_summary
from .corpus import generate_corpus, corpus_path, validate_corpus_spec
from .experiments import run_experiment, load_experiment, within_bounds, MC_COLUMNS

__all__ = [
    "sample_path", "dyadic_projection", "poisson_hypothesis", "validate_spec",
    "mc_triple_moment", "mc_besov_moments", "mc_dyadic_uniform", "estimate",
    "replicate_streams", "BESOV_KEYS",
    "mann_kendall", "trend_summary",
    "generate_corpus", "corpus_path", "validate_corpus_spec",
    "run_experiment", "load_experiment", "within_bounds", "MC_COLUMNS"
]
