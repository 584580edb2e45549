"""Random step path corpus with a minimum breakpoint gap."""
import logging
from typing import List

import numpy as np

from models import CadlagStep, CorpusSpec
from models.errors import BadConfig
from regularity import make_step_path

logger = logging.getLogger(__name__)


def validate_corpus_spec(spec: CorpusSpec) -> CorpusSpec:
    if spec.count < 1:
        raise BadConfig(f"corpus count must be positive, got {spec.count}")
    if not 0 <= spec.min_jumps <= spec.max_jumps:
        raise BadConfig(f"need 0 <= min_jumps <= max_jumps, got ({spec.min_jumps}, {spec.max_jumps})")
    if spec.dim < 1:
        raise BadConfig(f"dim must be positive, got {spec.dim}")
    if not spec.min_gap > 0 or spec.min_gap * (spec.max_jumps + 1) >= 1.0:
        raise BadConfig(
            f"min_gap * (max_jumps + 1) must stay below 1, got {spec.min_gap} * {spec.max_jumps + 1}"
        )
    return spec


def corpus_path(spec: CorpusSpec, rng: np.random.Generator) -> CadlagStep:
    """One path with gaps of at least min_gap between 0, the breakpoints and 1.

    Sorted uniforms on [0, 1 - (J + 1) g] shifted by k g for the k-th
    breakpoint (k = 1..J) keep every gap at least g.
    """
    J = int(rng.integers(spec.min_jumps, spec.max_jumps + 1))
    g = spec.min_gap
    base = np.sort(rng.uniform(0.0, 1.0 - (J + 1) * g, size=J))
    taus = base + g * np.arange(1, J + 1)
    start = rng.normal(size=spec.dim)
    jumps = spec.amplitude * rng.normal(size=(J, spec.dim))
    values = np.vstack((start, start + np.cumsum(jumps, axis=0)))
    return make_step_path(spec.dim, taus, values)


def generate_corpus(spec: CorpusSpec) -> List[CadlagStep]:
    """Paths drawn from independent substreams of spec.seed."""
    validate_corpus_spec(spec)
    streams = np.random.SeedSequence(spec.seed).spawn(spec.count)
    paths = [corpus_path(spec, np.random.default_rng(ss)) for ss in streams]
    jumps = np.array([f.jumps for f in paths])
    logger.info(
        f"✅ Generated {len(paths)} paths (jumps {jumps.min()}..{jumps.max()}, "
        f"min gap {spec.min_gap})"
    )
    return paths
