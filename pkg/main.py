"""Command-line entry point for the cadlag regularity auditor."""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from config import settings
from models import CorpusSpec, FunctionalParams, GridSpec
from models.errors import RegularityError
from regularity import (
    load_path, load_corpus, dump_corpus, seminorm_report, besov_report,
    grid_sup_oracle, grid_integral_oracle, eta_grid_oracle
)
from audit import InequalityAuditor, load_constants, write_csv
from simulation import generate_corpus, load_experiment, run_experiment, within_bounds

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

INPUT_ERRORS = (RegularityError, ValidationError, json.JSONDecodeError, OSError)


def setup_logging(level: str = None) -> None:
    """File + stream handlers; repeated calls keep a single set of handlers."""
    logging.basicConfig(
        level=getattr(logging, (level or settings.log_level).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(settings.log_file),
            logging.StreamHandler()
        ],
        force=True,
    )


def _write_json(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
        logger.info(f"💾 Report written to {out}")
    else:
        print(text)


def cmd_seminorms(args) -> int:
    f = load_path(args.path)
    params = FunctionalParams(mu=args.mu, p=args.p)
    report = {
        "path": str(args.path),
        "mu": params.mu,
        "p": params.p,
        "seminorms": seminorm_report(f, params).model_dump(exclude={"params"}),
        "besov": besov_report(f, params).model_dump(exclude={"params"}),
    }
    if args.grid:
        grid = GridSpec(G=args.grid)
        report["oracles"] = {
            "G": grid.G,
            "holder": grid_sup_oracle(f, params.mu, grid),
            "tilde": eta_grid_oracle(f, params.mu, grid),
            "triple_power": grid_integral_oracle(f, params, grid),
        }
    _write_json(report, args.out)
    return EXIT_OK


def cmd_audit(args) -> int:
    paths = load_corpus(args.input)
    if args.constants:
        constants, strict = load_constants(args.constants), True
    elif Path(settings.constants_path).exists():
        constants, strict = load_constants(settings.constants_path), False
    else:
        constants, strict = None, False

    auditor = InequalityAuditor(
        mu_grid=args.mu,
        p_grid=args.p,
        constants=constants,
        windows_per_path=args.windows,
        grid=GridSpec(G=args.grid) if args.grid else None,
        seed=args.seed,
        strict=strict,
    )
    frame = auditor.audit_corpus(paths)
    write_csv(frame, args.out)
    logger.info(f"💾 {len(frame)} audit rows written to {args.out}")

    failed = int((~frame["pass"]).sum()) if len(frame) else 0
    if failed:
        logger.warning(f"⚠️  {failed} audit rows failed")
        return EXIT_FAILED
    logger.info("✅ Every inequality holds")
    return EXIT_OK


def cmd_mc(args) -> int:
    config = load_experiment(args.config)
    frame = run_experiment(config, workers=args.workers)
    write_csv(frame, args.out)
    logger.info(f"💾 {len(frame)} Monte Carlo rows written to {args.out}")
    return EXIT_OK if within_bounds(frame) else EXIT_FAILED


def cmd_gen_corpus(args) -> int:
    spec = CorpusSpec(
        count=args.count or settings.corpus_count,
        min_jumps=settings.corpus_min_jumps if args.min_jumps is None else args.min_jumps,
        max_jumps=settings.corpus_max_jumps if args.max_jumps is None else args.max_jumps,
        min_gap=args.min_gap or settings.corpus_min_gap,
        dim=args.dim or settings.corpus_dim,
        amplitude=args.amplitude,
        seed=settings.cadlag_seed if args.seed is None else args.seed,
    )
    paths = generate_corpus(spec)
    dump_corpus(paths, args.out, meta={"spec": spec.model_dump()})
    logger.info(f"💾 Corpus written to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Cadlag regularity auditor - exact seminorms, inequality audits and Monte Carlo checks'
    )
    parser.add_argument('--log-level', default=None, help='Overrides settings.log_level')
    sub = parser.add_subparsers(dest='command', required=True)

    p_sem = sub.add_parser('seminorms', help='Seminorms and integral norms of one path')
    p_sem.add_argument('path', help='Path JSON file')
    p_sem.add_argument('--mu', type=float, required=True, help='Hoelder exponent in (0, 1)')
    p_sem.add_argument('--p', type=float, required=True, help='Integrability exponent above 1')
    p_sem.add_argument('--grid', type=int, default=None, help='Also report grid oracles at resolution G')
    p_sem.add_argument('--out', default=None, help='Report file (stdout if omitted)')
    p_sem.set_defaults(func=cmd_seminorms)

    p_aud = sub.add_parser('audit', help='Audit every inequality over a corpus')
    p_aud.add_argument('input', help='Corpus or single path JSON file')
    p_aud.add_argument('--mu', type=float, nargs='+', default=None, help='Hoelder exponents (settings.mu_grid)')
    p_aud.add_argument('--p', type=float, nargs='+', default=None, help='Integrability exponents (settings.p_grid)')
    p_aud.add_argument('--constants', default=None, help='Pinned constants file')
    p_aud.add_argument('--grid', type=int, default=None, help='Add oracle rows at resolution G')
    p_aud.add_argument('--windows', type=int, default=None, help='Random windows per path')
    p_aud.add_argument('--seed', type=int, default=None, help='Seed of the random windows')
    p_aud.add_argument('--out', default='audit.csv', help='CSV output file')
    p_aud.set_defaults(func=cmd_audit)

    p_mc = sub.add_parser('mc', help='Run a Monte Carlo experiment')
    p_mc.add_argument('config', help='Experiment JSON file')
    p_mc.add_argument('--workers', type=int, default=None, help='Worker processes (settings.mc_workers)')
    p_mc.add_argument('--out', default='mc.csv', help='CSV output file')
    p_mc.set_defaults(func=cmd_mc)

    p_gen = sub.add_parser('gen-corpus', help='Write a random step path corpus')
    p_gen.add_argument('--count', type=int, default=None)
    p_gen.add_argument('--min-jumps', type=int, default=None)
    p_gen.add_argument('--max-jumps', type=int, default=None)
    p_gen.add_argument('--min-gap', type=float, default=None)
    p_gen.add_argument('--dim', type=int, default=None)
    p_gen.add_argument('--amplitude', type=float, default=1.0)
    p_gen.add_argument('--seed', type=int, default=None)
    p_gen.add_argument('--out', required=True, help='Corpus JSON file')
    p_gen.set_defaults(func=cmd_gen_corpus)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main function."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    try:
        return args.func(args)
    except INPUT_ERRORS as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
