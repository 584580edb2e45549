"""Inequality checks, explicit constants and the corpus auditor."""
import json
import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import step_paths
from config import settings as app_settings
from models import FunctionalParams, GridSpec, Window, CorpusSpec
from models.errors import (
    MissingConstants, ExponentNotIntegrable, UnorderedTriple, WindowNotNested,
    BadConfig, RegularityError
)
from audit import (
    derive_constants, load_constants, constants_for, build_table, corollary1_constants,
    make_report, check_remark31, check_lemma_f2, check_equivalences, check_eq10,
    check_remark22, check_theorem1, theorem1_ratio, check_proof_chain, check_oracles,
    InequalityAuditor, random_windows, write_csv, CSV_COLUMNS
)
from regularity import make_step_path, holder_seminorm, restricted_holder
from simulation import generate_corpus

PINNED = Path(__file__).parent / "constants" / "derived_constants.json"
QUARTER_2 = FunctionalParams(mu=0.25, p=2.0)


def all_pass(reports):
    return all(r.passed for r in reports)


class TestMakeReport:

    def test_pass_with_zero_slack(self):
        r = make_report("x", 1.0, 1.0)
        assert r.passed and r.slack == 0.0 and r.ratio == 1.0

    def test_zero_over_zero(self):
        r = make_report("x", 0.0, 0.0)
        assert r.passed and r.ratio == 0.0

    def test_positive_over_zero(self):
        r = make_report("x", 0.5, 0.0)
        assert not r.passed and math.isinf(r.ratio)

    def test_relative_tolerance(self):
        assert make_report("x", 1.0 + 1e-12, 1.0).passed
        assert not make_report("x", 1.0 + 1e-6, 1.0).passed


class TestConstants:

    def test_corollary_quarter(self):
        c = corollary1_constants(0.25, 1.0, 2.0)
        assert c.c_triple == pytest.approx(4.0 / 3.0)
        assert c.c_left == pytest.approx(2.0)
        assert c.c_right == c.c_left

    def test_corollary_small_mu(self):
        c = corollary1_constants(0.1, 1.0, 2.0)
        assert c.c_triple == pytest.approx(1.0 / (0.8 * 1.8))
        assert c.c_triple == pytest.approx(0.6944, abs=1e-4)

    def test_corollary_divergent(self):
        with pytest.raises(ExponentNotIntegrable):
            corollary1_constants(0.5, 1.0, 2.0)

    def test_derived_half_two(self):
        c = derive_constants(0.5, 2.0, 0.5)
        assert c.chain_fo1_C == pytest.approx(4.5)
        assert c.chain_f52_C == pytest.approx(144.0)
        assert c.theorem1_C == pytest.approx((2.0 * c.chain_C) ** (1.0 + 3.0 / 1.0))
        assert c.delta_star == pytest.approx((2.0 * c.chain_C) ** -2.0)
        assert c.theorem1_sup_C == pytest.approx(2.0 * c.theorem1_C)

    def test_derived_exceeds_worked_ratio(self, f2):
        c = derive_constants(0.25, 2.0)
        assert c.theorem1_C >= theorem1_ratio(f2, QUARTER_2)

    @pytest.mark.parametrize("delta", [0.0, 1.0, -0.5])
    def test_bad_delta(self, delta):
        with pytest.raises(BadConfig):
            derive_constants(0.5, 2.0, delta)

    def test_pinned_file_matches_derivation(self):
        table = load_constants(PINNED)
        assert len(table) == 27
        for mu in app_settings.mu_grid:
            for p in app_settings.p_grid:
                pinned = constants_for(table, mu, p)
                fresh = derive_constants(mu, p, pinned.delta)
                assert pinned.theorem1_C == pytest.approx(fresh.theorem1_C, rel=1e-9)
                assert pinned.chain_f52_C == pytest.approx(fresh.chain_f52_C, rel=1e-12)

    def test_pinned_note_states_admissibility(self):
        data = json.loads(PINNED.read_text())
        assert "admissible, not optimal" in data["note"]
        largest = max(entry["theorem1_C"] for entry in data["entries"])
        assert largest == pytest.approx(derive_constants(0.1, 1.5).theorem1_C, rel=1e-9)

    def test_missing_entry(self):
        table = build_table([0.5], [2.0])
        with pytest.raises(MissingConstants):
            constants_for(table, 0.25, 2.0)

    def test_corrupted_file(self, tmp_path):
        data = json.loads(PINNED.read_text())
        data["entries"][0]["theorem1_C"] = -1.0
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        with pytest.raises(BadConfig, match="theorem1_C"):
            load_constants(bad)


class TestWindowChecks:

    def test_remark31_f2(self, f2):
        reports = check_remark31(f2, Window(sigma=0.0, tau=1.0), Window(sigma=0.2, tau=0.6))
        assert len(reports) == 4
        assert all_pass(reports)
        by_name = {r.check_name: r for r in reports}
        assert by_name["remark31_half_n_le_delta"].lhs == 0.5
        assert by_name["remark31_delta_le_2n"].rhs == 2.0
        assert by_name["remark31_n_nested"].lhs == 0.0

    def test_remark31_trivial(self, f1, constant):
        for f in (f1, constant):
            reports = check_remark31(f, Window(sigma=0.0, tau=1.0), Window(sigma=0.3, tau=0.7))
            assert all_pass(reports)
            assert all(r.slack == 0.0 for r in reports)

    def test_remark31_not_nested(self, f2):
        with pytest.raises(WindowNotNested):
            check_remark31(f2, Window(sigma=0.2, tau=0.6), Window(sigma=0.1, tau=0.5))

    def test_lemma_f2_tight(self, f2):
        r = check_lemma_f2(f2, 0.2, 0.5, 0.8)
        assert r.check_name == "lemma_f2"
        assert r.passed
        assert (r.lhs, r.rhs, r.slack) == (1.0, 1.0, 0.0)

    def test_lemma_f2_window_reading(self, f2):
        r = check_lemma_f2(f2, 0.2, 0.5, 0.8, window_delta=True)
        assert r.check_name == "lemma_f2_window"
        assert r.passed

    def test_lemma_f2_single_jump(self, f1):
        r = check_lemma_f2(f1, 0.2, 0.5, 0.8)
        assert r.lhs == 0.0 and r.passed

    def test_lemma_f2_unordered(self, f2):
        with pytest.raises(UnorderedTriple):
            check_lemma_f2(f2, 0.5, 0.5, 0.8)


class TestSeminormChecks:

    def test_equivalences_f2(self, f2):
        reports = check_equivalences(f2, 0.5)
        assert len(reports) == 5
        assert all_pass(reports)

    def test_equivalences_constant(self, constant):
        assert all_pass(check_equivalences(constant, 0.3))

    def test_eq10_f2(self, f2):
        r = check_eq10(f2, 0.5)
        assert r.lhs == pytest.approx(math.sqrt(3.0))
        assert r.rhs == pytest.approx(math.sqrt(3.0) + math.sqrt(2.0))
        assert r.passed

    def test_eq10_jumps_near_start(self):
        f = make_step_path(1, [0.03, 0.07], [0.0, 2.0, -1.0])
        assert restricted_holder(f, 0.4) == pytest.approx(holder_seminorm(f, 0.4))
        assert check_eq10(f, 0.4).passed

    def test_remark22(self, f2, staircase):
        assert check_remark22(f2, QUARTER_2).slack == pytest.approx(0.0, abs=1e-12)
        r = check_remark22(staircase, QUARTER_2)
        assert r.passed and r.slack > 0.0


class TestTheorem1:

    def test_worked_ratio(self, f2):
        assert theorem1_ratio(f2, QUARTER_2) == pytest.approx(1.5869, abs=1e-3)

    def test_rows_f2(self, f2):
        reports = check_theorem1(f2, QUARTER_2, derive_constants(0.25, 2.0))
        by_name = {r.check_name: r for r in reports}
        assert by_name["theorem1_seminorms"].lhs == pytest.approx(3.0 * 3.0 ** 0.25)
        assert by_name["theorem1_seminorms"].lhs == pytest.approx(3.948, abs=1e-3)
        assert by_name["theorem1_explicit_sup"].rhs == pytest.approx(2.0 * 3.0 ** 0.25 + math.sqrt(1.0 / 3.0))
        assert all_pass(reports)

    def test_constant(self, constant):
        reports = check_theorem1(constant, QUARTER_2, derive_constants(0.25, 2.0))
        assert all_pass(reports)
        by_name = {r.check_name: r for r in reports}
        assert by_name["theorem1_seminorms"].rhs == 0.0
        assert by_name["theorem1_explicit_sup"].slack == pytest.approx(0.0, abs=1e-12)

    def test_missing_constants(self, f2):
        with pytest.raises(MissingConstants):
            check_theorem1(f2, QUARTER_2, None)

    def test_mismatched_constants(self, f2):
        with pytest.raises(MissingConstants):
            check_theorem1(f2, QUARTER_2, derive_constants(0.5, 2.0))

    def test_proof_chain_f2(self, f2):
        reports = check_proof_chain(f2, QUARTER_2, derive_constants(0.25, 2.0, 0.5), sweep_points=4)
        names = [r.check_name for r in reports]
        assert names.count("fo1") == 4 and names.count("fo2") == 4
        assert names[-2:] == ["f51", "f52"]
        assert all_pass(reports)

    def test_proof_chain_single_jump(self, f1):
        reports = check_proof_chain(f1, QUARTER_2, derive_constants(0.25, 2.0))
        assert all_pass(reports)
        assert all(r.lhs == 0.0 for r in reports if r.check_name == "fo1" and r.params["t"] < 0.5)

    def test_oracle_rows(self, f2):
        reports = check_oracles(f2, QUARTER_2, GridSpec(G=2048))
        assert [r.check_name for r in reports] == [
            "oracle_holder_below_exact", "oracle_holder_gap",
            "oracle_tilde_below_exact", "oracle_integral_agreement",
        ]
        assert all_pass(reports)


class TestAuditor:

    def test_single_path(self, f2):
        auditor = InequalityAuditor(mu_grid=[0.25], p_grid=[2.0], windows_per_path=5, seed=7)
        frame = auditor.audit_corpus([f2])
        assert list(frame.columns) == CSV_COLUMNS
        assert frame["pass"].all()
        assert {"lemma_f2", "theorem1_seminorms", "f52", "eq10_short_spans"} <= set(frame["check_name"])

    def test_rerun_is_identical(self, tmp_path, f1, f2, staircase):
        paths = [f1, f2, staircase]
        outs = []
        for name in ("a.csv", "b.csv"):
            auditor = InequalityAuditor(mu_grid=[0.5], p_grid=[2.0], windows_per_path=3, seed=11)
            write_csv(auditor.audit_corpus(paths), tmp_path / name)
            outs.append((tmp_path / name).read_bytes())
        assert outs[0] == outs[1]

    def test_strict_table_without_entry(self, f2):
        auditor = InequalityAuditor(mu_grid=[0.25], p_grid=[2.0], windows_per_path=1,
                                    constants=build_table([0.5], [2.0]))
        with pytest.raises(RegularityError):
            auditor.audit_corpus([f2])

    def test_lenient_table_derives_missing(self, f2):
        auditor = InequalityAuditor(mu_grid=[0.25], p_grid=[2.0], windows_per_path=1,
                                    constants=build_table([0.5], [2.0]), strict=False)
        assert auditor.audit_corpus([f2])["pass"].all()

    def test_oracle_rows_added(self, f2):
        auditor = InequalityAuditor(mu_grid=[0.25], p_grid=[2.0], windows_per_path=1,
                                    grid=GridSpec(G=256))
        frame = auditor.audit_corpus([f2])
        assert "oracle_holder_below_exact" in set(frame["check_name"])

    def test_random_windows_nested(self):
        rng = np.random.default_rng(3)
        for w, sub, (s, t, u) in random_windows(rng, 50):
            assert w.contains(sub)
            assert s < t < u

    @settings(max_examples=40, deadline=None)
    @given(step_paths(max_jumps=6, dim=2), st.integers(0, 2 ** 32 - 1))
    def test_random_paths_pass(self, f, seed):
        auditor = InequalityAuditor(mu_grid=[0.3, 0.7], p_grid=[1.5, 4.0], windows_per_path=4, seed=seed)
        frame = auditor.audit_corpus([f])
        failed = frame.loc[~frame["pass"], "check_name"].tolist()
        assert not failed


@pytest.mark.slow
def test_default_corpus_audit():
    """Full default corpus over the whole (mu, p) grid with pinned constants."""
    paths = generate_corpus(CorpusSpec(count=app_settings.corpus_count, seed=app_settings.cadlag_seed))
    auditor = InequalityAuditor(constants=load_constants(PINNED))
    frame = auditor.audit_corpus(paths)
    assert frame["pass"].all()
