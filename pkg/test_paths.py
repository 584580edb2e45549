"""Tests for step path construction, evaluation and JSON I/O."""
import json

import numpy as np
import pytest

from models import SidedTime, Side, Window, FunctionalParams
from models.errors import (
    NonMonotoneBreakpoints, BreakpointOutOfRange, LengthMismatch, DimensionMismatch,
    NonFiniteValue, TimeOutOfRange, LeftLimitAtZero, EmptyWindow, BadConfig,
    BadParams, RegularityError
)
from regularity import (
    make_step_path, constant_path, evaluate, dist, distance_table, restrict,
    scale_path, load_path, load_corpus, dump_path, dump_corpus, path_to_dict,
    check_params, check_window
)


def left(t):
    return SidedTime(t=t, side=Side.LEFT)


class TestMakeStepPath:

    def test_single_jump(self, f1):
        assert f1.jumps == 1
        assert evaluate(f1, 0.4)[0] == 0.0
        assert evaluate(f1, 0.6)[0] == 1.0

    def test_constant(self):
        f = make_step_path(1, [], [3])
        assert f.jumps == 0
        assert f.is_constant
        assert f.values == ((3.0,),)

    def test_repeated_breakpoint(self):
        with pytest.raises(NonMonotoneBreakpoints):
            make_step_path(1, [0.3, 0.3], [0, 1, 2])

    def test_decreasing_breakpoints(self):
        with pytest.raises(NonMonotoneBreakpoints, match=r"breakpoints\[1\]"):
            make_step_path(1, [0.6, 0.3], [0, 1, 2])

    @pytest.mark.parametrize("tau", [0.0, 1.0, -0.2, 1.5])
    def test_breakpoint_out_of_range(self, tau):
        with pytest.raises(BreakpointOutOfRange):
            make_step_path(1, [tau], [0, 1])

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            make_step_path(1, [0.5], [0, 1, 2])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch, match=r"values\[1\]"):
            make_step_path(2, [0.5], [[0, 0], [1, 2, 3]])

    def test_non_finite_value(self):
        with pytest.raises(NonFiniteValue):
            make_step_path(1, [0.5], [0.0, float("nan")])

    def test_equal_neighbours_merge(self):
        f = make_step_path(1, [0.25, 0.5, 0.75], [0, 0, 1, 1])
        assert f.breakpoints == (0.5,)
        assert f.values == ((0.0,), (1.0,))

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            make_step_path(1, [0.5], [0])

    def test_piece_geometry(self, f2):
        np.testing.assert_allclose(f2.starts, [0.0, 1 / 3, 2 / 3])
        np.testing.assert_allclose(f2.ends, [1 / 3, 2 / 3, 1.0])
        assert f2.lengths.sum() == pytest.approx(1.0)


class TestEvaluate:

    def test_right_continuity(self, f1):
        assert evaluate(f1, 0.5)[0] == 1.0

    def test_left_limit(self, f1):
        assert evaluate(f1, left(0.5))[0] == 0.0

    def test_closed_at_one(self, f1):
        assert evaluate(f1, 1.0)[0] == 1.0
        assert evaluate(f1, left(1.0))[0] == 1.0

    def test_value_at_zero(self, f2):
        assert evaluate(f2, 0.0)[0] == 0.0

    def test_left_limit_at_zero(self, f1):
        with pytest.raises(LeftLimitAtZero):
            evaluate(f1, left(0.0))

    @pytest.mark.parametrize("t", [-0.01, 1.01])
    def test_time_out_of_range(self, f1, t):
        with pytest.raises(TimeOutOfRange):
            evaluate(f1, t)

    def test_plane_values(self, plane_path):
        np.testing.assert_array_equal(evaluate(plane_path, 0.5), [3.0, 4.0])
        np.testing.assert_array_equal(evaluate(plane_path, left(0.25)), [0.0, 0.0])


class TestDistance:

    def test_scalar(self):
        assert dist([0.0], [1.0]) == 1.0

    def test_triangle(self):
        assert dist([3.0, 4.0], [0.0, 0.0]) == 5.0

    def test_identity(self):
        assert dist([1.5, -2.0], [1.5, -2.0]) == 0.0

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            dist([1.0], [1.0, 2.0])

    def test_table(self, plane_path):
        D = distance_table(plane_path)
        np.testing.assert_allclose(D, [[0, 5, 3], [5, 0, 4], [3, 4, 0]])


class TestHelpers:

    def test_restrict(self, f2):
        assert restrict(f2, Window(sigma=0.2, tau=0.6)) == (0, 1)
        assert restrict(f2, Window(sigma=0.0, tau=1.0)) == (0, 2)

    def test_empty_window(self):
        with pytest.raises(EmptyWindow):
            check_window(Window(sigma=0.5, tau=0.5))

    def test_window_out_of_range(self):
        with pytest.raises(TimeOutOfRange):
            check_window(Window(sigma=-0.1, tau=0.5))

    def test_scale_path(self, f2):
        g = scale_path(f2, -2.0)
        assert g.values == ((0.0,), (-2.0,), (0.0,))
        assert scale_path(f2, 0.0).is_constant

    def test_constant_path(self):
        f = constant_path([1.0, 2.0], dim=2)
        assert f.dim == 2 and f.is_constant

    @pytest.mark.parametrize("mu, p", [(0.0, 2.0), (1.0, 2.0), (0.5, 1.0), (0.5, 0.5)])
    def test_bad_params(self, mu, p):
        with pytest.raises(BadParams):
            check_params(FunctionalParams(mu=mu, p=p))


class TestJson:

    def test_path_file(self, tmp_path, plane_path):
        out = tmp_path / "path.json"
        dump_path(plane_path, out)
        assert load_path(out) == plane_path

    def test_corpus_file(self, tmp_path, f1, f2):
        out = tmp_path / "corpus.json"
        dump_corpus([f1, f2], out, meta={"note": "two paths"})
        data = json.loads(out.read_text())
        assert data["note"] == "two paths"
        assert load_corpus(out) == [f1, f2]

    def test_corpus_accepts_single_path(self, tmp_path, f2):
        out = tmp_path / "single.json"
        out.write_text(json.dumps(path_to_dict(f2)))
        assert load_corpus(out) == [f2]

    def test_corpus_accepts_bare_list(self, tmp_path, f1):
        out = tmp_path / "list.json"
        out.write_text(json.dumps([path_to_dict(f1)]))
        assert load_corpus(out) == [f1]

    def test_corpus_error_names_path(self, tmp_path, f1):
        out = tmp_path / "bad.json"
        bad = {"dim": 1, "breakpoints": [0.7, 0.2], "values": [0, 1, 2]}
        out.write_text(json.dumps({"paths": [path_to_dict(f1), bad]}))
        with pytest.raises(NonMonotoneBreakpoints, match="path 1"):
            load_corpus(out)

    def test_missing_field(self, tmp_path):
        out = tmp_path / "missing.json"
        out.write_text(json.dumps({"dim": 1, "values": [0]}))
        with pytest.raises(BadConfig, match="breakpoints"):
            load_path(out)

    def test_not_an_object(self, tmp_path):
        out = tmp_path / "number.json"
        out.write_text("3")
        with pytest.raises(RegularityError):
            load_path(out)
