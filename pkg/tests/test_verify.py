import math

import numpy as np
import pytest

from sharpineq.errors import DomainError
from sharpineq.special import digamma, sphere_area
from sharpineq.verify import (
    CheckReport,
    PROBE_FORMULAS,
    _battery_draws,
    check_circle_young,
    check_constant_vs_kernel,
    check_duality_battery,
    check_gaussian_pitt,
    check_hardy_rellich,
    check_lemma1,
    check_log_moment,
    check_log_slack,
    check_offdiag_edge,
    check_offdiag_young,
    check_slope,
    check_step3_edge,
    check_step3_young,
    check_sw_lemma_hardy,
    check_transform_fixed,
    kernel_norm_battery,
    probe_operator,
    run_all,
)


@pytest.fixture(scope="module")
def full_run():
    return run_all()


class TestCheckReport:
    def test_as_dict_keys(self):
        report = check_lemma1(3, 2.0, 2.0, 1.0)
        assert list(report.as_dict()) == [
            "check_id", "formula_id", "params", "closed_form", "numeric",
            "abs_err", "rel_err", "tol", "pass", "runtime_ms",
        ]
        assert report.as_dict()["pass"] is True

    def test_error_fields_consistent(self):
        report = check_lemma1(3, 2.0, 2.0, 0.5)
        assert report.abs_err == abs(report.numeric - report.closed_form)
        assert report.rel_err == report.abs_err / abs(report.closed_form)

    def test_params_echo_is_a_copy(self):
        report = check_lemma1(3, 2.0, 2.0, 1.0)
        echo = report.as_dict()["params"]
        echo["n"] = -1
        assert report.params["n"] == 3


class TestProbeOperator:
    def test_ratios_climb_to_the_constant(self):
        probe = probe_operator("herbst_c", {"n": 3, "p": 2.0, "alpha": 1.0})
        assert probe.passed
        assert probe.final_fraction >= 0.98
        assert all(b >= a for a, b in zip(probe.ratios, probe.ratios[1:]))
        assert all(r <= probe.bound * (1.0 + 1e-6) for r in probe.ratios)

    def test_deficit_halves_when_width_doubles(self):
        probe = probe_operator("sw_diag_d",
                               {"n": 3, "p": 2.0, "alpha": 0.4, "beta": 0.4})
        deficits = [probe.bound - r for r in probe.ratios]
        for wide, narrow in zip(deficits[1:], deficits):
            assert wide <= 0.5 * narrow * (1.0 + 1e-6)

    def test_as_check_report(self):
        probe = probe_operator("herbst_c", {"n": 4, "p": 2.0, "alpha": 1.5})
        report = probe.as_check_report()
        assert isinstance(report, CheckReport)
        assert report.closed_form == probe.bound
        assert report.numeric == probe.ratios[-1]
        assert report.passed

    def test_rejects_unknown_formula(self):
        with pytest.raises(DomainError, match="no probe route"):
            probe_operator("pitt_c", {"n": 3, "alpha": 1.0})

    def test_rejects_fractional_cell_widths(self):
        with pytest.raises(DomainError, match="whole number"):
            probe_operator("herbst_c", {"n": 3, "p": 2.0, "alpha": 1.0},
                           widths=(8, 16.3))

    def test_rejects_degenerate_width_lists(self):
        with pytest.raises(DomainError, match="widths"):
            probe_operator("herbst_c", {"n": 3, "p": 2.0, "alpha": 1.0},
                           widths=(8,))


class TestKernelNormChecks:
    def test_single_point_each_formula(self):
        points = {
            "herbst_c": {"n": 3, "p": 2.0, "alpha": 1.0},
            "sw_diag_d": {"n": 3, "p": 2.0, "alpha": 0.5, "beta": 0.5},
            "grad_f": {"n": 3, "p": 2.0, "alpha": 1.0, "beta": 0.0,
                       "sigma": 1.0},
            "iterated_e": {"n": 2, "p": 2.0, "alpha": 0.5, "sigma": 1.0,
                           "rho": 0.5},
        }
        for formula_id, params in points.items():
            report = check_constant_vs_kernel(formula_id, params)
            assert report.passed, report
            assert report.rel_err <= 1e-7

    def test_battery_draws_are_deterministic(self):
        first = _battery_draws("sw_diag_d", 8, seed=123)
        second = _battery_draws("sw_diag_d", 8, seed=123)
        assert first == second
        assert first != _battery_draws("sw_diag_d", 8, seed=124)

    def test_battery_covers_sixty_points(self):
        reports = kernel_norm_battery()
        assert len(reports) >= 60
        assert all(r.passed for r in reports)
        by_formula = {fid: 0 for fid in PROBE_FORMULAS}
        for report in reports:
            by_formula[report.formula_id] += 1
        assert all(count == 16 for count in by_formula.values())


class TestGaussianChecks:
    def test_pitt_ratio_strictly_inside(self):
        report = check_gaussian_pitt(2, 1.0)
        assert report.passed
        assert report.numeric < 1.0
        assert report.closed_form == pytest.approx(0.4569465809, rel=1e-9)

    def test_pitt_limit_instance(self):
        report = check_gaussian_pitt(3, 1e-8, limit=True)
        assert report.passed
        assert abs(report.numeric - 1.0) <= 1e-6

    def test_hardy_rellich_slack(self):
        report = check_hardy_rellich(3, 2.0, 1.0)
        assert report.passed
        # both norms are exactly 1 here, so the ratio is the constant itself
        assert report.closed_form == pytest.approx(
            1.0 / math.sqrt(4.0 * math.pi), rel=1e-8)
        assert report.numeric > report.closed_form

    def test_log_moment_value(self):
        report = check_log_moment(2)
        assert report.passed
        assert report.closed_form == pytest.approx(
            0.25 * (digamma(1.0) - math.log(2.0 * math.pi)), rel=1e-12)

    def test_log_slack_is_ln_two_in_the_plane(self):
        report = check_log_slack(2)
        assert report.passed
        assert report.closed_form == pytest.approx(math.log(2.0), rel=1e-12)
        assert report.numeric == pytest.approx(math.log(2.0), rel=1e-8)

    def test_slope_matches_catalog(self):
        report = check_slope(3, 2.0)
        assert report.passed
        assert report.abs_err <= 1e-6


class TestIdentityBattery:
    def test_all_identities_hold(self):
        reports = check_duality_battery()
        assert len(reports) >= 8
        for report in reports:
            assert report.passed, report.check_id

    def test_mixed_prefactor_uses_quadrature_tolerance(self):
        reports = {r.check_id: r for r in check_duality_battery()}
        mixed = [r for cid, r in reports.items() if "mixed_prefactor" in cid]
        assert len(mixed) == 2
        assert all(r.tol == 1e-8 for r in mixed)


class TestHomogeneousBound:
    def test_hardy_kernel_closed_form(self):
        report = check_sw_lemma_hardy(2.0)
        assert report.passed
        assert report.closed_form == pytest.approx(
            sphere_area(3) * 2.0 / 3.0, rel=1e-12)


class TestYoungTrials:
    def test_offdiag_trials_respect_bound(self):
        report = check_offdiag_young(trials=20)
        assert report.passed
        assert report.numeric <= 1.0 + 1e-9

    def test_offdiag_edge_refuses(self):
        report = check_offdiag_edge()
        assert report.passed

    def test_step3_trials_respect_bound(self):
        report = check_step3_young(trials=20)
        assert report.passed
        assert report.numeric <= 1.0 + 1e-9

    def test_step3_edge_refuses(self):
        report = check_step3_edge()
        assert report.passed

    def test_circle_trials_respect_bound(self):
        report = check_circle_young(3.0, trials=20)
        assert report.passed

    def test_trials_are_seeded(self):
        first = check_offdiag_young(trials=5, seed=42)
        second = check_offdiag_young(trials=5, seed=42)
        assert first.numeric == second.numeric


class TestTransformChecks:
    def test_fixed_point_report(self):
        report = check_transform_fixed(2)
        assert report.passed
        assert report.numeric <= 1e-8


class TestRunAll:
    def test_everything_passes(self, full_run):
        failing = [r.check_id for r in full_run if not r.passed]
        assert failing == []

    def test_report_count_and_ordering(self, full_run):
        assert len(full_run) >= 100
        ids = [r.check_id for r in full_run]
        assert ids == sorted(ids)
        assert len(set(ids)) == len(ids)

    def test_two_runs_agree_modulo_timing(self, full_run):
        second = run_all()
        strip = lambda r: {**r.as_dict(), "runtime_ms": None}
        assert [strip(r) for r in full_run] == [strip(r) for r in second]

    def test_probe_reports_present_for_all_four_formulas(self, full_run):
        probed = {r.formula_id for r in full_run
                  if r.check_id.startswith("probe[")}
        assert probed == set(PROBE_FORMULAS)
