"""Closed-form predictors vs direct iteration of the update recursion."""

import pytest

from rachjam import (
    AttackerConfig,
    DetectorConfig,
    multi_attempt_success,
    periodic_threshold_trace,
    predict_success,
    steady_state,
    threshold_closed_form,
)


def oai(beta, delta=12.0, init=17.4):
    return DetectorConfig(alpha=0.0, beta=beta, gamma=1.0 - beta, delta_db=delta, initial_threshold_db=init)


class TestClosedForm:
    def test_zero_iterations_is_initial(self):
        assert threshold_closed_form(0, oai(0.24), 51.0) == 17.4

    def test_one_step_matches_update(self):
        assert threshold_closed_form(1, oai(0.24), 51.0) == pytest.approx(25.464, abs=1e-9)

    def test_large_i_approaches_attacker_power(self):
        assert threshold_closed_form(200, oai(0.24), 51.0) == pytest.approx(51.0, abs=1e-9)

    def test_gamma_one_linear_branch(self):
        cfg = DetectorConfig(alpha=0.0, beta=0.5, gamma=1.0, delta_db=0.0, initial_threshold_db=10.0)
        # growth of (alpha + beta) * p per iteration
        assert threshold_closed_form(0, cfg, 20.0) == 10.0
        assert threshold_closed_form(3, cfg, 20.0) == pytest.approx(10.0 + 3 * 0.5 * 20.0)

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError, match="nonnegative"):
            threshold_closed_form(-1, oai(0.24), 51.0)


class TestSteadyState:
    def test_oai_family_limit_is_attacker_power(self):
        # alpha + beta equals 1 - gamma, so the limit collapses to the input power
        assert steady_state(oai(0.24), 51.0) == pytest.approx(51.0)
        assert steady_state(oai(0.12), 51.0) == pytest.approx(51.0)

    def test_memoryless_limit(self):
        cfg = DetectorConfig(alpha=1.0, beta=0.0, gamma=0.0, delta_db=0.0, initial_threshold_db=17.4)
        assert steady_state(cfg, 51.0) == 51.0

    def test_gamma_at_or_above_one_has_no_limit(self):
        with pytest.raises(ValueError, match="gamma"):
            steady_state(oai(0.0), 51.0)   # beta 0 means gamma 1
        cfg = DetectorConfig(alpha=0.0, beta=0.5, gamma=1.5, delta_db=0.0, initial_threshold_db=0.0)
        with pytest.raises(ValueError, match="gamma"):
            steady_state(cfg, 51.0)


class TestPeriodicTrace:
    def test_continuous_attack_equals_closed_form(self):
        cfg = oai(0.24)
        att = AttackerConfig(period=1, power_db=51.0)
        trace = periodic_threshold_trace(500, cfg, att, 17.4)
        assert len(trace) == 501
        for i, value in enumerate(trace):
            assert value == pytest.approx(threshold_closed_form(i, cfg, 51.0), abs=1e-9)

    def test_disabled_attacker_stays_at_noise_fixed_point(self):
        trace = periodic_threshold_trace(50, oai(0.24), AttackerConfig(period=1, power_db=51.0, enabled=False), 17.4)
        assert all(v == pytest.approx(17.4, abs=1e-9) for v in trace)

    def test_static_weights_pin_initial_threshold(self):
        cfg = DetectorConfig(alpha=0.0, beta=0.0, gamma=1.0, delta_db=0.0, initial_threshold_db=17.4)
        trace = periodic_threshold_trace(50, cfg, AttackerConfig(period=3, power_db=51.0), 17.4)
        assert trace == [17.4] * 51

    def test_period_two_alternates_for_memoryless(self):
        cfg = DetectorConfig(alpha=1.0, beta=0.0, gamma=0.0, delta_db=0.0, initial_threshold_db=17.4)
        trace = periodic_threshold_trace(8, cfg, AttackerConfig(period=2, power_db=51.0), 17.4)
        # entry 0 is the initial threshold; updates then mirror the schedule
        assert trace[0] == 17.4
        assert trace[1:] == [17.4, 51.0, 17.4, 51.0, 17.4, 51.0, 17.4, 51.0]

    def test_negative_attack_start_applies_warmup(self):
        cfg = oai(0.24)
        att = AttackerConfig(period=1, power_db=51.0)
        trace = periodic_threshold_trace(10, cfg, att, 17.4, attack_start=-3)
        # three warm-up updates make trace entry i equal closed form at i + 3
        for i, value in enumerate(trace):
            assert value == pytest.approx(threshold_closed_form(i + 3, cfg, 51.0), abs=1e-9)

    def test_positive_attack_start_delays_buildup(self):
        cfg = oai(0.24)
        att = AttackerConfig(period=1, power_db=51.0)
        trace = periodic_threshold_trace(10, cfg, att, 17.4, attack_start=4)
        assert trace[:4] == pytest.approx([17.4] * 4, abs=1e-9)
        assert trace[5] > trace[4]

    def test_rejects_bad_horizon(self):
        with pytest.raises(ValueError, match="horizon"):
            periodic_threshold_trace(-1, oai(0.24), AttackerConfig(period=1, power_db=51.0), 17.4)


class TestPredictSuccess:
    def test_single_values(self):
        assert predict_success(56.4, [17.4], 12.0) == [1]
        assert predict_success(56.4, [51.0], 12.0) == [0]

    def test_boundary_is_failure(self):
        assert predict_success(30.0, [30.0, 30.0, 30.0], 0.0) == [0, 0, 0]

    def test_elementwise_over_trace(self):
        thresholds = [17.4, 25.464, 44.525282399846404, 51.0]
        assert predict_success(56.4, thresholds, 12.0) == [1, 1, 0, 0]


class TestMultiAttempt:
    def test_single_attempt_matches_predict(self):
        assert multi_attempt_success([56.4], [17.4], 12.0) == predict_success(56.4, [17.4], 12.0)[0]

    def test_all_attempts_must_succeed(self):
        assert multi_attempt_success([56.4, 58.4], [44.0, 44.0], 12.0) == 1
        assert multi_attempt_success([56.4, 58.4], [51.0, 51.0], 12.0) == 0

    def test_one_failure_annihilates(self):
        assert multi_attempt_success([56.4, 58.4, 60.4], [17.4, 51.0, 17.4], 12.0) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="equal length"):
            multi_attempt_success([56.4], [17.4, 18.0], 12.0)

    def test_result_is_binary(self):
        assert multi_attempt_success([56.4, 56.4], [17.4, 17.4], 12.0) in (0, 1)
