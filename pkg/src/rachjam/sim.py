"""RO-granular scenario simulation.

Runs the attacker, legitimate UE, and gNB detector forward over discrete
random-access occasions, producing a per-RO trace and summary metrics.

Timeline conventions:

* The UE's first attempt RO and the attacker's early-start offset fix the
  attack start at ``first_attempt_ro - early_start``; the attacker (when
  enabled) transmits there and every ``period`` ROs after.
* An early start larger than the first attempt RO places attack ROs before
  RO 0. Those warm-up ROs are simulated (the threshold has already moved
  by RO 0) but only ROs 0..horizon-1 are recorded.
* The first simulated RO is evaluated against the configured initial
  threshold. Every later RO folds its measurement into the recursion
  first and is evaluated against the updated threshold, so the threshold
  in force at an RO reflects that RO's own measurement.
* Measured power at an RO is the dominant signal: the max of the noise
  level, the attacker power when transmitting, and the UE attempt power
  when attempting and ``ue_contributes_to_measurement`` is set.

Everything is pure and deterministic: identical scenarios yield
bit-identical traces.
"""

from __future__ import annotations

import dataclasses
import math
import warnings
from dataclasses import dataclass

from .analytic import periodic_threshold_trace
from .core import (
    AttackerConfig,
    DetectorConfig,
    ThresholdState,
    detect_msg1,
    update_threshold,
)

__all__ = [
    "UeConfig",
    "Scenario",
    "TraceRecord",
    "ScenarioSummary",
    "SweepResult",
    "ComparisonReport",
    "SWEEP_AXES",
    "run_scenario",
    "run_srsran_scenario",
    "scenario_with",
    "sweep",
    "compare_with_analytic",
]


@dataclass(frozen=True)
class UeConfig:
    """Legitimate UE behavior: attempts Msg1 on every RO once it starts."""

    power_db: float               # received power of the first attempt
    first_attempt_ro: int = 0
    max_attempts: int | None = None   # None: keep attempting through the horizon
    ramp_step_db: float = 0.0     # added per prior failure; 0 disables ramping

    def __post_init__(self):
        if not isinstance(self.power_db, (int, float)) or isinstance(self.power_db, bool) or not math.isfinite(self.power_db):
            raise ValueError(f"UeConfig.power_db must be finite, got {self.power_db!r}")
        if not isinstance(self.first_attempt_ro, int) or self.first_attempt_ro < 0:
            raise ValueError(f"UeConfig.first_attempt_ro must be a nonnegative int, got {self.first_attempt_ro!r}")
        if self.max_attempts is not None and (not isinstance(self.max_attempts, int) or self.max_attempts < 1):
            raise ValueError(f"UeConfig.max_attempts must be None or an int >= 1, got {self.max_attempts!r}")
        if not isinstance(self.ramp_step_db, (int, float)) or not math.isfinite(self.ramp_step_db) or self.ramp_step_db < 0:
            raise ValueError(f"UeConfig.ramp_step_db must be finite and >= 0, got {self.ramp_step_db!r}")


@dataclass(frozen=True)
class Scenario:
    """Complete experiment description."""

    detector: DetectorConfig
    attacker: AttackerConfig
    ue: UeConfig
    noise_db: float
    horizon: int                  # ROs recorded, numbered 0..horizon-1
    ue_contributes_to_measurement: bool = False

    def __post_init__(self):
        problems = []
        if not isinstance(self.noise_db, (int, float)) or isinstance(self.noise_db, bool) or not math.isfinite(self.noise_db):
            problems.append(f"noise_db must be finite, got {self.noise_db!r}")
        if not isinstance(self.horizon, int) or self.horizon < 1:
            problems.append(f"horizon must be an int >= 1, got {self.horizon!r}")
        elif self.horizon < self.ue.first_attempt_ro + 1:
            problems.append(
                f"horizon must be >= ue.first_attempt_ro + 1 "
                f"(horizon={self.horizon}, first_attempt_ro={self.ue.first_attempt_ro})"
            )
        if problems:
            raise ValueError("invalid scenario: " + "; ".join(problems))
        if self.attacker.enabled and isinstance(self.noise_db, (int, float)) and self.attacker.power_db <= self.noise_db:
            warnings.warn(
                f"attacker power {self.attacker.power_db} dB does not exceed the noise level "
                f"{self.noise_db} dB; the attack cannot raise the threshold",
                stacklevel=2,
            )

    @property
    def attack_start_ro(self) -> int:
        """RO of the attacker's first transmission (may be negative)."""
        return self.ue.first_attempt_ro - self.attacker.early_start


@dataclass(frozen=True)
class TraceRecord:
    """One recorded RO."""

    ro: int
    measured_db: float            # dominant received power folded into the recursion
    threshold_db: float           # threshold in force when this RO was evaluated
    attacker_tx: bool
    ue_attempt: bool
    ue_power_db: float | None     # attempt power incl. ramping; None when no attempt
    detected: bool                # always False when no attempt was made


@dataclass(frozen=True)
class ScenarioSummary:
    """Aggregates recomputable from the trace."""

    first_blocked_ro: int | None  # first attempt RO that failed detection
    access_success_rate: float    # detected attempts / attempts made
    final_threshold_db: float
    ros_to_block: int | None      # ROs from attack start until the base UE power is blocked


@dataclass(frozen=True)
class SweepResult:
    """Outcome of one sweep point; error holds the validation message when the value was rejected."""

    value: object
    summary: ScenarioSummary | None
    error: str | None = None


@dataclass(frozen=True)
class ComparisonReport:
    """Deviation between a simulated threshold trace and the analytic predictor."""

    max_abs_deviation_db: float
    mean_abs_deviation_db: float
    first_divergence_ro: int | None
    tolerance: float

    @property
    def within_tolerance(self) -> bool:
        return self.max_abs_deviation_db <= self.tolerance


def _attacker_transmits(s: Scenario, ro: int) -> bool:
    if not s.attacker.enabled:
        return False
    start = s.attack_start_ro
    return ro >= start and (ro - start) % s.attacker.period == 0


def run_scenario(s: Scenario) -> tuple[list[TraceRecord], ScenarioSummary]:
    """Simulate a scenario and return its recorded trace plus summary.

    The UE attempts at every RO from ``first_attempt_ro`` until
    ``max_attempts`` attempts have been made; a success does not stop the
    probing, so the trace maps the full per-RO access pattern. Each failure
    raises the next attempt's power by ``ramp_step_db``.
    """
    cfg = s.detector
    sim_start = min(0, s.attack_start_ro) if s.attacker.enabled else 0
    state: ThresholdState | None = None
    records: list[TraceRecord] = []
    attempts_made = 0
    failures = 0

    for ro in range(sim_start, s.horizon):
        ue_attempt = ro >= s.ue.first_attempt_ro and (
            s.ue.max_attempts is None or attempts_made < s.ue.max_attempts
        )
        attempt_power = s.ue.power_db + failures * s.ue.ramp_step_db if ue_attempt else None

        attacker_tx = _attacker_transmits(s, ro)
        measured = s.noise_db
        if attacker_tx:
            measured = max(measured, s.attacker.power_db)
        if ue_attempt and s.ue_contributes_to_measurement:
            measured = max(measured, attempt_power)

        if state is None:
            # First simulated RO: the configured initial threshold is in
            # force and no previous measurement exists for the beta slot.
            state = ThresholdState(0, cfg.initial_threshold_db, measured)
        else:
            state = update_threshold(state, cfg, measured)

        detected = False
        if ue_attempt:
            attempts_made += 1
            detected = detect_msg1(attempt_power, state.threshold_db, cfg.delta_db)
            if not detected:
                failures += 1

        if ro >= 0:
            records.append(
                TraceRecord(
                    ro=ro,
                    measured_db=measured,
                    threshold_db=state.threshold_db,
                    attacker_tx=attacker_tx,
                    ue_attempt=ue_attempt,
                    ue_power_db=attempt_power,
                    detected=detected,
                )
            )

    return records, _summarize(records, s)


def _summarize(records: list[TraceRecord], s: Scenario) -> ScenarioSummary:
    attempts = [r for r in records if r.ue_attempt]
    successes = sum(1 for r in attempts if r.detected)
    first_blocked = next((r.ro for r in attempts if not r.detected), None)

    ros_to_block = None
    if s.attacker.enabled:
        # Counted against the UE's base (unramped) power, from attack start.
        blocked = next(
            (r.ro for r in records if r.threshold_db + s.detector.delta_db >= s.ue.power_db),
            None,
        )
        if blocked is not None:
            ros_to_block = blocked - s.attack_start_ro

    return ScenarioSummary(
        first_blocked_ro=first_blocked,
        access_success_rate=successes / len(attempts),
        final_threshold_db=records[-1].threshold_db,
        ros_to_block=ros_to_block,
    )


def run_srsran_scenario(s: Scenario) -> tuple[list[TraceRecord], ScenarioSummary]:
    """run_scenario restricted to the memoryless preset.

    With (alpha=1, beta=0, gamma=0) the threshold tracks the latest
    measurement exactly, so an attacker RO spikes it for that RO only and
    it falls back to the noise level immediately after. Raises ValueError
    for any other detector configuration.
    """
    if not s.detector.is_memoryless:
        raise ValueError(
            "run_srsran_scenario requires the memoryless preset (alpha=1, beta=0, gamma=0); "
            f"got alpha={s.detector.alpha}, beta={s.detector.beta}, gamma={s.detector.gamma}"
        )
    return run_scenario(s)


# axis name -> function(base scenario, value) -> new scenario
def _with_period(s: Scenario, v) -> Scenario:
    return dataclasses.replace(s, attacker=dataclasses.replace(s.attacker, period=v))


def _with_attacker_power(s: Scenario, v) -> Scenario:
    return dataclasses.replace(s, attacker=dataclasses.replace(s.attacker, power_db=v))


def _with_early_start(s: Scenario, v) -> Scenario:
    return dataclasses.replace(s, attacker=dataclasses.replace(s.attacker, early_start=v))


def _with_beta(s: Scenario, v) -> Scenario:
    # Recursive-averaging family: alpha stays 0, gamma is re-derived as 1-beta.
    if not isinstance(v, (int, float)) or isinstance(v, bool) or not 0.0 <= v <= 1.0:
        raise ValueError(f"detector.beta sweep values must lie in [0, 1], got {v!r}")
    detector = DetectorConfig(
        alpha=0.0,
        beta=float(v),
        gamma=1.0 - float(v),
        delta_db=s.detector.delta_db,
        initial_threshold_db=s.detector.initial_threshold_db,
    )
    return dataclasses.replace(s, detector=detector)


def _with_delta(s: Scenario, v) -> Scenario:
    return dataclasses.replace(s, detector=dataclasses.replace(s.detector, delta_db=v))


def _with_ue_power(s: Scenario, v) -> Scenario:
    return dataclasses.replace(s, ue=dataclasses.replace(s.ue, power_db=v))


SWEEP_AXES = {
    "attacker.period": _with_period,
    "attacker.power": _with_attacker_power,
    "attacker.early_start": _with_early_start,
    "detector.beta": _with_beta,
    "detector.delta": _with_delta,
    "ue.power": _with_ue_power,
}


def scenario_with(base: Scenario, axis: str, value) -> Scenario:
    """Base scenario with one swept parameter substituted.

    ``detector.beta`` substitution re-derives gamma as 1-beta (and forces
    alpha to 0), keeping the config inside the recursive-averaging family.
    """
    try:
        build = SWEEP_AXES[axis]
    except KeyError:
        raise ValueError(f"unknown sweep axis {axis!r}; known: {sorted(SWEEP_AXES)}") from None
    return build(base, value)


def sweep(base: Scenario, axis: str, values: list) -> list[SweepResult]:
    """Run the base scenario once per axis value, preserving input order.

    A value that fails validation produces a result row carrying the error
    message instead of aborting the remaining values.
    """
    if axis not in SWEEP_AXES:
        raise ValueError(f"unknown sweep axis {axis!r}; known: {sorted(SWEEP_AXES)}")
    results = []
    for v in values:
        try:
            _, summary = run_scenario(scenario_with(base, axis, v))
        except ValueError as e:
            results.append(SweepResult(value=v, summary=None, error=str(e)))
        else:
            results.append(SweepResult(value=v, summary=summary, error=None))
    return results


def compare_with_analytic(s: Scenario, tolerance: float = 1e-9) -> ComparisonReport:
    """Deviation report: simulated thresholds vs the analytic predictor.

    The analytic side iterates the same recursion on the pure noise-or-
    attacker schedule, so any deviation comes from measurements the
    schedule does not model; with the UE contribution flag off the two
    traces agree exactly. first_divergence_ro is the first RO whose
    deviation exceeds the tolerance, or None.
    """
    records, _ = run_scenario(s)
    analytic = periodic_threshold_trace(
        s.horizon - 1,
        s.detector,
        s.attacker,
        s.noise_db,
        attack_start=s.attack_start_ro,
    )
    deviations = [abs(r.threshold_db - a) for r, a in zip(records, analytic)]
    first_divergence = next((i for i, d in enumerate(deviations) if d > tolerance), None)
    return ComparisonReport(
        max_abs_deviation_db=max(deviations),
        mean_abs_deviation_db=sum(deviations) / len(deviations),
        first_divergence_ro=first_divergence,
        tolerance=tolerance,
    )
