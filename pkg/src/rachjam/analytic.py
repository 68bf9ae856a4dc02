"""Closed-form threshold evolution and access-success prediction.

For an attacker transmitting on every RO the update recursion telescopes
into a geometric series, which gives the threshold after i updates and its
steady-state limit without running the simulator. For periodic attacks the
same recursion is iterated directly on the deterministic measurement
schedule. These results are the oracle half of simulator/analytic
cross-checks.
"""

from __future__ import annotations

from .core import AttackerConfig, DetectorConfig, ThresholdState, update_threshold

__all__ = [
    "threshold_closed_form",
    "steady_state",
    "periodic_threshold_trace",
    "predict_success",
    "multi_attempt_success",
]


def threshold_closed_form(i: int, cfg: DetectorConfig, attacker_power_db: float) -> float:
    """Threshold after ``i`` updates under a continuous (every-RO) attack.

    Evaluates

        gamma**i * initial + (alpha + beta) * p_att * (1 - gamma**i) / (1 - gamma)

    with the gamma == 1 limit handled as the linear ramp
    ``initial + i * (alpha + beta) * p_att``. ``i = 0`` returns the initial
    threshold. Both measurement slots see the attack, so the first update
    already uses attacker power in the beta term.
    """
    if not isinstance(i, int) or i < 0:
        raise ValueError(f"i must be a nonnegative int, got {i!r}")
    g = cfg.gamma
    if g == 1.0:
        return cfg.initial_threshold_db + i * (cfg.alpha + cfg.beta) * attacker_power_db
    gi = g**i
    return gi * cfg.initial_threshold_db + (cfg.alpha + cfg.beta) * attacker_power_db * (1.0 - gi) / (1.0 - g)


def steady_state(cfg: DetectorConfig, attacker_power_db: float) -> float:
    """Limit of the continuous-attack threshold, ``(alpha+beta)*p_att/(1-gamma)``.

    Defined for 0 <= gamma < 1; other gamma values do not converge and
    raise ValueError.
    """
    if not 0.0 <= cfg.gamma < 1.0:
        raise ValueError(f"steady state requires 0 <= gamma < 1, got gamma={cfg.gamma}")
    return (cfg.alpha + cfg.beta) * attacker_power_db / (1.0 - cfg.gamma)


def periodic_threshold_trace(
    horizon: int,
    cfg: DetectorConfig,
    attacker: AttackerConfig,
    noise_db: float,
    attack_start: int = 0,
) -> list[float]:
    """Thresholds in force at ROs 0..horizon under a periodic attack.

    The attacker (when enabled) transmits at ROs ``attack_start + k*period``
    for k >= 0; every other RO measures noise. Entry 0 is the configured
    initial threshold; entry i (i >= 1) is the threshold after folding in
    the RO-i measurement, i.e. the value a detection at RO i is compared
    against. A negative ``attack_start`` means the attack was already
    running before RO 0: those warm-up updates are applied but not
    recorded.
    """
    if not isinstance(horizon, int) or horizon < 0:
        raise ValueError(f"horizon must be a nonnegative int, got {horizon!r}")
    if not isinstance(attack_start, int):
        raise ValueError(f"attack_start must be an int, got {attack_start!r}")

    def measured(ro: int) -> float:
        if attacker.enabled and ro >= attack_start and (ro - attack_start) % attacker.period == 0:
            return max(noise_db, attacker.power_db)
        return noise_db

    start = min(0, attack_start) if attacker.enabled else 0
    state = ThresholdState(
        ro_index=0,
        threshold_db=cfg.initial_threshold_db,
        # No RO precedes the first; seed the beta slot with its own measurement.
        prev_measured_db=measured(start),
    )
    trace = [cfg.initial_threshold_db] if start == 0 else []
    for ro in range(start + 1, horizon + 1):
        state = update_threshold(state, cfg, measured(ro))
        if ro >= 0:
            trace.append(state.threshold_db)
    return trace


def predict_success(ue_power_db: float, thresholds: list[float], delta_db: float) -> list[int]:
    """Per-RO success indicators for a fixed-power UE against a threshold trace.

    Entry i is 1 when ``ue_power_db`` strictly exceeds ``thresholds[i] +
    delta_db``, else 0.
    """
    return [1 if ue_power_db > t + delta_db else 0 for t in thresholds]


def multi_attempt_success(attempt_powers: list[float], thresholds: list[float], delta_db: float) -> int:
    """Joint success indicator for a deterministic multi-attempt procedure.

    Each attempt i is made at the threshold ``thresholds[i]``; the overall
    outcome is the product of the per-attempt indicators, so it is 1 only
    when every attempt individually succeeds. Lengths must match.
    """
    if len(attempt_powers) != len(thresholds):
        raise ValueError(
            f"attempt_powers and thresholds must have equal length, got {len(attempt_powers)} and {len(thresholds)}"
        )
    result = 1
    for p, t in zip(attempt_powers, thresholds):
        result *= 1 if p > t + delta_db else 0
    return result
