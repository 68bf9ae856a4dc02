"""gNB preamble-detector primitives.

The gNB keeps a running noise-threshold estimate for Msg1 detection and
updates it once per random-access occasion (RO) from received-power
measurements:

    threshold[i] = alpha * measured[i] + beta * measured[i-1] + gamma * threshold[i-1]

A preamble is detected only if its received power strictly exceeds the
threshold plus a fixed detection margin. All power values are dB-scale
detector metric units and the recursion is applied to them directly (no
linear-power conversion); this is the domain in which the geometric-series
behavior of the threshold holds.

Two stack presets are provided: the memoryless instantaneous update
(alpha=1, beta=0, gamma=0) and the recursive-averaging family
(alpha=0, gamma=1-beta).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

__all__ = [
    "DetectorConfig",
    "ThresholdState",
    "AttackerConfig",
    "update_threshold",
    "detect_msg1",
    "measured_power",
    "detector_preset",
    "preset_catalog",
]


def _require_finite(name: str, value: float) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
        raise ValueError(f"{name} must be a finite number, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class DetectorConfig:
    """Threshold-update weights and detection parameters of the gNB."""

    alpha: float                  # weight on the current measurement
    beta: float                   # weight on the previous measurement
    gamma: float                  # forgetting factor on the previous threshold
    delta_db: float               # detection margin above the threshold, dB
    initial_threshold_db: float   # threshold in force before any update, dB

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta_db", "initial_threshold_db"):
            _require_finite(f"DetectorConfig.{name}", getattr(self, name))
        if self.alpha < 0 or self.beta < 0 or self.gamma < 0:
            raise ValueError("DetectorConfig weights alpha, beta, gamma must be >= 0")
        if self.delta_db < 0:
            raise ValueError("DetectorConfig.delta_db must be >= 0")

    @property
    def is_memoryless(self) -> bool:
        """True for the instantaneous-update preset (1, 0, 0)."""
        return self.alpha == 1.0 and self.beta == 0.0 and self.gamma == 0.0


@dataclass(frozen=True)
class ThresholdState:
    """Recursion state after ``ro_index`` threshold updates."""

    ro_index: int                 # number of updates applied so far
    threshold_db: float           # current threshold
    prev_measured_db: float       # measurement consumed by the next update's beta term

    def __post_init__(self):
        if not isinstance(self.ro_index, int) or self.ro_index < 0:
            raise ValueError(f"ThresholdState.ro_index must be a nonnegative int, got {self.ro_index!r}")
        _require_finite("ThresholdState.threshold_db", self.threshold_db)
        _require_finite("ThresholdState.prev_measured_db", self.prev_measured_db)


@dataclass(frozen=True)
class AttackerConfig:
    """Periodic Msg1 attacker: one preamble every ``period`` ROs."""

    period: int                   # ROs between consecutive attacker preambles
    power_db: float               # received attacker power metric at the gNB
    early_start: int = 0          # ROs the attacker starts before the UE's first attempt
    enabled: bool = True

    def __post_init__(self):
        if not isinstance(self.period, int) or self.period < 1:
            raise ValueError(f"AttackerConfig.period must be an int >= 1, got {self.period!r}")
        if not isinstance(self.early_start, int) or self.early_start < 0:
            raise ValueError(f"AttackerConfig.early_start must be a nonnegative int, got {self.early_start!r}")
        _require_finite("AttackerConfig.power_db", self.power_db)


def update_threshold(state: ThresholdState, cfg: DetectorConfig, measured_db: float) -> ThresholdState:
    """Apply one threshold update and return the successor state.

    The new threshold is ``alpha*measured + beta*prev_measured + gamma*threshold``;
    the measurement is retained for the next update's beta term.
    """
    m = _require_finite("measured_db", measured_db)
    return ThresholdState(
        ro_index=state.ro_index + 1,
        threshold_db=cfg.alpha * m + cfg.beta * state.prev_measured_db + cfg.gamma * state.threshold_db,
        prev_measured_db=m,
    )


def detect_msg1(ue_power_db: float, threshold_db: float, delta_db: float) -> bool:
    """Msg1 detection decision: strictly above threshold plus margin.

    Equality counts as a miss; the comparison is strict.
    """
    p = _require_finite("ue_power_db", ue_power_db)
    t = _require_finite("threshold_db", threshold_db)
    d = _require_finite("delta_db", delta_db)
    return p > t + d

def measured_power(ro_index: int, attacker: AttackerConfig, noise_db: float) -> float:
    """Measured power at an RO of the periodic pre-attempt attack schedule.

    The schedule is 1-based in the attack frame: the attacker's first
    preamble lands at ro_index 1 and repeats every ``period`` ROs; every
    other RO (including ro_index 0) measures the background noise level.
    Returns the attacker power on attack ROs regardless of its relation to
    the noise level.
    """
    if not isinstance(ro_index, int) or ro_index < 0:
        raise ValueError(f"ro_index must be a nonnegative int, got {ro_index!r}")
    noise = _require_finite("noise_db", noise_db)
    if attacker.enabled and ro_index > 0 and (ro_index - 1) % attacker.period == 0:
        return attacker.power_db
    return noise


# (alpha, beta, gamma) per named preset; oai's beta is caller-supplied.
_PRESETS = {
    "srsran": "instantaneous update: threshold copies the latest measurement (alpha=1, beta=0, gamma=0)",
    "oai": "recursive averaging: alpha=0, gamma=1-beta, beta supplied by the caller in [0, 1]",
}

_OAI_CALL = re.compile(r"^oai\(\s*([^)]+?)\s*\)$")


def preset_catalog() -> dict[str, str]:
    """Known preset names mapped to a one-line description."""
    return dict(_PRESETS)


def detector_preset(
    name: str,
    beta: float | None = None,
    *,
    delta_db: float,
    initial_threshold_db: float,
) -> DetectorConfig:
    """Build a DetectorConfig from a named stack preset.

    ``name`` is ``"srsran"`` or ``"oai"`` (the latter needs ``beta`` in
    [0, 1], either as the argument or inline as ``"oai(0.24)"``). The
    detection margin and initial threshold are deployment parameters, not
    part of the preset, so the caller always supplies them.
    """
    key = name.strip().lower()
    inline = _OAI_CALL.match(key)
    if inline:
        if beta is not None:
            raise ValueError("beta given both inline and as an argument")
        try:
            beta = float(inline.group(1))
        except ValueError:
            raise ValueError(f"unparseable beta in preset name {name!r}") from None
        key = "oai"

    if key == "srsran":
        if beta is not None:
            raise ValueError("the srsran preset takes no beta")
        alpha, b, gamma = 1.0, 0.0, 0.0
    elif key == "oai":
        if beta is None:
            raise ValueError("the oai preset needs beta")
        b = _require_finite("beta", beta)
        if not 0.0 <= b <= 1.0:
            raise ValueError(f"oai beta must lie in [0, 1], got {b}")
        alpha, gamma = 0.0, 1.0 - b
    else:
        raise ValueError(f"unknown detector preset {name!r}; known: {sorted(_PRESETS)}")

    return DetectorConfig(
        alpha=alpha,
        beta=b,
        gamma=gamma,
        delta_db=delta_db,
        initial_threshold_db=initial_threshold_db,
    )
