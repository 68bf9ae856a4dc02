"""Strict YAML scenario files.

A scenario file is a mapping with sections ``detector``, ``attacker``,
``ue``, ``noise``, and ``sim``. Parsing is strict: unknown keys are fatal
and reported by their dotted name, so a misspelled parameter can never
silently fall back to a default and skew an experiment.

Minimal example::

    detector:
      preset: oai(0.24)
      delta: 12
    attacker:
      period: 1
      power: 51
    ue:
      power: 56.4
    noise:
      level: 17.4
    sim:
      horizon: 64

The detector is configured either through ``preset`` (``srsran`` or
``oai(<beta>)``) or through explicit ``alpha``, ``beta``, ``gamma``
weights; the two forms are mutually exclusive. ``p_th_init`` defaults to
the noise level. Omitting the ``attacker`` section disables the attacker.
"""

from __future__ import annotations

import math
from pathlib import Path

import yaml

from .core import AttackerConfig, DetectorConfig, detector_preset
from .sim import Scenario, UeConfig

__all__ = ["ScenarioFileError", "load_scenario", "scenario_from_mapping"]

_SECTIONS = {"detector", "attacker", "ue", "noise", "sim"}
_SECTION_KEYS = {
    "detector": {"preset", "alpha", "beta", "gamma", "delta", "p_th_init"},
    "attacker": {"enabled", "period", "power", "early_start"},
    "ue": {"power", "first_attempt_ro", "max_attempts", "ramp_step"},
    "noise": {"level"},
    "sim": {"horizon", "ue_contributes_to_measurement"},
}


class ScenarioFileError(ValueError):
    """A scenario file failed strict parsing or validation."""


def _as_float(dotted: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioFileError(f"{dotted} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ScenarioFileError(f"{dotted} must be finite, got {value!r}")
    return float(value)


def _as_int(dotted: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioFileError(f"{dotted} must be an integer, got {value!r}")
    return value


def _as_bool(dotted: str, value) -> bool:
    if not isinstance(value, bool):
        raise ScenarioFileError(f"{dotted} must be a boolean, got {value!r}")
    return value


def _require(section: dict, sname: str, key: str):
    if key not in section:
        raise ScenarioFileError(f"missing required key: {sname}.{key}")
    return section[key]


def _check_keys(prefix: str, mapping: dict, allowed: set):
    unknown = sorted(str(k) for k in mapping if k not in allowed)
    if unknown:
        dotted = [f"{prefix}{k}" for k in unknown]
        label = "keys" if len(dotted) > 1 else "key"
        raise ScenarioFileError(f"unknown {label}: {', '.join(dotted)}")


def _section(data: dict, name: str, required: bool) -> dict:
    if name not in data:
        if required:
            raise ScenarioFileError(f"missing required section: {name}")
        return {}
    value = data[name]
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise ScenarioFileError(f"{name} must be a mapping of keys to values")
    _check_keys(f"{name}.", value, _SECTION_KEYS[name])
    return value


def _parse_detector(d: dict, noise_level: float) -> DetectorConfig:
    delta = _as_float("detector.delta", _require(d, "detector", "delta"))
    p_th_init = (
        _as_float("detector.p_th_init", d["p_th_init"]) if "p_th_init" in d else noise_level
    )

    preset = d.get("preset")
    explicit = [k for k in ("alpha", "beta", "gamma") if k in d]
    if preset is not None and explicit:
        raise ScenarioFileError(
            "detector.preset is mutually exclusive with explicit weights "
            f"({', '.join('detector.' + k for k in explicit)})"
        )
    if preset is not None:
        if not isinstance(preset, str):
            raise ScenarioFileError(f"detector.preset must be a string, got {preset!r}")
        try:
            return detector_preset(preset, delta_db=delta, initial_threshold_db=p_th_init)
        except ValueError as e:
            raise ScenarioFileError(f"detector.preset: {e}") from None

    missing = sorted({"alpha", "beta", "gamma"} - set(explicit))
    if missing:
        raise ScenarioFileError(
            "detector needs either preset or all of alpha, beta, gamma; missing: "
            + ", ".join(f"detector.{k}" for k in missing)
        )
    try:
        return DetectorConfig(
            alpha=_as_float("detector.alpha", d["alpha"]),
            beta=_as_float("detector.beta", d["beta"]),
            gamma=_as_float("detector.gamma", d["gamma"]),
            delta_db=delta,
            initial_threshold_db=p_th_init,
        )
    except ScenarioFileError:
        raise
    except ValueError as e:
        raise ScenarioFileError(f"detector: {e}") from None


def _parse_attacker(a: dict, present: bool, noise_level: float) -> AttackerConfig:
    if not present:
        return AttackerConfig(period=1, power_db=noise_level, early_start=0, enabled=False)
    enabled = _as_bool("attacker.enabled", a["enabled"]) if "enabled" in a else True
    if enabled:
        period = _as_int("attacker.period", _require(a, "attacker", "period"))
        power = _as_float("attacker.power", _require(a, "attacker", "power"))
    else:
        period = _as_int("attacker.period", a["period"]) if "period" in a else 1
        power = _as_float("attacker.power", a["power"]) if "power" in a else noise_level
    early_start = _as_int("attacker.early_start", a["early_start"]) if "early_start" in a else 0
    try:
        return AttackerConfig(period=period, power_db=power, early_start=early_start, enabled=enabled)
    except ValueError as e:
        raise ScenarioFileError(f"attacker: {e}") from None


def _parse_ue(u: dict) -> UeConfig:
    power = _as_float("ue.power", _require(u, "ue", "power"))
    first = _as_int("ue.first_attempt_ro", u["first_attempt_ro"]) if "first_attempt_ro" in u else 0
    max_attempts = _as_int("ue.max_attempts", u["max_attempts"]) if "max_attempts" in u else None
    ramp = _as_float("ue.ramp_step", u["ramp_step"]) if "ramp_step" in u else 0.0
    try:
        return UeConfig(
            power_db=power,
            first_attempt_ro=first,
            max_attempts=max_attempts,
            ramp_step_db=ramp,
        )
    except ValueError as e:
        raise ScenarioFileError(f"ue: {e}") from None


def scenario_from_mapping(data) -> Scenario:
    """Build a Scenario from an already-parsed mapping, strictly."""
    if not isinstance(data, dict):
        raise ScenarioFileError("scenario file must be a mapping of sections")
    _check_keys("", data, _SECTIONS)

    noise = _section(data, "noise", required=True)
    noise_level = _as_float("noise.level", _require(noise, "noise", "level"))

    detector = _parse_detector(_section(data, "detector", required=True), noise_level)
    attacker = _parse_attacker(_section(data, "attacker", required=False), "attacker" in data, noise_level)
    ue = _parse_ue(_section(data, "ue", required=True))

    sim = _section(data, "sim", required=False)
    horizon = _as_int("sim.horizon", sim["horizon"]) if "horizon" in sim else 64
    contributes = (
        _as_bool("sim.ue_contributes_to_measurement", sim["ue_contributes_to_measurement"])
        if "ue_contributes_to_measurement" in sim
        else False
    )

    try:
        return Scenario(
            detector=detector,
            attacker=attacker,
            ue=ue,
            noise_db=noise_level,
            horizon=horizon,
            ue_contributes_to_measurement=contributes,
        )
    except ValueError as e:
        raise ScenarioFileError(str(e)) from None


def load_scenario(path) -> Scenario:
    """Read, parse, and validate a scenario file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ScenarioFileError(f"cannot read scenario file {path}: {e}") from None
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ScenarioFileError(f"scenario file {path} is not valid YAML: {e}") from None
    return scenario_from_mapping(data)
