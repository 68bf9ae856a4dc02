"""Deterministic simulator and analytical toolkit for Msg1 preamble jamming
of the 5G random-access channel.

The gNB's adaptive noise threshold is modeled as a three-weight recursion
over per-RO power measurements; a periodic attacker injects high-power
preambles to drag the threshold above what a legitimate UE can clear.
``rachjam.core`` holds the primitives, ``rachjam.analytic`` the closed-form
predictors, ``rachjam.sim`` the scenario engine, and ``rachjam.cli`` the
command-line harness.
"""

from .analytic import (
    multi_attempt_success,
    periodic_threshold_trace,
    predict_success,
    steady_state,
    threshold_closed_form,
)
from .core import (
    AttackerConfig,
    DetectorConfig,
    ThresholdState,
    detect_msg1,
    detector_preset,
    measured_power,
    preset_catalog,
    update_threshold,
)
from .scenario_file import ScenarioFileError, load_scenario, scenario_from_mapping
from .sim import (
    ComparisonReport,
    Scenario,
    ScenarioSummary,
    SweepResult,
    TraceRecord,
    UeConfig,
    compare_with_analytic,
    run_scenario,
    run_srsran_scenario,
    scenario_with,
    sweep,
)
from .trace_csv import TRACE_CSV_HEADER, TraceCsvError, read_trace_csv, write_trace_csv

__version__ = "0.1.0"

__all__ = [
    "AttackerConfig",
    "ComparisonReport",
    "DetectorConfig",
    "Scenario",
    "ScenarioFileError",
    "ScenarioSummary",
    "SweepResult",
    "ThresholdState",
    "TraceCsvError",
    "TraceRecord",
    "TRACE_CSV_HEADER",
    "UeConfig",
    "compare_with_analytic",
    "detect_msg1",
    "detector_preset",
    "load_scenario",
    "measured_power",
    "multi_attempt_success",
    "periodic_threshold_trace",
    "predict_success",
    "preset_catalog",
    "read_trace_csv",
    "run_scenario",
    "run_srsran_scenario",
    "scenario_from_mapping",
    "scenario_with",
    "steady_state",
    "sweep",
    "threshold_closed_form",
    "update_threshold",
    "write_trace_csv",
    "__version__",
]
