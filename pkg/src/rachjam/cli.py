"""Command-line front end.

Subcommands:

* ``simulate``: run one scenario file, write the trace CSV, print summary metrics.
* ``sweep``: rerun a scenario across a parameter axis, one trace CSV per value plus a summary CSV.
* ``compare``: check the simulated threshold trace against the analytic predictor.
* ``plot``: render a trace CSV to a deterministic SVG.
* ``presets``: list the built-in detector presets.

Exit codes: 0 success, 1 comparison outside tolerance, 2 input error
(bad arguments, unreadable or invalid scenario/trace files), 3 output I/O
error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analytic import periodic_threshold_trace
from .core import preset_catalog
from .scenario_file import ScenarioFileError, load_scenario
from .sim import SWEEP_AXES, Scenario, ScenarioSummary, run_scenario, scenario_with, compare_with_analytic
from .trace_csv import TraceCsvError, read_trace_csv, write_trace_csv

__all__ = ["main"]

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_INPUT = 2
EXIT_IO = 3

_AXIS_ALIASES = {
    "period": "attacker.period",
    "early_start": "attacker.early_start",
    "beta": "detector.beta",
    "delta": "detector.delta",
}
_INT_AXES = {"attacker.period", "attacker.early_start"}


class _InputError(Exception):
    pass


def _fmt_opt(value) -> str:
    return "none" if value is None else str(value)


def _print_summary(summary: ScenarioSummary) -> None:
    print(f"access_success_rate={summary.access_success_rate:.6f}")
    print(f"first_blocked_ro={_fmt_opt(summary.first_blocked_ro)}")
    print(f"ros_to_block={_fmt_opt(summary.ros_to_block)}")
    print(f"final_threshold_db={summary.final_threshold_db:.6f}")


def _analytic_column(s: Scenario) -> list[float]:
    return periodic_threshold_trace(
        s.horizon - 1, s.detector, s.attacker, s.noise_db, attack_start=s.attack_start_ro
    )


def _canonical_axis(name: str) -> str:
    if name in SWEEP_AXES:
        return name
    if name in _AXIS_ALIASES:
        return _AXIS_ALIASES[name]
    if name == "power":
        raise _InputError("axis 'power' is ambiguous; use attacker.power or ue.power")
    raise _InputError(
        f"unknown sweep axis {name!r}; known: {', '.join(sorted(SWEEP_AXES))} "
        f"(shorthands: {', '.join(sorted(_AXIS_ALIASES))})"
    )


def _parse_values(axis: str, text: str) -> list:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise _InputError("no sweep values given")
    cast = int if axis in _INT_AXES else float
    values = []
    for token in tokens:
        try:
            values.append(cast(token))
        except ValueError:
            kind = "an integer" if cast is int else "a number"
            raise _InputError(f"sweep value {token!r} is not {kind}") from None
    return values


def _cmd_simulate(args) -> int:
    scenario = load_scenario(args.scenario)
    records, summary = run_scenario(scenario)
    write_trace_csv(args.output, records, _analytic_column(scenario))
    _print_summary(summary)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    base = load_scenario(args.scenario)
    axis = _canonical_axis(args.axis)
    values = _parse_values(axis, args.values)

    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    axis_slug = axis.replace(".", "_")
    rows = []
    had_errors = False
    for value in values:
        try:
            scenario = scenario_with(base, axis, value)
            records, summary = run_scenario(scenario)
        except ValueError as e:
            print(f"error: {axis}={value}: {e}", file=sys.stderr)
            rows.append((value, None))
            had_errors = True
            continue
        write_trace_csv(out_dir / f"trace_{axis_slug}_{value}.csv", records, _analytic_column(scenario))
        rows.append((value, summary))
        print(f"{axis}={value}: access_success_rate={summary.access_success_rate:.6f}")

    with open(out_dir / "summary.csv", "w", encoding="utf-8", newline="") as fh:
        fh.write("value,access_success_rate,first_blocked_ro,ros_to_block,final_threshold_db\n")
        for value, summary in rows:
            if summary is None:
                fh.write(f"{value},,,,\n")
            else:
                fh.write(
                    f"{value},{summary.access_success_rate:.6f},"
                    f"{'' if summary.first_blocked_ro is None else summary.first_blocked_ro},"
                    f"{'' if summary.ros_to_block is None else summary.ros_to_block},"
                    f"{summary.final_threshold_db:.6f}\n"
                )
    return EXIT_INPUT if had_errors else EXIT_OK


def _cmd_compare(args) -> int:
    scenario = load_scenario(args.scenario)
    report = compare_with_analytic(scenario)
    print(f"max_abs_deviation_db={report.max_abs_deviation_db:.12g}")
    print(f"mean_abs_deviation_db={report.mean_abs_deviation_db:.12g}")
    print(f"first_divergence_ro={_fmt_opt(report.first_divergence_ro)}")
    print(f"tolerance={report.tolerance:.12g}")
    if report.within_tolerance:
        print("within tolerance")
        return EXIT_OK
    print("tolerance exceeded")
    return EXIT_TOLERANCE


def _cmd_plot(args) -> int:
    # Imported here so the matplotlib stack only loads when actually plotting.
    from .plotting import render_trace_plot

    records, analytic = read_trace_csv(args.trace)
    render_trace_plot(records, analytic, args.output)
    return EXIT_OK


def _cmd_presets(args) -> int:
    for name, description in sorted(preset_catalog().items()):
        print(f"{name}: {description}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rachjam",
        description="Deterministic simulator for Msg1 preamble jamming of the 5G random-access channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a scenario and write its trace CSV")
    p.add_argument("scenario", help="scenario YAML file")
    p.add_argument("-o", "--output", required=True, help="trace CSV output path")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("sweep", help="rerun a scenario across a parameter axis")
    p.add_argument("scenario", help="scenario YAML file")
    p.add_argument("--axis", required=True, help="parameter to sweep, e.g. attacker.period or beta")
    p.add_argument("--values", required=True, help="comma-separated axis values, e.g. 1,2,16")
    p.add_argument("-o", "--output-dir", required=True, help="directory for trace and summary CSVs")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("compare", help="check simulated thresholds against the analytic predictor")
    p.add_argument("scenario", help="scenario YAML file")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("plot", help="render a trace CSV to SVG")
    p.add_argument("trace", help="trace CSV produced by simulate or sweep")
    p.add_argument("-o", "--output", required=True, help="SVG output path")
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser("presets", help="list detector presets")
    p.set_defaults(func=_cmd_presets)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help; keep its code.
        return int(e.code or 0)
    try:
        return args.func(args)
    except (ScenarioFileError, TraceCsvError, _InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
