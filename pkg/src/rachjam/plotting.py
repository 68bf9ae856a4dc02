"""Deterministic SVG rendering of trace files.

Two stacked panels: threshold evolution (simulated and analytic) over the
RO axis, and the per-attempt detection outcome underneath. Output is a
self-contained SVG; identical inputs produce byte-identical files, which
makes plots diffable and cacheable.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .sim import TraceRecord

__all__ = ["render_trace_plot"]


def render_trace_plot(records: list[TraceRecord], analytic: list[float], out_path) -> None:
    """Render a parsed trace to ``out_path`` as SVG."""
    ros = [r.ro for r in records]
    thresholds = [r.threshold_db for r in records]
    attempt_ros = [r.ro for r in records if r.ue_attempt]
    outcomes = [1 if r.detected else 0 for r in records if r.ue_attempt]

    # Fixed hash salt keeps matplotlib's internal SVG ids stable run-to-run.
    with plt.rc_context({"svg.hashsalt": "rachjam"}):
        fig, (ax_th, ax_ps) = plt.subplots(
            2, 1, sharex=True, figsize=(8, 6), height_ratios=[3, 1]
        )

        ax_th.plot(ros, thresholds, label="threshold", color="tab:red", drawstyle="steps-post")
        ax_th.plot(
            ros,
            analytic,
            label="analytic threshold",
            color="tab:blue",
            linestyle="--",
            drawstyle="steps-post",
        )
        ax_th.set_ylabel("power metric (dB)")
        ax_th.legend(loc="lower right")
        ax_th.grid(True, alpha=0.3)

        if attempt_ros:
            ax_ps.plot(attempt_ros, outcomes, color="tab:green", marker="o", linestyle="none", markersize=3)
        ax_ps.set_ylim(-0.15, 1.15)
        ax_ps.set_yticks([0, 1])
        ax_ps.set_yticklabels(["blocked", "detected"])
        ax_ps.set_xlabel("random-access occasion")
        ax_ps.grid(True, alpha=0.3)

        fig.tight_layout()
        try:
            # Date metadata would otherwise embed the render time.
            fig.savefig(out_path, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
