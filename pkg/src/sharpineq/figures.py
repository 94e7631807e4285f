"""Matplotlib renderings of probe curves and verification summaries.

The Agg backend is forced at import time; every figure goes straight to
a file.  The CLI renders these next to a report written with --output,
never when reports go to stdout.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["probe_figure", "summary_figure"]

_PASS = "#2a7f4f"
_FAIL = "#c0392b"
_BOUND = "#8a4f10"


def probe_figure(probe, path) -> None:
    """Ratio-versus-width curve for one operator probe."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2), dpi=130)
    color = _PASS if probe.passed else _FAIL
    ax.plot(probe.widths, probe.ratios, "o-", color=color, label="probe ratio")
    ax.axhline(probe.bound, linestyle="--", color=_BOUND, label="closed form")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("indicator half-width in u = ln t")
    ax.set_ylabel("output to input norm ratio")
    ax.set_title(probe.check_id, fontsize=9)
    ax.text(0.02, 0.96,
            f"final fraction {probe.final_fraction:.4f}",
            transform=ax.transAxes, va="top", fontsize=9)
    ax.legend(loc="lower right", fontsize=9)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def summary_figure(reports, path) -> None:
    """One strip per check family: observed error or slack by report.

    Bound-style checks park their slack in rel_err, so dots well to the
    right of the tolerance cloud are expected there; color carries the
    verdict.
    """
    families = sorted({r.check_id.split("[")[0] for r in reports})
    index = {fam: i for i, fam in enumerate(families)}
    floor = 1e-17
    xs = np.array([max(r.rel_err, floor) for r in reports])
    xs = np.where(np.isfinite(xs), xs, 1.0)
    ys = np.array([index[r.check_id.split("[")[0]] for r in reports],
                  dtype=float)
    # spread coincident dots inside a strip, deterministically
    ys += 0.28 * np.sin(7.13 * np.arange(len(reports)))
    colors = [_PASS if r.passed else _FAIL for r in reports]

    height = 1.2 + 0.42 * len(families)
    fig, ax = plt.subplots(figsize=(7.5, height), dpi=130)
    ax.scatter(xs, ys, s=18, c=colors, alpha=0.75, linewidths=0)
    ax.set_xscale("log")
    ax.set_xlim(floor / 2, max(xs.max() * 5, 1.0))
    ax.set_yticks(range(len(families)))
    ax.set_yticklabels(families, fontsize=8)
    ax.set_xlabel("observed relative error (bound checks: slack)")
    ax.invert_yaxis()
    passed = sum(r.passed for r in reports)
    ax.set_title(f"{passed} of {len(reports)} checks passed", fontsize=10)
    ax.grid(axis="x", which="major", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
