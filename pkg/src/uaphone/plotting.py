"""Figures written next to the text reports (PNG, non-interactive backend)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .index import ENDING_LABELS, FrequencyReport, OptimizationReport  # noqa: E402

RC = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "figure.figsize": (6.0, 3.6),
}


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_power_law(report: FrequencyReport, path: Path) -> Path:
    """Observed per-mille rate against the 2*pi*n^-e model, log-log."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        rows = sorted(report.power_law)
        n = [r[0] for r in rows]
        ax.loglog(n, [r[1] for r in rows], "-", label="observed")
        ax.loglog(n, [r[2] for r in rows], ":", label=r"$2\pi n^{-e}$")
        ax.set_xlabel("surnames sharing one occurrence count, n")
        ax.set_ylabel("frequency, ‰")
        ax.legend(frameon=False)
        return _save(fig, path)


def plot_endings(report: FrequencyReport, path: Path) -> Path:
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        codes = list(report.endings)
        ax.bar(range(len(codes)), [report.endings[c] for c in codes], color="0.4")
        ax.set_xticks(range(len(codes)))
        ax.set_xticklabels([f"-{ENDING_LABELS[c].split('|')[0]}" for c in codes], rotation=60)
        ax.set_ylabel("records")
        return _save(fig, path)


def plot_rule_times(timings, path: Path) -> Path:
    """Horizontal bars, slowest stage on top."""
    with plt.rc_context(RC):
        rows = sorted(timings, key=lambda t: t.seconds)
        fig, ax = plt.subplots(figsize=(6.0, max(3.0, 0.18 * len(rows))))
        ax.barh(range(len(rows)), [t.seconds * 1000 for t in rows], color="0.4")
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels([f"{t.step}: {t.label}" for t in rows], fontsize=6)
        ax.set_xlabel("ms over corpus")
        return _save(fig, path)


def plot_gain(reports: list[OptimizationReport], path: Path) -> Path:
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        labels, values = [], []
        for r in reports:
            labels += [f"{r.sample}\nnumber", f"{r.sample}\nvolume"]
            values += [r.k_num, r.k_vol]
        ax.bar(range(len(values)), values, color="0.4")
        ax.set_xticks(range(len(values)))
        ax.set_xticklabels(labels)
        ax.set_ylim(0, 100)
        ax.set_ylabel("optimization coefficient, %")
        return _save(fig, path)
