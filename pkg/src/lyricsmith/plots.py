"""Render evaluation reports as figures saved next to the report files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .metrics import EvaluationReport

_RATIO_METRICS = [
    ("rhyme_score", "rhyme score"),
    ("end_word_accuracy", "end word accuracy"),
]
_RMSE_METRICS = [
    ("lexical_diversity_rmse", "lexical diversity"),
    ("syllable_rmse", "syllables"),
]


def render_report_figure(report: EvaluationReport, path: str | Path) -> Path:
    """One summary card per report: BLEU, the two ratio metrics, the two RMSEs."""
    values = report.metric_values()
    fig, axes = plt.subplots(1, 3, figsize=(9.5, 3.2))

    axes[0].bar(["BLEU"], [values["bleu"]], color="#4878b0")
    axes[0].set_ylim(0, 100)
    axes[0].set_title("BLEU (0-100)")
    axes[0].text(0, values["bleu"], f"{values['bleu']:.2f}", ha="center", va="bottom")

    names = [label for _, label in _RATIO_METRICS]
    ratio_vals = [values[key] for key, _ in _RATIO_METRICS]
    axes[1].bar(names, ratio_vals, color="#6aa56a")
    axes[1].set_ylim(0, 1.05)
    axes[1].set_title("ratios (0-1)")
    for x, v in enumerate(ratio_vals):
        axes[1].text(x, v, f"{v:.3f}", ha="center", va="bottom")

    names = [label for _, label in _RMSE_METRICS]
    rmse_vals = [values[key] for key, _ in _RMSE_METRICS]
    axes[2].bar(names, rmse_vals, color="#b0684a")
    axes[2].set_ylim(0, max(1.0, max(rmse_vals) * 1.2))
    axes[2].set_title("RMSE (lower is better)")
    for x, v in enumerate(rmse_vals):
        axes[2].text(x, v, f"{v:.3f}", ha="center", va="bottom")

    fig.suptitle(f"{report.backend_id} on {report.dataset_id} (n={report.n_examples})")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
