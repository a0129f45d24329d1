"""Heatmap rendering of a similarity matrix."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_similarity(matrix, path, title: str = "normalized similarity") -> Path:
    n = len(matrix.ids)
    size = max(4.0, 0.4 * n + 2)
    fig, ax = plt.subplots(figsize=(size, size * 0.85))
    try:
        im = ax.imshow(matrix.values, cmap="viridis")
        ax.set_xticks(range(n), labels=matrix.ids, rotation=90, fontsize=8)
        ax.set_yticks(range(n), labels=matrix.ids, fontsize=8)
        ax.set_title(title)
        fig.colorbar(im, ax=ax, label="score / alignment length")
        fig.tight_layout()
        path = Path(path)
        fig.savefig(path, dpi=120)
    finally:
        plt.close(fig)
    return path
