"""Convergence figure for Monte Carlo estimates (needs matplotlib)."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import numpy as np


def plot_convergence(
    values: np.ndarray,
    path: str | Path,
    exact: Fraction | None = None,
    title: str = "",
) -> Path:
    """Running mean with a +-2 standard error band; dashed line at ``exact``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    n = np.arange(1, len(values) + 1)
    running = np.cumsum(values) / n
    sq = np.cumsum(values ** 2) / n
    var = np.maximum(sq - running ** 2, 0.0) * n / np.maximum(n - 1, 1)
    band = 2.0 * np.sqrt(var / n)

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(n, running, lw=1.2, label="running mean")
    ax.fill_between(n, running - band, running + band, alpha=0.25, lw=0, label="±2 s.e.")
    if exact is not None:
        ax.axhline(float(exact), color="k", ls="--", lw=1, label=f"exact = {exact}")
    ax.set_xscale("log")
    ax.set_xlabel("samples")
    ax.set_ylabel("estimate")
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
